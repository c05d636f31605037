#pragma once

// The thirteen rational j-invariants with complex multiplication by an order
// of class number one: order data, supersingular congruences, the constants
// N_E, and closed-form Gram matrices of their reductions.

#include "grosslat/exact.hpp"
#include "grosslat/type_enumeration.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace grosslat {

struct CmRow {
  std::string j_label;  // "0", "1728", "-15^3", "2*30^3", ...
  long d = 0;           // the CM order has discriminant -d
  long f = 0;           // conductor
  long field_disc = 0;  // discriminant of the CM field (negative), d = f^2 |field_disc|
  long modulus = 0;     // p is supersingular iff p mod modulus lies in `residues`
  std::vector<long> residues;
  long n_e = 0;

  bool supersingular_at(const BigInteger& p) const;
  /// (d + 1)^2 / 4
  BigRational quarter_bound() const;
};

/// All 13 rows ordered by d.
const std::vector<CmRow>& cm_rows();

/// Row by label; also accepts "12^3" for 1728. Throws std::invalid_argument
/// for an unknown label.
const CmRow& find_cm_row(const std::string& label);

enum class ClosedFormFamily { J0, J1728, Minus15Cubed, D1Twenty };

std::string to_string(ClosedFormFamily f);

/// The family attached to a row (j = 0, 1728, -15^3), if any.
std::optional<ClosedFormFamily> closed_form_family(const CmRow& row);

/// Whether the closed form is stated for p.
bool closed_form_applies(ClosedFormFamily family, const BigInteger& p);

/// The normalized Gram matrix of the family at p. Throws std::invalid_argument
/// when the family does not apply at p.
IntMatrix closed_form_gram(ClosedFormFamily family, const BigInteger& p);

/// Supplies the enumerated types for a prime (lets callers share a cache).
using TypeProvider = std::function<const std::vector<TypeRecord>&(const BigInteger&)>;

struct NeWitness {
  BigInteger p;
  std::size_t type_index = 0;  // within the provider's list
  BigInteger d1;
};

struct NeResult {
  BigInteger n_e;
  std::vector<NeWitness> witnesses;  // one per odd supersingular prime <= p_max
};

/// For every odd supersingular p <= p_max, finds the unique type with a
/// primitive vector of norm d and reads its D1. Returns the least supersingular
/// prime from which on D1 = d holds up to p_max. Throws std::logic_error when
/// zero or several types carry such a vector, and std::invalid_argument when
/// p_max < (d+1)^2/4.
NeResult recompute_ne(const CmRow& row, const BigInteger& p_max, const TypeProvider& types);

/// Index of the unique type with a primitive vector of norm d (see above).
std::size_t cm_type_index(const std::vector<TypeRecord>& types, long d);

}  // namespace grosslat
