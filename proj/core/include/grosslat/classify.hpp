#pragma once

// Reading field of definition, special j-invariants and Frobenius-order
// embeddings off Gross lattice data, plus the bound checks every type must
// satisfy.

#include "grosslat/exact.hpp"
#include "grosslat/lattice.hpp"

#include <string>
#include <vector>

namespace grosslat {

enum class SpecialJ { None, J0, J1728, Both };
enum class Embedding { SqrtMinusP, HalfIntegral, Both, NotApplicable };

std::string to_string(SpecialJ s);   // "none", "j0", "j1728", "both"
std::string to_string(Embedding e);  // "Z[sqrt(-p)]", "Z[(1+sqrt(-p))/2]", "both", "not-applicable"

struct StructuralFlags {
  bool orthogonal = false;
  bool well_rounded = false;
};

struct Classification {
  bool spine = false;  // j in F_p
  SpecialJ special_j = SpecialJ::None;
  Embedding embedding = Embedding::NotApplicable;
  bool orthogonal = false;
  bool well_rounded = false;
};

/// Spine iff D3 >= p.
bool field_of_definition(const BigInteger& p, const BigInteger& d3);

/// j = 0 iff the lattice has a vector of norm 3, j = 1728 iff it has one of
/// norm 4.
SpecialJ special_j(const GrossLattice& lattice);

/// For spine types at p = 3 mod 4: Z[(1+sqrt(-p))/2] iff D3 in {p, p+1}, both
/// when D3 = p+1. Other spine types report Z[sqrt(-p)]; non-spine types
/// report NotApplicable.
Embedding frobenius_embedding(const BigInteger& p, const MinimaTriple& minima, bool spine);

/// All d <= bound with a primitive lattice vector of norm d, ascending.
std::vector<BigInteger> embedded_discriminants(const GrossLattice& lattice, const BigInteger& bound);

/// Identifiers of violated bound rules (empty when everything holds):
///   spine-d3-range      spine, D1 != 3: p <= D3 <= 8p/7 + 7/4
///   j0-d3-closed-form   spine, D1 = 3, p != 3: D3 = (4p+1)/3
///   nonspine-d3-upper   not spine: D3 <= 3p/5 + 5
///   spine-iff-d1d2      spine iff D1 D2 < 16p/3
///   spine-d1-ne-d2      spine, p != 2: D1 != D2
///   spine-d2-ne-d3      spine, D1 != 3: D2 != D3
std::vector<std::string> validate_bounds(const BigInteger& p, const MinimaTriple& minima, bool spine);

StructuralFlags structural_flags(const IntMatrix& gram, const MinimaTriple& minima);

/// Everything above for one lattice and its normalized minimal basis.
Classification classify(const GrossLattice& lattice, const MinimalBasis& basis);

}  // namespace grosslat
