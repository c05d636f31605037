#pragma once

// Breadth-first walk over ell-neighbors of maximal orders, keeping one
// representative per type. Types are told apart by their successive minima,
// which determine the Gross lattice (and so the order) up to isomorphism.

#include "grosslat/classify.hpp"
#include "grosslat/lattice.hpp"
#include "grosslat/orders.hpp"

#include <vector>

namespace grosslat {

struct TypeRecord {
  QuaternionOrder order;
  GrossLattice lattice;
  MinimalBasis minimal;
  Classification flags;

  const MinimaTriple& minima() const { return minimal.minima; }
  const IntMatrix& gram() const { return minimal.gram; }
};

/// 2, or 3 when p = 2.
BigInteger default_neighbor_prime(const BigInteger& p);

/// One record per type of maximal order in B_p, sorted by minima triple.
/// Throws std::invalid_argument when p is not prime or ell is not a prime
/// different from p.
std::vector<TypeRecord> enumerate_types(const BigInteger& p);
std::vector<TypeRecord> enumerate_types(const BigInteger& p, const BigInteger& ell);

/// Builds the record for a single maximal order.
TypeRecord make_type_record(const QuaternionOrder& order);

}  // namespace grosslat
