#pragma once

// Orders and left ideals in a quaternion algebra B_p, stored as canonical
// (HNF basis, denominator) lattices over the coordinates of 1, i, j, k.

#include "grosslat/exact.hpp"
#include "grosslat/quat.hpp"

#include <array>
#include <vector>

namespace grosslat {

/// Canonical lattice spanned by the given elements (all from one algebra).
ScaledLattice span_of(const std::vector<QuaternionElement>& elements);

/// Element given by lattice row `i`.
QuaternionElement lattice_element(const AlgebraPtr& algebra, const ScaledLattice& lattice,
                                  std::size_t i);

/// [L1 : L2] for full-rank lattices L2 in L1, as a rational volume ratio.
BigRational lattice_index(const ScaledLattice& outer, const ScaledLattice& inner);

class QuaternionOrder {
 public:
  /// Lattice spanned by `generators`; throws std::invalid_argument unless the
  /// span has rank 4. Ring axioms are not checked here, see is_order().
  static QuaternionOrder from_generators(AlgebraPtr algebra,
                                         const std::vector<QuaternionElement>& generators);
  QuaternionOrder(AlgebraPtr algebra, ScaledLattice lattice);

  const AlgebraPtr& algebra() const { return algebra_; }
  const ScaledLattice& lattice() const { return lattice_; }
  const BigInteger& prime() const { return algebra_->ramified_prime(); }

  QuaternionElement element(std::size_t i) const;
  std::array<QuaternionElement, 4> basis() const;

  bool contains(const QuaternionElement& x) const;
  /// Coordinates of `x` over basis(), if x is a member.
  std::optional<std::vector<BigInteger>> coordinates(const QuaternionElement& x) const;

  bool operator==(const QuaternionOrder& o) const {
    return *algebra_ == *o.algebra_ && lattice_ == o.lattice_;
  }

 private:
  AlgebraPtr algebra_;
  ScaledLattice lattice_;
};

/// Contains 1, closed under multiplication, every basis element integral.
bool is_order(const QuaternionOrder& order);

/// Positive square root of |det(trd(e_i e_j))|. Throws std::domain_error when
/// the trace pairing is not integral or its determinant is not a square.
BigInteger reduced_discriminant(const QuaternionOrder& order);

/// A maximal order of B_p in a fixed presentation depending on p mod 12.
QuaternionOrder standard_maximal_order(const BigInteger& p);

/// Least prime q = 3 mod 4 with (p/q) = -1, used to present B_p as (-q, -p)
/// when p = 1 mod 12.
BigInteger auxiliary_prime(const BigInteger& p);

/// Grows `order` to a maximal order (reduced discriminant = p) by adjoining
/// integral elements of (1/m)O for primes m dividing discrd/p. Throws
/// std::runtime_error when no extension exists, which signals that the
/// algebra does not present B_p.
QuaternionOrder saturate_to_maximal(QuaternionOrder order);

struct QuaternionIdeal {
  QuaternionOrder left_order;
  ScaledLattice lattice;
  BigInteger norm;

  QuaternionElement element(std::size_t i) const;
  std::array<QuaternionElement, 4> basis() const;
};

/// The ell + 1 left ideals O*alpha + O*ell of reduced norm ell, deduplicated by
/// HNF and sorted by lattice. Throws std::logic_error if the count is wrong.
std::vector<QuaternionIdeal> left_ideals_of_norm(const QuaternionOrder& order,
                                                 const BigInteger& ell);

/// O_R(I) = (1/nrd(I)) * span{ conj(b_r) b_s }. Throws std::logic_error when
/// the result is not an order.
QuaternionOrder right_order(const QuaternionIdeal& ideal);

/// Two-sided principal ideal O * x (used in tests and for conjugation).
QuaternionIdeal principal_left_ideal(const QuaternionOrder& order, const QuaternionElement& x);

}  // namespace grosslat
