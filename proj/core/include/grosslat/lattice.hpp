#pragma once

// Gross lattices O^T = { 2x - trd(x) : x in O } of maximal orders, short
// vector enumeration, successive minima and normalized successive minimal
// bases.

#include "grosslat/exact.hpp"
#include "grosslat/orders.hpp"
#include "grosslat/quat.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace grosslat {

using Coords3 = std::array<BigInteger, 3>;

struct GrossLattice {
  AlgebraPtr algebra;
  std::array<QuaternionElement, 3> basis;
  IntMatrix gram;  // 3x3, (beta_r, beta_s)

  const BigInteger& prime() const { return algebra->ramified_prime(); }
  /// sum c_r * beta_r
  QuaternionElement vector(const Coords3& c) const;
};

/// Applies x -> 2x - trd(x) to the order basis and takes the HNF of the images.
/// Throws std::domain_error when the image does not have rank 3 or the Gram
/// matrix is not integral.
GrossLattice gross_lattice(const QuaternionOrder& order);

/// v^T G v
BigInteger quadratic_form(const IntMatrix& gram, const Coords3& v);

struct LatticeVector {
  Coords3 coords;
  BigInteger norm;
};

/// All nonzero v with v^T G v <= bound, one per +/- pair (first nonzero
/// coordinate positive), sorted by (norm, coordinates). Box radii come from
/// the diagonal of G^{-1}; membership is filtered exactly. Throws
/// std::invalid_argument when G is not positive definite.
std::vector<LatticeVector> short_vectors(const IntMatrix& gram, const BigInteger& bound);

/// Integral basis change U (unimodular, rows in the input coordinates) and
/// the Gram matrix U G U^T of an LLL-reduced basis (delta = 99/100).
struct ReducedGram {
  IntMatrix transform;
  IntMatrix gram;
};
ReducedGram lll_reduce(const IntMatrix& gram);

struct MinimaTriple {
  BigInteger d1, d2, d3;

  BigInteger product() const { return d1 * d2 * d3; }
  bool operator==(const MinimaTriple& o) const { return d1 == o.d1 && d2 == o.d2 && d3 == o.d3; }
  bool operator<(const MinimaTriple& o) const;
  std::string to_string() const;
};

/// Order in which equal-norm candidates are tried.
enum class TieBreak { LexAscending, LexDescending };

struct MinimalBasis {
  IntMatrix coords;  // rows: beta_1..beta_3 over the GrossLattice basis
  std::vector<QuaternionElement> basis;  // empty when built from a bare Gram matrix
  IntMatrix gram;  // [[D1, x, y], [x, D2, z], [y, z, D3]]
  MinimaTriple minima;
};

/// Normalized successive minimal basis, chosen greedily: shortest vector,
/// shortest independent vector, shortest vector completing a unimodular basis;
/// then signs flipped so (beta1, beta2) >= 0 and (beta1, beta3) >= 0.
/// Throws std::logic_error if no norm-D3 candidate completes a basis.
MinimalBasis minimal_basis(const GrossLattice& lattice, TieBreak tie = TieBreak::LexAscending);

/// Same selection, working from an explicit Gram matrix and prime.
MinimalBasis minimal_basis_from_gram(const IntMatrix& gram, const BigInteger& p,
                                     TieBreak tie = TieBreak::LexAscending);

/// Successive minima read greedily off a norm-sorted vector list (rank jumps).
/// Returns nullopt if the list spans less than rank 3.
std::optional<MinimaTriple> greedy_minima(const std::vector<LatticeVector>& sorted);

/// D_i D_j - G_ij^2 for the pair (i, j), 0-based.
BigInteger rank2_det(const IntMatrix& gram, std::size_t i, std::size_t j);

/// Every distinct rank-2 sublattice spanned by a pair of independent vectors
/// of norms D1 and D2, as 2x3 HNF coordinate matrices over the lattice basis,
/// sorted.
std::vector<IntMatrix> minimal_rank2_sublattices(const GrossLattice& lattice);

/// The first of minimal_rank2_sublattices().
IntMatrix minimal_rank2_sublattice(const GrossLattice& lattice);

struct OrthogonalizationData {
  BigRational mu21, mu31, mu32;
  BigRational delta;  // (b3, b2) / (b2, b2)
};

OrthogonalizationData orthogonalization(const IntMatrix& gram);

}  // namespace grosslat
