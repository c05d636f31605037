#pragma once

// Exact integer/rational arithmetic and integer-lattice linear algebra.
//
// BigInteger and BigRational are GMP's C++ classes. Lattices throughout the
// library are stored as an integer row basis together with a common positive
// denominator, so that every reduction step stays purely integral.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grosslat {

using BigInteger = mpz_class;
using BigRational = mpq_class;

/// Canonicalized rational from numerator/denominator.
BigRational make_rational(const BigInteger& num, const BigInteger& den = 1);

BigInteger floor_div(const BigInteger& a, const BigInteger& b);
BigInteger ceil_div(const BigInteger& a, const BigInteger& b);
BigInteger floor(const BigRational& q);
BigInteger ceil(const BigRational& q);

/// Returns the integer square root if `n` is a perfect square.
std::optional<BigInteger> exact_sqrt(const BigInteger& n);

bool is_prime(const BigInteger& n);
BigInteger next_prime(const BigInteger& n);  // least prime > n
std::vector<BigInteger> prime_divisors(BigInteger n);  // ascending, distinct

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const BigInteger& a, const BigInteger& p);

/// Row-major dense integer matrix with dimensions fixed at construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<BigInteger>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInteger& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInteger& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigInteger> row(std::size_t r) const;
  void set_row(std::size_t r, std::span<const BigInteger> values);
  void append_row(std::span<const BigInteger> values);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;

  /// gcd of all entries (0 for the zero matrix).
  BigInteger content() const;

  bool operator==(const IntMatrix& rhs) const;
  bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInteger> data_;
};

/// Row-style Hermite normal form of the row lattice of `m`: zero rows are
/// dropped, pivots are positive, entries above a pivot lie in [0, pivot).
IntMatrix hnf(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInteger det(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Integer coordinates of `v` in the lattice (1/denom) * rowspan(basis), or
/// nullopt when `v` is not a member. Throws std::invalid_argument on a
/// dimension mismatch.
std::optional<std::vector<BigInteger>> solve_in_lattice(const IntMatrix& basis,
                                                        const BigInteger& denom,
                                                        std::span<const BigRational> v);

/// A lattice given by an integer row basis and a common positive denominator,
/// kept in canonical form: basis in HNF and gcd(content(basis), denom) = 1.
struct ScaledLattice {
  IntMatrix basis;
  BigInteger denom{1};

  bool operator==(const ScaledLattice&) const = default;
};

/// Canonical lattice spanned by the given rational row vectors.
ScaledLattice lattice_from_rows(const std::vector<std::vector<BigRational>>& rows);
ScaledLattice canonicalize(IntMatrix basis, BigInteger denom);

/// Decimal rendering helper used by reports.
std::string to_string(const BigInteger& n);
std::string to_string(const BigRational& q);

}  // namespace grosslat
