#pragma once

// Arithmetic in a definite quaternion algebra (a, b | Q) with basis 1, i, j, k,
// i^2 = a, j^2 = b, k = ij = -ji.

#include "grosslat/exact.hpp"

#include <array>
#include <memory>
#include <string>

namespace grosslat {

class QuaternionAlgebra {
 public:
  /// Structure constant: e_r * e_s = coef * e_index.
  struct Term {
    std::size_t index = 0;
    BigInteger coef;
  };

  /// Throws std::invalid_argument unless a < 0 and b < 0.
  QuaternionAlgebra(BigInteger a, BigInteger b, BigInteger p);

  static std::shared_ptr<const QuaternionAlgebra> make(BigInteger a, BigInteger b, BigInteger p);

  const BigInteger& a() const { return a_; }
  const BigInteger& b() const { return b_; }
  const BigInteger& ramified_prime() const { return p_; }

  const Term& product(std::size_t r, std::size_t s) const { return table_[r][s]; }

  bool operator==(const QuaternionAlgebra& o) const {
    return a_ == o.a_ && b_ == o.b_ && p_ == o.p_;
  }

  std::string to_string() const;

 private:
  BigInteger a_;
  BigInteger b_;
  BigInteger p_;
  std::array<std::array<Term, 4>, 4> table_;
};

using AlgebraPtr = std::shared_ptr<const QuaternionAlgebra>;

class QuaternionElement {
 public:
  using Coords = std::array<BigRational, 4>;

  explicit QuaternionElement(AlgebraPtr algebra);  // zero
  QuaternionElement(AlgebraPtr algebra, Coords coords);

  static QuaternionElement scalar(AlgebraPtr algebra, const BigRational& c);
  /// Basis element 1, i, j or k for index 0..3.
  static QuaternionElement basis(AlgebraPtr algebra, std::size_t index);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Coords& coords() const { return c_; }
  const BigRational& operator[](std::size_t i) const { return c_[i]; }

  QuaternionElement operator+(const QuaternionElement& o) const;
  QuaternionElement operator-(const QuaternionElement& o) const;
  QuaternionElement operator-() const;
  QuaternionElement operator*(const QuaternionElement& o) const;
  QuaternionElement operator*(const BigRational& s) const;
  QuaternionElement operator/(const BigRational& s) const;

  bool operator==(const QuaternionElement& o) const;
  bool is_zero() const;

  QuaternionElement conj() const;
  BigRational trd() const;
  BigRational nrd() const;

  bool is_integral() const;

  /// "c0 + c1*i + c2*j + c3*k"
  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  Coords c_;
};

QuaternionElement mul(const QuaternionElement& x, const QuaternionElement& y);
QuaternionElement conj(const QuaternionElement& x);
BigRational trd(const QuaternionElement& x);
BigRational nrd(const QuaternionElement& x);

/// Bilinear form (x, y) = trd(x * conj(y)) / 2; inner(x, x) = nrd(x).
BigRational inner(const QuaternionElement& x, const QuaternionElement& y);

/// Throws std::invalid_argument when the two algebras differ.
void require_same_algebra(const QuaternionAlgebra& a, const QuaternionAlgebra& b);

}  // namespace grosslat
