#include <doctest.h>

#include "grosslat/quat.hpp"
#include "support/naive.hpp"

#include <random>

using namespace grosslat;

namespace {

QuaternionElement q(const AlgebraPtr& A, BigRational c0, BigRational c1, BigRational c2,
                    BigRational c3) {
  return QuaternionElement(A, {c0, c1, c2, c3});
}

}  // namespace

TEST_CASE("basis relations in (-1, -1)") {
  const auto A = QuaternionAlgebra::make(-1, -1, 2);
  const auto one = QuaternionElement::basis(A, 0);
  const auto i = QuaternionElement::basis(A, 1);
  const auto j = QuaternionElement::basis(A, 2);
  const auto k = QuaternionElement::basis(A, 3);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == -one);
  CHECK(k * k == -one);
  CHECK((one + i) * (one - i) == QuaternionElement::scalar(A, 2));
  const auto hurwitz = (one + i + j + k) / BigRational(2);
  CHECK(hurwitz.nrd() == 1);
  CHECK(hurwitz.trd() == 1);
  CHECK(hurwitz.is_integral());
  CHECK_FALSE((i / BigRational(2)).is_integral());
}

TEST_CASE("structure constants in (-3, -7)") {
  const auto A = QuaternionAlgebra::make(-3, -7, 7);
  const auto i = QuaternionElement::basis(A, 1);
  const auto j = QuaternionElement::basis(A, 2);
  const auto k = QuaternionElement::basis(A, 3);
  CHECK(i * i == QuaternionElement::scalar(A, -3));
  CHECK(j * j == QuaternionElement::scalar(A, -7));
  CHECK(k * k == QuaternionElement::scalar(A, -21));
  CHECK(j * k == i * BigRational(7));
  CHECK(k * i == j * BigRational(3));
  CHECK(A->product(3, 3).index == 0);
  CHECK(A->product(3, 3).coef == -21);
}

TEST_CASE("norm and trace formulas") {
  const auto A = QuaternionAlgebra::make(-2, -5, 5);
  const auto x = q(A, 1, 2, 3, 4);
  CHECK(x.nrd() == 1 + 2 * 4 + 5 * 9 + 10 * 16);
  CHECK(x.trd() == 2);
  CHECK(x.conj() == q(A, 1, -2, -3, -4));
  CHECK(inner(x, x) == x.nrd());
}

TEST_CASE("algebras must be definite and elements must share one") {
  CHECK_THROWS_AS(QuaternionAlgebra(1, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(QuaternionAlgebra(-1, 0, 2), std::invalid_argument);
  const auto A = QuaternionAlgebra::make(-1, -1, 2);
  const auto B = QuaternionAlgebra::make(-1, -3, 3);
  CHECK_THROWS_AS(QuaternionElement::basis(A, 1) * QuaternionElement::basis(B, 1),
                  std::invalid_argument);
}

TEST_CASE("multiplication agrees with the expanded product formula") {
  std::mt19937_64 rng(11);
  const std::array<std::pair<int, int>, 4> params{{{-1, -1}, {-1, -11}, {-7, -13}, {-3, -5}}};
  for (const auto& [a, b] : params) {
    const auto A = QuaternionAlgebra::make(a, b, 2);
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = naive::random_q4(rng), y = naive::random_q4(rng), z = naive::random_q4(rng);
      const QuaternionElement X(A, x), Y(A, y), Z(A, z);
      CHECK((X * Y).coords() == naive::mul(a, b, x, y));
      CHECK((X * Y) * Z == X * (Y * Z));
      CHECK((X * Y).nrd() == X.nrd() * Y.nrd());
      CHECK((X * Y).conj() == Y.conj() * X.conj());
      CHECK(X * X.conj() == QuaternionElement::scalar(A, X.nrd()));
      CHECK(X.trd() == (X + X.conj())[0]);
      CHECK(X.nrd() >= 0);
    }
  }
}
