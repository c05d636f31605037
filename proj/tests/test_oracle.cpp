#include <doctest.h>

#include "grosslat/oracle.hpp"
#include "support/naive.hpp"

#include <set>

using namespace grosslat;

namespace {

long legendre_symbol(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// j-invariants in F_p whose curves have p + 1 points, by direct point count.
std::set<long> supersingular_by_point_count(long p) {
  std::set<long> out;
  for (long j = 0; j < p; ++j) {
    long a, b;
    if (j == 0) {
      a = 0, b = 1;
    } else if (j == 1728 % p) {
      a = 1, b = 0;
    } else {
      const long c = (1728 - j) % p + p;
      a = 3 * j % p * c % p;
      b = 2 * j % p * c % p * c % p;
    }
    long trace = 0;
    for (long x = 0; x < p; ++x) trace -= legendre_symbol((x * x % p * x + a * x + b) % p, p);
    if (trace == 0) out.insert(j);
  }
  return out;
}

}  // namespace

TEST_CASE("Deuring polynomials") {
  CHECK(deuring_polynomial(3) == std::vector<std::uint64_t>{1, 1});
  CHECK(deuring_polynomial(5) == std::vector<std::uint64_t>{1, 4, 1});
  CHECK(deuring_polynomial(7) == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK_THROWS_AS(deuring_polynomial(9), std::invalid_argument);
  CHECK_THROWS_AS(deuring_polynomial(2), std::invalid_argument);
}

TEST_CASE("binomial coefficients of the Deuring polynomial") {
  for (long p : {11L, 29L, 101L}) {
    const auto h = deuring_polynomial(p);
    const long m = (p - 1) / 2;
    REQUIRE(h.size() == static_cast<std::size_t>(m + 1));
    for (long i = 0; i <= m; ++i) {
      BigInteger c;
      mpz_bin_uiui(c.get_mpz_t(), m, i);
      const BigInteger sq = (c * c) % p;
      CHECK(h[i] == sq.get_ui());
    }
  }
}

TEST_CASE("finite field arithmetic") {
  const Fp2Field F(7);
  CHECK(F.nonresidue() == 3);
  const Fp2 x{2, 5};
  CHECK(F.mul(x, F.inv(x)) == Fp2{1, 0});
  CHECK(F.frobenius(x) == F.pow(x, 7));
  CHECK(F.mul(x, F.frobenius(x)).b == 0);
  CHECK(to_string(Fp2{4, 0}) == "4");
  CHECK(to_string(Fp2{4, 3}) == "4+3*t");
  CHECK_THROWS_AS(FpField(7).inv(0), std::domain_error);
  CHECK(FpField(13).is_square(10));
  CHECK_FALSE(FpField(13).is_square(5));
}

TEST_CASE("supersingular sets for small primes") {
  const auto s11 = supersingular_j_set(11);
  REQUIRE(s11.count() == 2);
  CHECK(s11.j_list[0].j == Fp2{0, 0});
  CHECK(s11.j_list[1].j == Fp2{1, 0});
  CHECK(s11.orbit_count == 2);
  const auto s13 = supersingular_j_set(13);
  REQUIRE(s13.count() == 1);
  CHECK(s13.j_list[0].j == Fp2{5, 0});
  CHECK(s13.orbit_count == 1);
  const auto s37 = supersingular_j_set(37);
  CHECK(s37.count() == 3);
  CHECK(s37.spine_count == 1);
  CHECK(s37.orbit_count == 2);
  CHECK(spine_count(11) == 2);
  CHECK(supersingular_j_set(2).count() == 1);
  CHECK(supersingular_j_set(3).count() == 1);
  CHECK_THROWS_AS(supersingular_j_set(15), std::invalid_argument);
}

TEST_CASE("counts agree with the class number formula and with point counts") {
  for (long p : naive::primes_up_to(300)) {
    CAPTURE(p);
    const auto s = supersingular_j_set(p);
    CHECK(s.count() == eichler_deuring_count(p));
    CHECK(s.orbit_count == s.spine_count + (s.count() - s.spine_count) / 2);
    if (p >= 5) {
      std::set<long> in_fp;
      for (const auto& j : s.j_list)
        if (j.in_fp) in_fp.insert(static_cast<long>(j.j.a));
      CHECK(in_fp == supersingular_by_point_count(p));
    }
  }
}
