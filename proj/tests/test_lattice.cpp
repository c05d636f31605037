#include <doctest.h>

#include "grosslat/lattice.hpp"
#include "grosslat/type_enumeration.hpp"
#include "support/naive.hpp"

#include <set>

using namespace grosslat;

namespace {

const TypeRecord& type_with_d1(const std::vector<TypeRecord>& types, long d1) {
  for (const auto& t : types)
    if (t.minima().d1 == d1) return t;
  throw std::runtime_error("no type with that first minimum");
}

}  // namespace

TEST_CASE("Gross lattice of the p = 5 order") {
  const auto types = enumerate_types(5);
  REQUIRE(types.size() == 1);
  const auto& t = types[0];
  CHECK(det(t.lattice.gram) == 100);
  CHECK(t.gram() == IntMatrix{{3, 1, 1}, {1, 7, -3}, {1, -3, 7}});
  CHECK(t.minima() == MinimaTriple{3, 7, 7});
  CHECK(t.minima().to_string() == "(3,7,7)");
  for (std::size_t r = 0; r < 3; ++r) {
    const auto& b = t.minimal.basis[r];
    CHECK(b.trd() == 0);
    CHECK(b.nrd() == t.gram()(r, r));
  }
  CHECK(rank2_det(t.gram(), 0, 1) == 20);
  CHECK(rank2_det(t.gram(), 0, 2) == 20);
}

TEST_CASE("the Gross lattice consists of trace-zero elements 2x - trd(x)") {
  const auto O = standard_maximal_order(23);
  const auto L = gross_lattice(O);
  CHECK(det(L.gram) == 4 * 23 * 23);
  for (const auto& x : O.basis()) {
    const auto image = x * BigRational(2) - QuaternionElement::scalar(O.algebra(), x.trd());
    CHECK(span_of({L.basis[0], L.basis[1], L.basis[2], image}).basis.rows() == 3);
  }
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s) CHECK(L.gram(r, s) == inner(L.basis[r], L.basis[s]));
}

TEST_CASE("short vectors at p = 11") {
  const auto types = enumerate_types(11);
  REQUIRE(types.size() == 2);
  CHECK(types[0].minima() == MinimaTriple{3, 15, 15});
  CHECK(types[1].minima() == MinimaTriple{4, 11, 12});
  const IntMatrix& g = types[1].gram();
  CHECK(g == IntMatrix{{4, 0, 2}, {0, 11, 0}, {2, 0, 12}});
  const auto vs = short_vectors(g, 11);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].coords == Coords3{1, 0, 0});
  CHECK(vs[0].norm == 4);
  CHECK(vs[1].coords == Coords3{0, 1, 0});
  CHECK(vs[1].norm == 11);
  CHECK(short_vectors(g, 2).empty());
  CHECK(rank2_det(g, 0, 1) == 44);
  CHECK(rank2_det(g, 0, 2) == 44);
  CHECK(rank2_det(g, 1, 2) == 132);
}

TEST_CASE("short_vectors rejects indefinite forms") {
  CHECK_THROWS_AS(short_vectors(IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}, 5), std::invalid_argument);
  CHECK_THROWS_AS(short_vectors(IntMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}, 5), std::invalid_argument);
}

TEST_CASE("short_vectors matches full cube enumeration") {
  // Reduced Gram matrices have small coefficients, so a cube of radius 6
  // contains every vector of norm up to 2p for these primes.
  for (long p : {2L, 3L, 13L, 29L, 61L}) {
    for (const auto& t : enumerate_types(p)) {
      CAPTURE(p);
      const IntMatrix g = lll_reduce(t.gram()).gram;
      const auto fast = short_vectors(g, 2 * p);
      const auto slow = naive::cube_vectors(g, 2 * p, 6);
      CHECK(naive::norm_histogram(fast) == naive::norm_histogram(slow));
      for (std::size_t i = 1; i < fast.size(); ++i) CHECK(fast[i - 1].norm <= fast[i].norm);
      for (const auto& v : fast) {
        CHECK(quadratic_form(g, v.coords) == v.norm);
        const BigInteger r = v.norm % 4;
        CHECK((r == 0 || r == 3));
      }
    }
  }
}

TEST_CASE("LLL transforms are unimodular and preserve the form") {
  for (const auto& t : enumerate_types(101)) {
    const auto red = lll_reduce(t.lattice.gram);
    CHECK(abs(det(red.transform)) == 1);
    CHECK(red.transform * t.lattice.gram * red.transform.transpose() == red.gram);
    CHECK(det(red.gram) == 4 * 101 * 101);
  }
}

TEST_CASE("minimal bases at p = 13 and p = 2") {
  const auto t13 = enumerate_types(13);
  REQUIRE(t13.size() == 1);
  CHECK(t13[0].gram() == IntMatrix{{7, 2, 1}, {2, 8, 4}, {1, 4, 15}});
  const auto subs = minimal_rank2_sublattices(t13[0].lattice);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0] == minimal_rank2_sublattice(t13[0].lattice));
  CHECK(rank2_det(t13[0].gram(), 0, 1) == 52);

  const auto t2 = enumerate_types(2);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].gram() == IntMatrix{{3, 1, 1}, {1, 3, -1}, {1, -1, 3}});
}

TEST_CASE("j = 0 types carry three rank-2 sublattices of determinant 4p") {
  // Besides <b1, b2> and <b1, b3>, the vector b2 + b3 - b1 has norm D2 and
  // together with b1 spans a third sublattice of determinant 4p.
  for (long p : {5L, 11L, 17L, 23L, 29L}) {
    CAPTURE(p);
    const auto types = enumerate_types(p);
    const auto& t = type_with_d1(types, 3);
    const auto& g = t.gram();
    const Coords3 v{-1, 1, 1};
    CHECK(quadratic_form(g, v) == g(1, 1));
    const auto subs = minimal_rank2_sublattices(t.lattice);
    CHECK(subs.size() == 3);
    for (const auto& s : subs) CHECK(det(s * t.lattice.gram * s.transpose()) == 4 * p);
  }
}

TEST_CASE("minimal basis properties over many primes") {
  for (long p : naive::primes_up_to(110)) {
    for (const auto& t : enumerate_types(p)) {
      CAPTURE(p);
      const auto& mb = t.minimal;
      CHECK(abs(det(mb.coords)) == 1);
      CHECK(mb.coords * t.lattice.gram * mb.coords.transpose() == mb.gram);
      CHECK(mb.gram(0, 1) >= 0);
      CHECK(mb.gram(0, 2) >= 0);
      CHECK(mb.minima.d1 <= mb.minima.d2);
      CHECK(mb.minima.d2 <= mb.minima.d3);
      const auto sorted = short_vectors(lll_reduce(t.gram()).gram, mb.minima.d3);
      CHECK(greedy_minima(sorted) == mb.minima);
      if (p != 3) {
        const auto desc = minimal_basis(t.lattice, TieBreak::LexDescending);
        if (mb.minima.d3 >= p) CHECK(desc.gram == mb.gram);
        CHECK(desc.minima == mb.minima);
      }
      const auto from_gram = minimal_basis_from_gram(t.lattice.gram, p);
      CHECK(from_gram.gram == mb.gram);
      CHECK(from_gram.basis.empty());
      const auto o = orthogonalization(mb.gram);
      CHECK(abs(o.mu21) <= BigRational(1, 2));
      CHECK(abs(o.mu31) <= BigRational(1, 2));
      CHECK(abs(o.delta) <= BigRational(1, 2));
    }
  }
}

TEST_CASE("orthogonalization coefficients") {
  const auto o5 = orthogonalization(IntMatrix{{3, 1, 1}, {1, 7, -3}, {1, -3, 7}});
  CHECK(o5.mu21 == BigRational(1, 3));
  CHECK(o5.mu31 == BigRational(1, 3));
  CHECK(o5.delta == BigRational(-3, 7));
  const auto o11 = orthogonalization(IntMatrix{{4, 0, 2}, {0, 11, 0}, {2, 0, 12}});
  CHECK(o11.mu21 == 0);
  CHECK(o11.mu31 == BigRational(1, 2));
  CHECK(o11.delta == 0);
  const auto diag = orthogonalization(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
  CHECK(diag.mu21 == 0);
  CHECK(diag.mu32 == 0);
}

TEST_CASE("greedy minima") {
  std::vector<LatticeVector> line{{{1, 0, 0}, 3}, {{2, 0, 0}, 12}};
  CHECK_FALSE(greedy_minima(line).has_value());
  std::vector<LatticeVector> full{{{1, 0, 0}, 3}, {{2, 0, 0}, 12}, {{0, 1, 0}, 15}, {{0, 0, 1}, 15}};
  CHECK(greedy_minima(full) == MinimaTriple{3, 15, 15});
  CHECK(MinimaTriple{3, 15, 15} < MinimaTriple{4, 11, 12});
  CHECK(MinimaTriple{3, 15, 15}.product() == 675);
}
