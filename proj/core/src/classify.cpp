#include "grosslat/classify.hpp"

#include <algorithm>
#include <numeric>

namespace grosslat {

std::string to_string(SpecialJ s) {
  switch (s) {
    case SpecialJ::None: return "none";
    case SpecialJ::J0: return "j0";
    case SpecialJ::J1728: return "j1728";
    case SpecialJ::Both: return "both";
  }
  return "none";
}

std::string to_string(Embedding e) {
  switch (e) {
    case Embedding::SqrtMinusP: return "Z[sqrt(-p)]";
    case Embedding::HalfIntegral: return "Z[(1+sqrt(-p))/2]";
    case Embedding::Both: return "both";
    case Embedding::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

bool field_of_definition(const BigInteger& p, const BigInteger& d3) { return d3 >= p; }

SpecialJ special_j(const GrossLattice& lattice) {
  bool three = false, four = false;
  for (const auto& v : short_vectors(lll_reduce(lattice.gram).gram, 4)) {
    three = three || v.norm == 3;
    four = four || v.norm == 4;
  }
  if (three && four) return SpecialJ::Both;
  if (three) return SpecialJ::J0;
  if (four) return SpecialJ::J1728;
  return SpecialJ::None;
}

Embedding frobenius_embedding(const BigInteger& p, const MinimaTriple& minima, bool spine) {
  if (!spine) return Embedding::NotApplicable;
  if (p % 4 != 3) return Embedding::SqrtMinusP;
  if (minima.d3 == p + 1) return Embedding::Both;
  if (minima.d3 == p) return Embedding::HalfIntegral;
  return Embedding::SqrtMinusP;
}

std::vector<BigInteger> embedded_discriminants(const GrossLattice& lattice, const BigInteger& bound) {
  std::vector<BigInteger> out;
  // Primitivity and norms do not depend on the basis, so work in a reduced one.
  for (const auto& v : short_vectors(lll_reduce(lattice.gram).gram, bound)) {
    BigInteger g = gcd(gcd(v.coords[0], v.coords[1]), v.coords[2]);
    if (g != 1) continue;
    if (out.empty() || out.back() != v.norm) out.push_back(v.norm);
  }
  return out;
}

std::vector<std::string> validate_bounds(const BigInteger& p, const MinimaTriple& m, bool spine) {
  std::vector<std::string> bad;
  const BigRational P(p);
  const BigRational d3(m.d3);
  if (spine && m.d1 != 3) {
    if (d3 < P || d3 > P * BigRational(8, 7) + BigRational(7, 4)) bad.emplace_back("spine-d3-range");
  }
  if (spine && m.d1 == 3 && p != 3) {
    if (BigInteger(3 * m.d3) != 4 * p + 1) bad.emplace_back("j0-d3-closed-form");
  }
  if (!spine && d3 > P * BigRational(3, 5) + 5) bad.emplace_back("nonspine-d3-upper");
  const bool small_product = BigRational(m.d1 * m.d2) < P * BigRational(16, 3);
  if (small_product != spine) bad.emplace_back("spine-iff-d1d2");
  if (spine && p != 2 && m.d1 == m.d2) bad.emplace_back("spine-d1-ne-d2");
  if (spine && m.d1 != 3 && m.d2 == m.d3) bad.emplace_back("spine-d2-ne-d3");
  return bad;
}

StructuralFlags structural_flags(const IntMatrix& gram, const MinimaTriple& m) {
  StructuralFlags f;
  f.orthogonal = gram(0, 1) == 0 && gram(0, 2) == 0 && gram(1, 2) == 0;
  f.well_rounded = m.d1 == m.d2 && m.d2 == m.d3;
  return f;
}

Classification classify(const GrossLattice& lattice, const MinimalBasis& basis) {
  Classification c;
  const BigInteger& p = lattice.prime();
  c.spine = field_of_definition(p, basis.minima.d3);
  c.special_j = special_j(lattice);
  c.embedding = frobenius_embedding(p, basis.minima, c.spine);
  const auto f = structural_flags(basis.gram, basis.minima);
  c.orthogonal = f.orthogonal;
  c.well_rounded = f.well_rounded;
  return c;
}

}  // namespace grosslat
