#include "grosslat/gramgross.hpp"

#include <algorithm>
#include <stdexcept>

namespace grosslat {

namespace {

bool disc_residue(const BigInteger& d) {
  const BigInteger r = ((d % 4) + 4) % 4;
  return r == 0 || r == 3;
}

IntMatrix shape(const BigInteger& d1, const BigInteger& x, const BigInteger& y, const BigInteger& d2,
                const BigInteger& z, const BigInteger& d3) {
  return IntMatrix{{d1, x, y}, {x, d2, z}, {y, z, d3}};
}

bool matrix_less(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (a(r, c) != b(r, c)) return a(r, c) < b(r, c);
  return false;
}

struct Pair {
  BigInteger v;  // x or y
  BigInteger d;  // D2 or D3
  BigInteger n;
};

}  // namespace

bool quadratic_residue_precheck(const BigInteger& p, const BigInteger& d1) {
  if (d1 <= 0) throw std::invalid_argument("quadratic_residue_precheck: d1 must be positive");
  const BigInteger target = ((-4 * p) % d1 + d1) % d1;
  for (BigInteger x = 0; x < d1; ++x)
    if ((x * x) % d1 == target) return true;
  return false;
}

std::vector<GramCandidate> gram_gross(const BigInteger& p, const BigInteger& d1) {
  if (d1 <= 0) throw std::invalid_argument("gram_gross: REQUIRE D1 > 0");
  if (!disc_residue(d1)) throw std::invalid_argument("gram_gross: REQUIRE D1 = 0 or 3 mod 4");
  if (3 * d1 * d1 > 16 * p) throw std::invalid_argument("gram_gross: REQUIRE D1 <= (4/sqrt(3)) sqrt(p)");

  std::vector<GramCandidate> out;
  if (d1 == 3) {
    if (p % 3 == 2) {
      const BigInteger d = (4 * p + 1) / 3;
      const BigInteger z = -(2 * p - 1) / 3;
      out.push_back({shape(3, 1, 1, d, z, d), {1, d, 1, d, 1, z}});
    } else if (p == 3) {
      out.push_back({shape(3, 0, 0, 4, -2, 4), {0, 4, 0, 4, 1, -2}});
      out.push_back({shape(3, 0, 0, 4, 2, 4), {0, 4, 0, 4, 1, 2}});
    }
    return out;
  }

  const BigRational D1(d1), P(p);
  const BigInteger a = ceil(D1 / 4 - D1 * D1 / (16 * P));
  const BigInteger b = floor(2 * D1 / 7 + 7 * D1 / (16 * P));
  const BigInteger half = d1 / 2;

  std::vector<Pair> xs;
  for (BigInteger x = 0; x <= half; ++x) {
    const BigInteger num = 4 * p + x * x;
    if (num % d1 != 0) continue;
    const BigInteger d2 = num / d1;
    if (d2 < d1 || !disc_residue(d2)) continue;
    xs.push_back({x, d2, 0});
  }
  std::vector<Pair> ys;
  for (BigInteger n = a; n <= b; ++n) {
    if (n <= 0) continue;
    for (BigInteger y = 0; y <= half; ++y) {
      const BigInteger num = 4 * n * p + y * y;
      if (num % d1 != 0) continue;
      const BigInteger d3 = num / d1;
      if (d3 < d1 || !disc_residue(d3)) continue;
      ys.push_back({y, d3, n});
    }
  }

  const BigInteger four_p = 4 * p;
  for (const auto& [x, d2, unused] : xs) {
    for (const auto& [y, d3, n] : ys) {
      if (d2 > d3) continue;
      // D1 z^2 - 2xy z + (4p^2 + D3 x^2 + D2 y^2 - D1 D2 D3) = 0
      const BigInteger c0 = 4 * p * p + d3 * x * x + d2 * y * y - d1 * d2 * d3;
      const BigInteger disc = 4 * x * x * y * y - 4 * d1 * c0;
      if (disc < 0) continue;
      const auto root = exact_sqrt(disc);
      if (!root) continue;
      for (const BigInteger& num : {BigInteger(2 * x * y + *root), BigInteger(2 * x * y - *root)}) {
        if (num % (2 * d1) != 0) continue;
        const BigInteger z = num / (2 * d1);
        if (2 * abs(z) > d2) continue;
        if ((d2 * d3 - z * z) % four_p != 0) continue;
        GramCandidate c{shape(d1, x, y, d2, z, d3), {x, d2, y, d3, n, z}};
        const bool dup = std::any_of(out.begin(), out.end(),
                                     [&](const GramCandidate& o) { return o.gram == c.gram; });
        if (!dup) out.push_back(std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const GramCandidate& l, const GramCandidate& r) { return matrix_less(l.gram, r.gram); });
  return out;
}

std::vector<std::string> candidate_violations(const BigInteger& p, const GramCandidate& c) {
  std::vector<std::string> bad;
  const IntMatrix& g = c.gram;
  const BigInteger& d1 = g(0, 0);
  const BigInteger& d2 = g(1, 1);
  const BigInteger& d3 = g(2, 2);
  const BigInteger& x = g(0, 1);
  const BigInteger& y = g(0, 2);
  const BigInteger& z = g(1, 2);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < r; ++s)
      if (g(r, s) != g(s, r)) bad.emplace_back("symmetric");
  if (det(g) != 4 * p * p) bad.emplace_back("det");
  if (d1 * d2 - x * x != 4 * p) bad.emplace_back("d1d2-minor");
  if (d1 * d3 - y * y != 4 * c.provenance.n * p) bad.emplace_back("d1d3-minor");
  if ((d2 * d3 - z * z) % (4 * p) != 0) bad.emplace_back("d2d3-minor");
  if (x < 0 || y < 0 || 2 * x > d1 || 2 * y > d1) bad.emplace_back("xy-range");
  if (2 * abs(z) > d2) bad.emplace_back("z-range");
  if (!disc_residue(d1) || !disc_residue(d2) || !disc_residue(d3)) bad.emplace_back("residues");
  if (!(d1 <= d2 && d2 <= d3)) bad.emplace_back("ordered");
  return bad;
}

}  // namespace grosslat
