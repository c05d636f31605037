#include "grosslat/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grosslat {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

BigInteger isqrt(const BigInteger& n) {
  BigInteger r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool fits(const BigInteger& v, unsigned bits) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= bits;
}

Coords3 cross(const Coords3& u, const Coords3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero(const Coords3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

BigInteger dot(const Coords3& u, const Coords3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

BigInteger det3(const Coords3& a, const Coords3& b, const Coords3& c) { return dot(a, cross(b, c)); }

BigInteger bilinear(const IntMatrix& g, const Coords3& u, const Coords3& v) {
  BigInteger s = 0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) s += u[r] * g(r, c) * v[c];
  return s;
}

void normalize_sign(Coords3& v) {
  for (const auto& c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& x : v) x = -x;
    return;
  }
}

Coords3 row3(const IntMatrix& m, std::size_t r) { return {m(r, 0), m(r, 1), m(r, 2)}; }

IntMatrix from_rows(const std::array<Coords3, 3>& rows) {
  IntMatrix m(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = rows[r][c];
  return m;
}

// Gram-Schmidt data of a Gram matrix: mu(i, j) for j < i and squared lengths.
struct Gso {
  std::array<std::array<BigRational, 3>, 3> mu;
  std::array<BigRational, 3> b;
};

Gso gso(const IntMatrix& g, std::size_t n) {
  Gso out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      BigRational s = g(i, j);
      for (std::size_t l = 0; l < j; ++l) s -= out.mu[j][l] * out.mu[i][l] * out.b[l];
      out.mu[i][j] = s / out.b[j];
    }
    BigRational s = g(i, i);
    for (std::size_t l = 0; l < i; ++l) s -= out.mu[i][l] * out.mu[i][l] * out.b[l];
    out.b[i] = s;
  }
  return out;
}

BigInteger round_nearest(const BigRational& q) { return floor(q + BigRational(1, 2)); }

void require_square3(const IntMatrix& gram) {
  if (gram.rows() != 3 || gram.cols() != 3) throw std::invalid_argument("expected a 3x3 Gram matrix");
}

void require_positive_definite(const IntMatrix& g) {
  require_square3(g);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (g(r, c) != g(c, r)) throw std::invalid_argument("Gram matrix is not symmetric");
  const BigInteger m1 = g(0, 0);
  const BigInteger m2 = g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1);
  if (m1 <= 0 || m2 <= 0 || det(g) <= 0)
    throw std::invalid_argument("Gram matrix is not positive definite");
}

// Box enumeration with a fixed-width accumulator when everything is small.
template <typename Int, typename Emit>
void enumerate_box(const std::array<Int, 9>& g, Int bound, const std::array<Int, 3>& r, Emit&& emit) {
  for (Int a = 0; a <= r[0]; ++a) {
    const Int b_lo = a == 0 ? Int(0) : Int(-r[1]);
    const Int q_aa = g[0] * a * a;
    for (Int b = b_lo; b <= r[1]; ++b) {
      const Int c_lo = (a == 0 && b == 0) ? Int(1) : Int(-r[2]);
      const Int q_ab = q_aa + 2 * g[1] * a * b + g[4] * b * b;
      const Int lin = 2 * (g[2] * a + g[5] * b);
      for (Int c = c_lo; c <= r[2]; ++c) {
        const Int q = q_ab + c * (lin + g[8] * c);
        if (q <= bound) emit(a, b, c, q);
      }
    }
  }
}

BigInteger to_big(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  const auto hi = static_cast<unsigned long>(u >> 64);
  const auto lo = static_cast<unsigned long>(u);
  BigInteger r = hi;
  r <<= 64;
  r += lo;
  return neg ? BigInteger(-r) : r;
}

std::vector<LatticeVector> sorted_candidates(const ReducedGram& red, const BigInteger& bound,
                                             TieBreak tie) {
  auto vs = short_vectors(red.gram, bound);
  for (auto& v : vs) {
    Coords3 w;
    for (std::size_t c = 0; c < 3; ++c)
      w[c] = v.coords[0] * red.transform(0, c) + v.coords[1] * red.transform(1, c) +
             v.coords[2] * red.transform(2, c);
    normalize_sign(w);
    v.coords = w;
  }
  std::sort(vs.begin(), vs.end(), [tie](const LatticeVector& a, const LatticeVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return tie == TieBreak::LexAscending ? a.coords < b.coords : b.coords < a.coords;
  });
  return vs;
}

bool spans_rank3(const std::vector<LatticeVector>& vs) { return greedy_minima(vs).has_value(); }

bool matrix_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return a(r, c) < b(r, c);
  return false;
}

}  // namespace

QuaternionElement GrossLattice::vector(const Coords3& c) const {
  QuaternionElement x(algebra);
  for (std::size_t r = 0; r < 3; ++r) x = x + basis[r] * BigRational(c[r]);
  return x;
}

GrossLattice gross_lattice(const QuaternionOrder& order) {
  std::vector<QuaternionElement> images;
  for (const auto& e : order.basis()) {
    auto img = e * BigRational(2) - QuaternionElement::scalar(order.algebra(), e.trd());
    if (!img.is_zero()) images.push_back(std::move(img));
  }
  if (images.empty()) throw std::domain_error("gross_lattice: image has rank 0");
  const ScaledLattice lat = span_of(images);
  if (lat.basis.rows() != 3) throw std::domain_error("gross_lattice: image does not have rank 3");

  GrossLattice out{order.algebra(),
                   {lattice_element(order.algebra(), lat, 0), lattice_element(order.algebra(), lat, 1),
                    lattice_element(order.algebra(), lat, 2)},
                   IntMatrix(3, 3)};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const BigRational v = inner(out.basis[r], out.basis[c]);
      if (v.get_den() != 1) throw std::domain_error("gross_lattice: Gram matrix is not integral");
      out.gram(r, c) = v.get_num();
    }
  }
  return out;
}

BigInteger quadratic_form(const IntMatrix& gram, const Coords3& v) { return bilinear(gram, v, v); }

std::vector<LatticeVector> short_vectors(const IntMatrix& gram, const BigInteger& bound) {
  require_positive_definite(gram);
  std::vector<LatticeVector> out;
  if (bound <= 0) return out;

  // |v_i|^2 <= bound * (G^{-1})_ii; the inverse diagonal is cofactor / det.
  const BigInteger d = det(gram);
  std::array<BigInteger, 3> radius;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t a = (i + 1) % 3, b = (i + 2) % 3;
    const BigInteger cof = gram(a, a) * gram(b, b) - gram(a, b) * gram(a, b);
    radius[i] = isqrt(floor_div(bound * cof, d));
  }

  bool small = fits(bound, 60);
  for (const auto& r : radius) small = small && fits(r, 20);
  for (std::size_t i = 0; i < 9 && small; ++i) small = fits(gram(i / 3, i % 3), 60);

  if (small) {
    std::array<i128, 9> g;
    for (std::size_t i = 0; i < 9; ++i) g[i] = gram(i / 3, i % 3).get_si();
    const std::array<i128, 3> r{radius[0].get_si(), radius[1].get_si(), radius[2].get_si()};
    enumerate_box<i128>(g, static_cast<i128>(bound.get_si()), r, [&](i128 a, i128 b, i128 c, i128 q) {
      out.push_back({{to_big(a), to_big(b), to_big(c)}, to_big(q)});
    });
  } else {
    std::array<BigInteger, 9> g;
    for (std::size_t i = 0; i < 9; ++i) g[i] = gram(i / 3, i % 3);
    enumerate_box<BigInteger>(g, bound, radius, [&](const BigInteger& a, const BigInteger& b,
                                                   const BigInteger& c, const BigInteger& q) {
      out.push_back({{a, b, c}, q});
    });
  }
  std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.coords < b.coords;
  });
  return out;
}

ReducedGram lll_reduce(const IntMatrix& gram) {
  require_positive_definite(gram);
  const BigRational delta(99, 100);
  IntMatrix u = IntMatrix::identity(3);
  IntMatrix g = gram;
  auto refresh = [&] { g = u * gram * u.transpose(); };

  std::size_t k = 1;
  while (k < 3) {
    for (std::size_t jj = k; jj-- > 0;) {
      const Gso s = gso(g, k + 1);
      const BigInteger q = round_nearest(s.mu[k][jj]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < 3; ++c) u(k, c) -= q * u(jj, c);
      refresh();
    }
    const Gso s = gso(g, k + 1);
    if (s.b[k] >= (delta - s.mu[k][k - 1] * s.mu[k][k - 1]) * s.b[k - 1]) {
      ++k;
    } else {
      for (std::size_t c = 0; c < 3; ++c) std::swap(u(k, c), u(k - 1, c));
      refresh();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return {u, g};
}

bool MinimaTriple::operator<(const MinimaTriple& o) const {
  if (d1 != o.d1) return d1 < o.d1;
  if (d2 != o.d2) return d2 < o.d2;
  return d3 < o.d3;
}

std::string MinimaTriple::to_string() const {
  std::ostringstream os;
  os << '(' << d1 << ',' << d2 << ',' << d3 << ')';
  return os.str();
}

std::optional<MinimaTriple> greedy_minima(const std::vector<LatticeVector>& sorted) {
  const LatticeVector* first = nullptr;
  const LatticeVector* second = nullptr;
  Coords3 normal;
  for (const auto& v : sorted) {
    if (is_zero(v.coords)) continue;
    if (!first) {
      first = &v;
    } else if (!second) {
      const Coords3 n = cross(first->coords, v.coords);
      if (is_zero(n)) continue;
      second = &v;
      normal = n;
    } else if (dot(normal, v.coords) != 0) {
      return MinimaTriple{first->norm, second->norm, v.norm};
    }
  }
  return std::nullopt;
}

MinimalBasis minimal_basis_from_gram(const IntMatrix& gram, const BigInteger& p, TieBreak tie) {
  const ReducedGram red = lll_reduce(gram);
  BigInteger bound = ceil_div(8 * p, 7) + 2;
  std::vector<LatticeVector> vs = sorted_candidates(red, bound, tie);
  while (!spans_rank3(vs)) {
    bound *= 2;
    vs = sorted_candidates(red, bound, tie);
  }

  const LatticeVector& b1 = vs.front();
  const LatticeVector* b2 = nullptr;
  Coords3 normal;
  for (const auto& v : vs) {
    normal = cross(b1.coords, v.coords);
    if (!is_zero(normal)) {
      b2 = &v;
      break;
    }
  }
  // b2 exists because the list spans rank 3.
  const LatticeVector* b3 = nullptr;
  BigInteger d3 = -1;
  for (const auto& v : vs) {
    if (dot(normal, v.coords) == 0) continue;
    if (d3 < 0) d3 = v.norm;
    if (v.norm != d3) break;
    const BigInteger dd = det3(b1.coords, b2->coords, v.coords);
    if (dd == 1 || dd == -1) {
      b3 = &v;
      break;
    }
  }
  if (!b3) throw std::logic_error("minimal_basis: no norm-D3 vector completes a basis");

  std::array<Coords3, 3> rows{b1.coords, b2->coords, b3->coords};
  for (std::size_t i = 1; i < 3; ++i) {
    if (bilinear(gram, rows[0], rows[i]) < 0)
      for (auto& c : rows[i]) c = -c;
  }
  MinimalBasis out;
  out.coords = from_rows(rows);
  out.gram = out.coords * gram * out.coords.transpose();
  out.minima = {b1.norm, b2->norm, b3->norm};
  return out;
}

MinimalBasis minimal_basis(const GrossLattice& lattice, TieBreak tie) {
  MinimalBasis out = minimal_basis_from_gram(lattice.gram, lattice.prime(), tie);
  for (std::size_t r = 0; r < 3; ++r) out.basis.push_back(lattice.vector(row3(out.coords, r)));
  return out;
}

BigInteger rank2_det(const IntMatrix& gram, std::size_t i, std::size_t j) {
  if (i == j) throw std::invalid_argument("rank2_det: indices must differ");
  return gram(i, i) * gram(j, j) - gram(i, j) * gram(i, j);
}

std::vector<IntMatrix> minimal_rank2_sublattices(const GrossLattice& lattice) {
  const MinimalBasis mb = minimal_basis(lattice);
  const ReducedGram red = lll_reduce(lattice.gram);
  const auto vs = sorted_candidates(red, mb.minima.d2, TieBreak::LexAscending);

  std::vector<const LatticeVector*> first, second;
  for (const auto& v : vs) {
    if (v.norm == mb.minima.d1) first.push_back(&v);
    if (v.norm == mb.minima.d2) second.push_back(&v);
  }
  std::vector<IntMatrix> out;
  for (const auto* u : first) {
    for (const auto* v : second) {
      if (is_zero(cross(u->coords, v->coords))) continue;
      IntMatrix m(2, 3);
      for (std::size_t c = 0; c < 3; ++c) {
        m(0, c) = u->coords[c];
        m(1, c) = v->coords[c];
      }
      IntMatrix h = hnf(m);
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(), matrix_less);
  return out;
}

IntMatrix minimal_rank2_sublattice(const GrossLattice& lattice) {
  auto all = minimal_rank2_sublattices(lattice);
  if (all.empty()) throw std::logic_error("minimal_rank2_sublattice: no attaining pair");
  return all.front();
}

OrthogonalizationData orthogonalization(const IntMatrix& gram) {
  require_square3(gram);
  const Gso s = gso(gram, 3);
  return {s.mu[1][0], s.mu[2][0], s.mu[2][1], BigRational(gram(2, 1)) / BigRational(gram(1, 1))};
}

}  // namespace grosslat
