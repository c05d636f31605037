#include "grosslat/orders.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace grosslat {

ScaledLattice span_of(const std::vector<QuaternionElement>& elements) {
  std::vector<std::vector<BigRational>> rows;
  rows.reserve(elements.size());
  for (const auto& e : elements) rows.emplace_back(e.coords().begin(), e.coords().end());
  return lattice_from_rows(rows);
}

QuaternionElement lattice_element(const AlgebraPtr& algebra, const ScaledLattice& lattice,
                                  std::size_t i) {
  QuaternionElement::Coords c;
  for (std::size_t k = 0; k < 4; ++k) c[k] = make_rational(lattice.basis(i, k), lattice.denom);
  return {algebra, std::move(c)};
}

BigRational lattice_index(const ScaledLattice& outer, const ScaledLattice& inner) {
  if (outer.basis.rows() != outer.basis.cols() || inner.basis.rows() != inner.basis.cols())
    throw std::invalid_argument("lattice_index: lattices must have full rank");
  const auto n = static_cast<unsigned long>(outer.basis.rows());
  BigInteger outer_den, inner_den;
  mpz_pow_ui(outer_den.get_mpz_t(), outer.denom.get_mpz_t(), n);
  mpz_pow_ui(inner_den.get_mpz_t(), inner.denom.get_mpz_t(), n);
  BigInteger d_outer = abs(det(outer.basis));
  BigInteger d_inner = abs(det(inner.basis));
  return make_rational(d_inner * outer_den, d_outer * inner_den);
}

// ---------------------------------------------------------------------------

QuaternionOrder::QuaternionOrder(AlgebraPtr algebra, ScaledLattice lattice)
    : algebra_(std::move(algebra)), lattice_(std::move(lattice)) {
  if (lattice_.basis.rows() != 4 || lattice_.basis.cols() != 4)
    throw std::invalid_argument("QuaternionOrder: lattice must have rank 4");
}

QuaternionOrder QuaternionOrder::from_generators(AlgebraPtr algebra,
                                                 const std::vector<QuaternionElement>& generators) {
  for (const auto& g : generators) require_same_algebra(*algebra, *g.algebra());
  return {std::move(algebra), span_of(generators)};
}

QuaternionElement QuaternionOrder::element(std::size_t i) const {
  return lattice_element(algebra_, lattice_, i);
}

std::array<QuaternionElement, 4> QuaternionOrder::basis() const {
  return {element(0), element(1), element(2), element(3)};
}

std::optional<std::vector<BigInteger>> QuaternionOrder::coordinates(
    const QuaternionElement& x) const {
  require_same_algebra(*algebra_, *x.algebra());
  return solve_in_lattice(lattice_.basis, lattice_.denom, x.coords());
}

bool QuaternionOrder::contains(const QuaternionElement& x) const {
  return coordinates(x).has_value();
}

bool is_order(const QuaternionOrder& order) {
  const auto e = order.basis();
  if (!order.contains(QuaternionElement::scalar(order.algebra(), 1))) return false;
  for (const auto& x : e)
    if (!x.is_integral()) return false;
  for (const auto& x : e)
    for (const auto& y : e)
      if (!order.contains(x * y)) return false;
  return true;
}

BigInteger reduced_discriminant(const QuaternionOrder& order) {
  const auto e = order.basis();
  IntMatrix t(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 4; ++s) {
      BigRational v = (e[r] * e[s]).trd();
      if (v.get_den() != 1) throw std::domain_error("reduced_discriminant: trace pairing is not integral");
      t(r, s) = v.get_num();
    }
  auto root = exact_sqrt(abs(det(t)));
  if (!root) throw std::domain_error("reduced_discriminant: discriminant is not a square");
  return *root;
}

// ---------------------------------------------------------------------------
// Standard maximal orders

BigInteger auxiliary_prime(const BigInteger& p) {
  for (BigInteger q = 3;; q = next_prime(q)) {
    if (q % 4 == 3 && legendre(p, q) == -1) return q;
  }
}

namespace {

QuaternionElement quat(const AlgebraPtr& A, BigRational c0, BigRational c1, BigRational c2,
                       BigRational c3) {
  return {A, {std::move(c0), std::move(c1), std::move(c2), std::move(c3)}};
}

BigRational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

QuaternionOrder standard_maximal_order(const BigInteger& p) {
  if (!is_prime(p)) throw std::invalid_argument("standard_maximal_order: p must be prime");
  if (p == 2) {
    auto A = QuaternionAlgebra::make(-1, -1, p);
    return QuaternionOrder::from_generators(
        A, {quat(A, 1, 0, 0, 0), quat(A, 0, 1, 0, 0), quat(A, 0, 0, 1, 0),
            quat(A, q(1, 2), q(1, 2), q(1, 2), q(1, 2))});
  }
  if (p % 4 == 3) {
    // <1, i, (1+j)/2, (i+k)/2> in (-1, -p)
    auto A = QuaternionAlgebra::make(-1, -p, p);
    return QuaternionOrder::from_generators(
        A, {quat(A, 1, 0, 0, 0), quat(A, 0, 1, 0, 0), quat(A, q(1, 2), 0, q(1, 2), 0),
            quat(A, 0, q(1, 2), 0, q(1, 2))});
  }
  if (p % 3 == 2) {
    // <1, (1+i)/2, (j-k)/2, (i-k)/3> in (-3, -p)
    auto A = QuaternionAlgebra::make(-3, -p, p);
    return QuaternionOrder::from_generators(
        A, {quat(A, 1, 0, 0, 0), quat(A, q(1, 2), q(1, 2), 0, 0), quat(A, 0, 0, q(1, 2), q(-1, 2)),
            quat(A, 0, q(1, 3), 0, q(-1, 3))});
  }
  // p = 1 mod 12: saturate <1, i, j, k> in (-q, -p).
  auto A = QuaternionAlgebra::make(-auxiliary_prime(p), -p, p);
  auto lipschitz = QuaternionOrder::from_generators(
      A, {quat(A, 1, 0, 0, 0), quat(A, 0, 1, 0, 0), quat(A, 0, 0, 1, 0), quat(A, 0, 0, 0, 1)});
  return saturate_to_maximal(lipschitz);
}

// ---------------------------------------------------------------------------
// Saturation

namespace {

// Smallest ring containing the lattice `start`, or nullopt once a
// non-integral element shows up (then no order contains `start`).
std::optional<ScaledLattice> ring_closure(const AlgebraPtr& A, ScaledLattice start) {
  ScaledLattice current = std::move(start);
  for (int iter = 0; iter < 64; ++iter) {
    std::vector<QuaternionElement> gens;
    for (std::size_t i = 0; i < current.basis.rows(); ++i)
      gens.push_back(lattice_element(A, current, i));
    const std::size_t n = gens.size();
    for (const auto& g : gens)
      if (!g.is_integral()) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        QuaternionElement prod = gens[r] * gens[s];
        if (!prod.is_integral()) return std::nullopt;
        gens.push_back(std::move(prod));
      }
    ScaledLattice next = span_of(gens);
    if (next == current) return current;
    current = std::move(next);
  }
  return std::nullopt;
}

// Mod-m prefilter for integrality of x = sum c_r e_r / m.
struct IntegralityFilter {
  std::int64_t m;
  std::int64_t mod_tr;  // m
  std::int64_t mod_nrd;  // 2 m^2
  std::array<std::int64_t, 4> traces{};
  std::array<std::array<std::int64_t, 4>, 4> pairing{};  // trd(e_r conj(e_s)) mod 2m^2

  IntegralityFilter(const std::array<QuaternionElement, 4>& e, std::int64_t m_)
      : m(m_), mod_tr(m_), mod_nrd(2 * m_ * m_) {
    const BigInteger mt(mod_tr), mn(mod_nrd);
    for (std::size_t r = 0; r < 4; ++r) {
      BigRational t = e[r].trd();
      BigInteger v = t.get_num() % mt;
      if (v < 0) v += mt;
      traces[r] = v.get_si();
      for (std::size_t s = 0; s < 4; ++s) {
        BigRational w = 2 * inner(e[r], e[s]);
        BigInteger u = w.get_num() % mn;
        if (u < 0) u += mn;
        pairing[r][s] = u.get_si();
      }
    }
  }

  bool passes(const std::array<std::int64_t, 4>& c) const {
    std::int64_t t = 0;
    for (std::size_t r = 0; r < 4; ++r) t = (t + c[r] * traces[r]) % mod_tr;
    if (t != 0) return false;
    std::int64_t n = 0;
    for (std::size_t r = 0; r < 4; ++r) {
      if (c[r] == 0) continue;
      std::int64_t row = 0;
      for (std::size_t s = 0; s < 4; ++s) row = (row + pairing[r][s] * c[s]) % mod_nrd;
      n = (n + row * c[r]) % mod_nrd;
    }
    return n == 0;
  }
};

std::optional<QuaternionOrder> extend_at_prime(const QuaternionOrder& order, std::int64_t m) {
  const auto e = order.basis();
  const IntegralityFilter filter(e, m);
  const BigRational inv_m = make_rational(1, m);
  std::array<std::int64_t, 4> c{};
  for (c[0] = 0; c[0] < m; ++c[0])
    for (c[1] = 0; c[1] < m; ++c[1])
      for (c[2] = 0; c[2] < m; ++c[2])
        for (c[3] = 0; c[3] < m; ++c[3]) {
          if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0) continue;
          if (!filter.passes(c)) continue;
          QuaternionElement x(order.algebra());
          for (std::size_t r = 0; r < 4; ++r) x = x + e[r] * BigRational(c[r]);
          x = x * inv_m;
          std::vector<QuaternionElement> gens(e.begin(), e.end());
          gens.push_back(x);
          auto closed = ring_closure(order.algebra(), span_of(gens));
          if (closed) return QuaternionOrder(order.algebra(), std::move(*closed));
        }
  return std::nullopt;
}

}  // namespace

QuaternionOrder saturate_to_maximal(QuaternionOrder order) {
  const BigInteger& p = order.prime();
  for (;;) {
    const BigInteger d = reduced_discriminant(order);
    if (d == p) return order;
    if (d % p != 0 || d < p)
      throw std::runtime_error("saturate_to_maximal: discriminant " + d.get_str() +
                               " is not a multiple of p; wrong algebra presentation");
    bool grown = false;
    for (const BigInteger& m : prime_divisors(d / p)) {
      if (m > 4096)
        throw std::runtime_error("saturate_to_maximal: denominator search bound exceeded");
      if (auto bigger = extend_at_prime(order, m.get_si())) {
        order = std::move(*bigger);
        grown = true;
        break;
      }
    }
    if (!grown)
      throw std::runtime_error("saturate_to_maximal: no integral extension of discriminant " +
                               d.get_str() + "; wrong algebra presentation");
  }
}

// ---------------------------------------------------------------------------
// Ideals and neighbours

QuaternionElement QuaternionIdeal::element(std::size_t i) const {
  return lattice_element(left_order.algebra(), lattice, i);
}

std::array<QuaternionElement, 4> QuaternionIdeal::basis() const {
  return {element(0), element(1), element(2), element(3)};
}

std::vector<QuaternionIdeal> left_ideals_of_norm(const QuaternionOrder& order,
                                                 const BigInteger& ell) {
  if (!is_prime(ell)) throw std::invalid_argument("left_ideals_of_norm: ell must be prime");
  if (ell == order.prime()) throw std::invalid_argument("left_ideals_of_norm: ell must differ from p");
  if (!ell.fits_slong_p() || ell > 256) throw std::invalid_argument("left_ideals_of_norm: ell too large");
  const long l = ell.get_si();
  const auto e = order.basis();
  const BigRational ell_q(ell);

  std::vector<ScaledLattice> seen;
  std::vector<QuaternionIdeal> out;
  std::array<long, 4> c{};
  for (c[0] = 0; c[0] < l; ++c[0])
    for (c[1] = 0; c[1] < l; ++c[1])
      for (c[2] = 0; c[2] < l; ++c[2])
        for (c[3] = 0; c[3] < l; ++c[3]) {
          if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0) continue;
          QuaternionElement alpha(order.algebra());
          for (std::size_t r = 0; r < 4; ++r)
            if (c[r] != 0) alpha = alpha + e[r] * BigRational(c[r]);
          const BigRational n = alpha.nrd();
          if (n.get_den() != 1 || n.get_num() % ell != 0) continue;
          std::vector<QuaternionElement> gens;
          gens.reserve(8);
          for (const auto& x : e) gens.push_back(x * alpha);
          for (const auto& x : e) gens.push_back(x * ell_q);
          ScaledLattice lat = span_of(gens);
          if (std::find(seen.begin(), seen.end(), lat) != seen.end()) continue;
          if (lattice_index(order.lattice(), lat) != BigRational(ell * ell))
            throw std::logic_error("left_ideals_of_norm: ideal index is not ell^2");
          seen.push_back(lat);
          out.push_back(QuaternionIdeal{order, std::move(lat), ell});
        }
  if (out.size() != static_cast<std::size_t>(l + 1))
    throw std::logic_error("left_ideals_of_norm: expected ell + 1 ideals, found " +
                           std::to_string(out.size()));
  return out;
}

QuaternionOrder right_order(const QuaternionIdeal& ideal) {
  const auto b = ideal.basis();
  const BigRational inv_norm = make_rational(1, ideal.norm);
  std::vector<QuaternionElement> gens;
  gens.reserve(16);
  for (const auto& x : b)
    for (const auto& y : b) gens.push_back(x.conj() * y * inv_norm);
  QuaternionOrder result = QuaternionOrder::from_generators(ideal.left_order.algebra(), gens);
  if (!is_order(result)) throw std::logic_error("right_order: result is not an order");
  return result;
}

QuaternionIdeal principal_left_ideal(const QuaternionOrder& order, const QuaternionElement& x) {
  const BigRational n = x.nrd();
  if (n.get_den() != 1 || n == 0)
    throw std::invalid_argument("principal_left_ideal: generator must have nonzero integral norm");
  std::vector<QuaternionElement> gens;
  for (const auto& e : order.basis()) gens.push_back(e * x);
  return QuaternionIdeal{order, span_of(gens), n.get_num()};
}

}  // namespace grosslat
