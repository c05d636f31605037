#include "grosslat/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace grosslat {

namespace {

bool small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FpField::FpField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("FpField: p out of range");
}

std::uint64_t FpField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FpField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("FpField: inverse of zero");
  return pow(a, p_ - 2);
}

bool FpField::is_square(std::uint64_t a) const {
  a %= p_;
  if (a == 0 || p_ == 2) return true;
  return pow(a, (p_ - 1) / 2) == 1;
}

Fp2Field::Fp2Field(std::uint64_t p) : fp_(p), s_(0) {
  if (p % 2 == 0) throw std::invalid_argument("Fp2Field: p must be odd");
  for (std::uint64_t s = 2; s < p; ++s) {
    if (!fp_.is_square(s)) {
      s_ = s;
      break;
    }
  }
  if (s_ == 0) throw std::invalid_argument("Fp2Field: no quadratic non-residue");
}

Fp2 Fp2Field::add(Fp2 x, Fp2 y) const { return {fp_.add(x.a, y.a), fp_.add(x.b, y.b)}; }
Fp2 Fp2Field::sub(Fp2 x, Fp2 y) const { return {fp_.sub(x.a, y.a), fp_.sub(x.b, y.b)}; }

Fp2 Fp2Field::mul(Fp2 x, Fp2 y) const {
  const std::uint64_t bb = fp_.mul(x.b, y.b);
  return {fp_.add(fp_.mul(x.a, y.a), fp_.mul(s_, bb)), fp_.add(fp_.mul(x.a, y.b), fp_.mul(x.b, y.a))};
}

Fp2 Fp2Field::inv(Fp2 x) const {
  // (a + bt)^{-1} = (a - bt) / (a^2 - s b^2)
  const std::uint64_t norm = fp_.sub(fp_.mul(x.a, x.a), fp_.mul(s_, fp_.mul(x.b, x.b)));
  const std::uint64_t n = fp_.inv(norm);
  return {fp_.mul(x.a, n), fp_.mul(fp_.sub(0, x.b), n)};
}

Fp2 Fp2Field::pow(Fp2 x, std::uint64_t e) const {
  Fp2 r{1 % fp_.p(), 0};
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Fp2 Fp2Field::frobenius(Fp2 x) const { return {x.a, fp_.sub(0, x.b)}; }

std::vector<std::uint64_t> deuring_polynomial(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !small_prime(p))
    throw std::invalid_argument("deuring_polynomial: p must be an odd prime");
  const FpField f(p);
  const std::uint64_t m = (p - 1) / 2;
  std::vector<std::uint64_t> out;
  out.reserve(m + 1);
  std::uint64_t c = 1;  // C(m, i) mod p; i <= m < p so the divisions are invertible
  for (std::uint64_t i = 0; i <= m; ++i) {
    out.push_back(f.mul(c, c));
    c = f.mul(f.mul(c, (m - i) % p), f.inv(i + 1));
  }
  return out;
}

SupersingularSet supersingular_j_set(std::uint64_t p) {
  if (!small_prime(p)) throw std::invalid_argument("supersingular_j_set: p must be prime");
  SupersingularSet out;
  out.p = p;
  if (p == 2) {
    out.j_list.push_back({{0, 0}, true});
  } else {
    const Fp2Field F(p);
    const auto h = deuring_polynomial(p);
    const Fp2 one{1, 0};
    std::vector<Fp2> js;
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        const Fp2 l{a, b};
        if (b == 0 && (a == 0 || a == 1)) continue;
        Fp2 acc{0, 0};
        for (std::size_t i = h.size(); i-- > 0;) acc = F.add(F.mul(acc, l), F.embed(h[i]));
        if (!(acc == Fp2{0, 0})) continue;
        // j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)
        const Fp2 l2 = F.mul(l, l);
        const Fp2 q = F.add(F.sub(l2, l), one);
        const Fp2 num = F.mul(F.embed(256), F.mul(q, F.mul(q, q)));
        const Fp2 lm1 = F.sub(l, one);
        const Fp2 den = F.mul(l2, F.mul(lm1, lm1));
        js.push_back(F.mul(num, F.inv(den)));
      }
    }
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    for (const auto& j : js) out.j_list.push_back({j, F.frobenius(j) == j});
  }
  out.spine_count = static_cast<std::size_t>(
      std::count_if(out.j_list.begin(), out.j_list.end(), [](const SupersingularJ& s) { return s.in_fp; }));
  out.orbit_count = out.spine_count + (out.j_list.size() - out.spine_count) / 2;
  return out;
}

std::size_t spine_count(std::uint64_t p) { return supersingular_j_set(p).spine_count; }

std::size_t eichler_deuring_count(std::uint64_t p) {
  if (p == 2 || p == 3) return 1;
  static constexpr std::size_t eps[12] = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2};
  return static_cast<std::size_t>(p / 12) + eps[p % 12];
}

std::string to_string(const Fp2& x) {
  if (x.b == 0) return std::to_string(x.a);
  return std::to_string(x.a) + "+" + std::to_string(x.b) + "*t";
}

}  // namespace grosslat
