#include "grosslat/quat.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace grosslat {

QuaternionAlgebra::QuaternionAlgebra(BigInteger a, BigInteger b, BigInteger p)
    : a_(std::move(a)), b_(std::move(b)), p_(std::move(p)) {
  if (a_ >= 0 || b_ >= 0) throw std::invalid_argument("QuaternionAlgebra: a and b must be negative");

  // 1 = e0, i = e1, j = e2, k = e3.
  const BigInteger ab = a_ * b_;
  auto set = [this](std::size_t r, std::size_t s, std::size_t idx, BigInteger coef) {
    table_[r][s] = Term{idx, std::move(coef)};
  };
  for (std::size_t s = 0; s < 4; ++s) {
    set(0, s, s, 1);
    set(s, 0, s, 1);
  }
  set(1, 1, 0, a_);     // i*i = a
  set(2, 2, 0, b_);     // j*j = b
  set(3, 3, 0, -ab);    // k*k = ijij = -ab
  set(1, 2, 3, 1);      // i*j = k
  set(2, 1, 3, -1);     // j*i = -k
  set(1, 3, 2, a_);     // i*k = i*ij = a j
  set(3, 1, 2, -a_);    // k*i = ij*i = -a j
  set(2, 3, 1, -b_);    // j*k = j*ij = -b i
  set(3, 2, 1, b_);     // k*j = ij*j = b i
}

std::shared_ptr<const QuaternionAlgebra> QuaternionAlgebra::make(BigInteger a, BigInteger b,
                                                                 BigInteger p) {
  return std::make_shared<const QuaternionAlgebra>(std::move(a), std::move(b), std::move(p));
}

std::string QuaternionAlgebra::to_string() const {
  std::ostringstream os;
  os << '(' << a_ << ", " << b_ << " | Q), p = " << p_;
  return os.str();
}

void require_same_algebra(const QuaternionAlgebra& a, const QuaternionAlgebra& b) {
  if (&a != &b && !(a == b)) throw std::invalid_argument("quaternion algebra mismatch");
}

// ---------------------------------------------------------------------------

QuaternionElement::QuaternionElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("QuaternionElement: null algebra");
}

QuaternionElement::QuaternionElement(AlgebraPtr algebra, Coords coords)
    : algebra_(std::move(algebra)), c_(std::move(coords)) {
  if (!algebra_) throw std::invalid_argument("QuaternionElement: null algebra");
}

QuaternionElement QuaternionElement::scalar(AlgebraPtr algebra, const BigRational& c) {
  QuaternionElement x(std::move(algebra));
  x.c_[0] = c;
  return x;
}

QuaternionElement QuaternionElement::basis(AlgebraPtr algebra, std::size_t index) {
  if (index > 3) throw std::out_of_range("QuaternionElement::basis: index > 3");
  QuaternionElement x(std::move(algebra));
  x.c_[index] = 1;
  return x;
}

QuaternionElement QuaternionElement::operator+(const QuaternionElement& o) const {
  require_same_algebra(*algebra_, *o.algebra_);
  QuaternionElement r(algebra_);
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

QuaternionElement QuaternionElement::operator-(const QuaternionElement& o) const {
  require_same_algebra(*algebra_, *o.algebra_);
  QuaternionElement r(algebra_);
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

QuaternionElement QuaternionElement::operator-() const {
  QuaternionElement r(algebra_);
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

QuaternionElement QuaternionElement::operator*(const QuaternionElement& o) const {
  require_same_algebra(*algebra_, *o.algebra_);
  QuaternionElement r(algebra_);
  for (std::size_t s = 0; s < 4; ++s) {
    if (c_[s] == 0) continue;
    for (std::size_t t = 0; t < 4; ++t) {
      if (o.c_[t] == 0) continue;
      const auto& term = algebra_->product(s, t);
      r.c_[term.index] += c_[s] * o.c_[t] * term.coef;
    }
  }
  return r;
}

QuaternionElement QuaternionElement::operator*(const BigRational& s) const {
  QuaternionElement r(algebra_);
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = c_[i] * s;
  return r;
}

QuaternionElement QuaternionElement::operator/(const BigRational& s) const {
  if (s == 0) throw std::domain_error("QuaternionElement: division by zero");
  QuaternionElement r(algebra_);
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = c_[i] / s;
  return r;
}

bool QuaternionElement::operator==(const QuaternionElement& o) const {
  return (*algebra_ == *o.algebra_) && c_ == o.c_;
}

bool QuaternionElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

QuaternionElement QuaternionElement::conj() const {
  QuaternionElement r(algebra_);
  r.c_[0] = c_[0];
  for (std::size_t i = 1; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

BigRational QuaternionElement::trd() const { return 2 * c_[0]; }

BigRational QuaternionElement::nrd() const {
  const BigInteger& a = algebra_->a();
  const BigInteger& b = algebra_->b();
  BigRational n = c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
  return n;
}

bool QuaternionElement::is_integral() const {
  return trd().get_den() == 1 && nrd().get_den() == 1;
}

std::string QuaternionElement::to_string() const {
  std::ostringstream os;
  os << c_[0].get_str() << " + " << c_[1].get_str() << "*i + " << c_[2].get_str() << "*j + "
     << c_[3].get_str() << "*k";
  return os.str();
}

QuaternionElement mul(const QuaternionElement& x, const QuaternionElement& y) { return x * y; }
QuaternionElement conj(const QuaternionElement& x) { return x.conj(); }
BigRational trd(const QuaternionElement& x) { return x.trd(); }
BigRational nrd(const QuaternionElement& x) { return x.nrd(); }

BigRational inner(const QuaternionElement& x, const QuaternionElement& y) {
  require_same_algebra(*x.algebra(), *y.algebra());
  // trd(x conj(y)) / 2 in the orthogonal basis 1, i, j, k.
  const BigInteger& a = x.algebra()->a();
  const BigInteger& b = x.algebra()->b();
  return x[0] * y[0] - a * x[1] * y[1] - b * x[2] * y[2] + a * b * x[3] * y[3];
}

}  // namespace grosslat
