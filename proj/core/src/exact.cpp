#include "grosslat/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace grosslat {

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInteger floor_div(const BigInteger& a, const BigInteger& b) {
  BigInteger q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInteger ceil_div(const BigInteger& a, const BigInteger& b) {
  BigInteger q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInteger floor(const BigRational& q) { return floor_div(q.get_num(), q.get_den()); }
BigInteger ceil(const BigRational& q) { return ceil_div(q.get_num(), q.get_den()); }

std::optional<BigInteger> exact_sqrt(const BigInteger& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  BigInteger r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_prime(const BigInteger& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

BigInteger next_prime(const BigInteger& n) {
  BigInteger r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::vector<BigInteger> prime_divisors(BigInteger n) {
  std::vector<BigInteger> out;
  if (n < 0) n = -n;
  if (n == 0) throw std::invalid_argument("prime_divisors: zero");
  for (BigInteger d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int legendre(const BigInteger& a, const BigInteger& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInteger(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<BigInteger>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInteger> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void IntMatrix::set_row(std::size_t r, std::span<const BigInteger> values) {
  if (values.size() != cols_) throw std::invalid_argument("IntMatrix::set_row: width mismatch");
  std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void IntMatrix::append_row(std::span<const BigInteger> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("IntMatrix::append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix::operator*: shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInteger& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

BigInteger IntMatrix::content() const {
  BigInteger g = 0;
  for (const auto& x : data_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

// rows (r, i) <- [[s, t], [-b/g, a/g]] * rows (r, i), a unimodular combination
// that clears column c of row i.
void combine_rows(std::vector<std::vector<BigInteger>>& rows, std::size_t r, std::size_t i,
                  std::size_t c) {
  const BigInteger a = rows[r][c];
  const BigInteger b = rows[i][c];
  BigInteger g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const BigInteger ag = a / g;
  const BigInteger bg = b / g;
  for (std::size_t k = 0; k < rows[r].size(); ++k) {
    BigInteger x = rows[r][k];
    BigInteger y = rows[i][k];
    rows[r][k] = s * x + t * y;
    rows[i][k] = ag * y - bg * x;
  }
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  std::vector<std::vector<BigInteger>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  const std::size_t ncols = m.cols();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < ncols && pivot_row < rows.size(); ++c) {
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      if (rows[pivot_row][c] == 0) {
        std::swap(rows[pivot_row], rows[i]);
        continue;
      }
      combine_rows(rows, pivot_row, i, c);
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    const BigInteger& piv = rows[pivot_row][c];
    for (std::size_t r = 0; r < pivot_row; ++r) {
      BigInteger q = floor_div(rows[r][c], piv);
      if (q == 0) continue;
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] -= q * rows[pivot_row][k];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }

  IntMatrix out(pivot_row, ncols);
  for (std::size_t r = 0; r < pivot_row; ++r) out.set_row(r, rows[r]);
  return out;
}

BigInteger det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInteger prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_with, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInteger v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rows(); }

std::optional<std::vector<BigInteger>> solve_in_lattice(const IntMatrix& basis,
                                                        const BigInteger& denom,
                                                        std::span<const BigRational> v) {
  if (v.size() != basis.cols())
    throw std::invalid_argument("solve_in_lattice: vector length does not match basis width");
  if (denom <= 0) throw std::invalid_argument("solve_in_lattice: denominator must be positive");
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();

  // Solve c^T * basis = denom * v, i.e. basis^T c = w, by Gauss-Jordan over Q.
  std::vector<std::vector<BigRational>> aug(n, std::vector<BigRational>(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = basis(c, r);
    aug[r][k] = v[r] * denom;
  }
  std::size_t prow = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < k && prow < n; ++c) {
    std::size_t sel = prow;
    while (sel < n && aug[sel][c] == 0) ++sel;
    if (sel == n) throw std::invalid_argument("solve_in_lattice: basis rows are dependent");
    std::swap(aug[prow], aug[sel]);
    const BigRational piv = aug[prow][c];
    for (auto& x : aug[prow]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == prow || aug[r][c] == 0) continue;
      const BigRational f = aug[r][c];
      for (std::size_t cc = c; cc <= k; ++cc) aug[r][cc] -= f * aug[prow][cc];
    }
    pivots.push_back(c);
    ++prow;
  }
  for (std::size_t r = prow; r < n; ++r)
    if (aug[r][k] != 0) return std::nullopt;

  std::vector<BigInteger> coords(k);
  for (std::size_t r = 0; r < prow; ++r) {
    const BigRational& x = aug[r][k];
    if (x.get_den() != 1) return std::nullopt;
    coords[pivots[r]] = x.get_num();
  }
  return coords;
}

ScaledLattice canonicalize(IntMatrix basis, BigInteger denom) {
  if (denom <= 0) throw std::invalid_argument("canonicalize: denominator must be positive");
  IntMatrix h = hnf(basis);
  BigInteger g = h.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), denom.get_mpz_t());
  if (g > 1) {
    for (std::size_t r = 0; r < h.rows(); ++r)
      for (std::size_t c = 0; c < h.cols(); ++c) mpz_divexact(h(r, c).get_mpz_t(), h(r, c).get_mpz_t(), g.get_mpz_t());
    denom /= g;
  }
  return {std::move(h), std::move(denom)};
}

ScaledLattice lattice_from_rows(const std::vector<std::vector<BigRational>>& rows) {
  if (rows.empty()) throw std::invalid_argument("lattice_from_rows: no generators");
  const std::size_t n = rows.front().size();
  BigInteger common = 1;
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("lattice_from_rows: ragged generators");
    for (const auto& x : r) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
  }
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) {
      BigRational scaled = rows[i][c] * common;
      m(i, c) = scaled.get_num();
    }
  return canonicalize(std::move(m), std::move(common));
}

std::string to_string(const BigInteger& n) { return n.get_str(); }

std::string to_string(const BigRational& q) { return q.get_str(); }

}  // namespace grosslat
