#pragma once

// Supersingular j-invariants over F_{p^2}, found by sweeping Legendre
// parameters through the Hasse invariant. Independent of all quaternion code
// and used to cross-check type counts.

#include <cstdint>
#include <string>
#include <vector>

namespace grosslat {

class FpField {
 public:
  /// Throws std::invalid_argument unless 2 <= p < 2^31.
  explicit FpField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Throws std::domain_error for 0.
  std::uint64_t inv(std::uint64_t a) const;
  bool is_square(std::uint64_t a) const;

 private:
  std::uint64_t p_;
};

/// a + b t with t^2 = s.
struct Fp2 {
  std::uint64_t a = 0, b = 0;
  bool operator==(const Fp2&) const = default;
  auto operator<=>(const Fp2&) const = default;
};

/// F_p[t] / (t^2 - s) with s the least quadratic non-residue; p odd.
class Fp2Field {
 public:
  explicit Fp2Field(std::uint64_t p);

  const FpField& base() const { return fp_; }
  std::uint64_t nonresidue() const { return s_; }

  Fp2 add(Fp2 x, Fp2 y) const;
  Fp2 sub(Fp2 x, Fp2 y) const;
  Fp2 mul(Fp2 x, Fp2 y) const;
  Fp2 inv(Fp2 x) const;
  Fp2 pow(Fp2 x, std::uint64_t e) const;
  /// x -> x^p, computed as a - b t.
  Fp2 frobenius(Fp2 x) const;
  Fp2 embed(std::uint64_t a) const { return {a % fp_.p(), 0}; }

 private:
  FpField fp_;
  std::uint64_t s_;
};

/// Coefficients of H_p(l) = sum_i C(m, i)^2 l^i mod p, m = (p - 1)/2, from the
/// constant term upward. Throws std::invalid_argument unless p is an odd prime.
std::vector<std::uint64_t> deuring_polynomial(std::uint64_t p);

struct SupersingularJ {
  Fp2 j;
  bool in_fp = false;
};

struct SupersingularSet {
  std::uint64_t p = 0;
  std::vector<SupersingularJ> j_list;  // sorted by (a, b)
  std::size_t spine_count = 0;
  std::size_t orbit_count = 0;

  std::size_t count() const { return j_list.size(); }
};

/// Throws std::invalid_argument when p is not prime.
SupersingularSet supersingular_j_set(std::uint64_t p);

std::size_t spine_count(std::uint64_t p);

/// floor(p/12) + (0, 1, 1, 2) for p = 1, 5, 7, 11 mod 12; 1 for p = 2, 3.
std::size_t eichler_deuring_count(std::uint64_t p);

std::string to_string(const Fp2& x);  // "a" or "a+b*t"

}  // namespace grosslat
