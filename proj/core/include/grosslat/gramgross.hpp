#pragma once

// Candidate normalized Gram matrices of Gross lattices of curves with j in
// F_p, given the prime and the first successive minimum.

#include "grosslat/exact.hpp"

#include <string>
#include <vector>

namespace grosslat {

struct GramProvenance {
  BigInteger x, d2, y, d3, n, z;
  bool operator==(const GramProvenance&) const = default;
};

struct GramCandidate {
  IntMatrix gram;  // [[D1, x, y], [x, D2, z], [y, z, D3]]
  GramProvenance provenance;
};

/// All matrices [[D1,x,y],[x,D2,z],[y,z,D3]] with D1 D2 - x^2 = 4p,
/// D1 D3 - y^2 = 4np for n in the admissible range, det = 4p^2 and the
/// normalization bounds. Sorted by matrix entries, duplicates removed.
/// Throws std::invalid_argument unless D1 = 0, 3 mod 4 and 3 D1^2 <= 16p
/// (the message names the failing condition).
std::vector<GramCandidate> gram_gross(const BigInteger& p, const BigInteger& d1);

/// True iff -4p is a square modulo d1. When false, gram_gross(p, d1) is empty.
bool quadratic_residue_precheck(const BigInteger& p, const BigInteger& d1);

/// Names of the candidate invariants that `c` violates at p (empty if none).
std::vector<std::string> candidate_violations(const BigInteger& p, const GramCandidate& c);

}  // namespace grosslat
