#pragma once

// Cross-module verification driver: runs every per-type and per-prime check
// over a prime range and collects pass/fail results by rule identifier.

#include "grosslat/cm.hpp"
#include "grosslat/exact.hpp"

#include <map>
#include <string>
#include <vector>

namespace grosslat::cli {

struct RuleFailure {
  std::string rule;
  std::string detail;
};

struct PrimeReport {
  long p = 0;
  std::size_t type_count = 0;
  std::size_t spine_count = 0;
  bool oracle_checked = false;
  std::map<std::string, bool> rules;  // rule id -> passed
  std::vector<RuleFailure> failures;
};

struct GramGrossStats {
  std::size_t queries = 0;       // (p, D1) pairs of spine types
  std::size_t multiple = 0;      // queries with more than one candidate
  std::size_t n_equals_a = 0;    // matching candidate used the lower loop bound n = a
  std::size_t max_candidates = 0;
  std::vector<std::pair<long, long>> multiple_at;  // (p, D1)
};

struct NeReport {
  std::string j_label;
  long d = 0;
  long expected = 0;
  long recomputed = 0;  // 0 when the range was too short to decide
  long p_max = 0;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  long p_min = 2;
  long p_max = 300;
  long oracle_cap = 500;
  bool extended_cm = false;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<PrimeReport> primes;
  GramGrossStats gramgross;
  std::vector<NeReport> ne;

  std::size_t check_count() const;
  std::size_t failure_count() const;
};

/// Full invariant suite for one prime.
PrimeReport verify_prime(long p, long oracle_cap, GramGrossStats& stats);
PrimeReport verify_prime(long p, const std::vector<TypeRecord>& types, long oracle_cap,
                         GramGrossStats& stats);

/// Runs verify_prime over [p_min, p_max] and recomputes N_E for every CM row
/// whose range fits (or, with extended_cm, for d in {43, 67, 163} as well).
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace grosslat::cli
