#include "verify.hpp"

#include "grosslat/classify.hpp"
#include "grosslat/gramgross.hpp"
#include "grosslat/lattice.hpp"
#include "grosslat/oracle.hpp"
#include "grosslat/orders.hpp"
#include "grosslat/type_enumeration.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace grosslat::cli {

namespace {

const char* const kBoundRules[] = {"spine-d3-range",  "j0-d3-closed-form", "nonspine-d3-upper",
                                   "spine-iff-d1d2",  "spine-d1-ne-d2",    "spine-d2-ne-d3"};

class Checker {
 public:
  explicit Checker(PrimeReport& report) : report_(report) {}

  void operator()(const std::string& rule, bool ok, const std::string& detail = {}) {
    auto [it, inserted] = report_.rules.emplace(rule, true);
    if (!ok) {
      it->second = false;
      report_.failures.push_back({rule, detail});
    }
  }

 private:
  PrimeReport& report_;
};

std::string type_tag(std::size_t index, const TypeRecord& t) {
  std::ostringstream os;
  os << "type " << index << ' ' << t.minima().to_string();
  return os.str();
}

bool is_disc_residue(const BigInteger& d) {
  const BigInteger r = d % 4;
  return r == 0 || r == 3;
}

std::vector<MinimaTriple> triples(const std::vector<TypeRecord>& types) {
  std::vector<MinimaTriple> out;
  for (const auto& t : types) out.push_back(t.minima());
  return out;
}

void check_type(long p, std::size_t index, const TypeRecord& t, Checker& check, GramGrossStats& stats) {
  const BigInteger P(p);
  const BigInteger four_p = 4 * P;
  const std::string tag = type_tag(index, t);
  const MinimaTriple& m = t.minima();
  const IntMatrix& g = t.gram();
  const bool spine = t.flags.spine;

  check("maximal-order", is_order(t.order) && reduced_discriminant(t.order) == P, tag);
  check("det-4p2", det(t.lattice.gram) == 4 * P * P && det(g) == 4 * P * P, tag);

  const IntMatrix reduced = lll_reduce(t.lattice.gram).gram;
  bool residues_ok = true;
  for (const auto& v : short_vectors(reduced, 2 * P)) residues_ok = residues_ok && is_disc_residue(v.norm);
  check("norms-0-3-mod-4", residues_ok, tag);
  check("minima-residues", is_disc_residue(m.d1) && is_disc_residue(m.d2) && is_disc_residue(m.d3), tag);

  bool minors_ok = true;
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
    const BigInteger minor = rank2_det(g, i, j);
    minors_ok = minors_ok && minor > 0 && minor % four_p == 0;
  }
  check("rank2-minors-4p", minors_ok, tag);
  check("b1b2-minor-4p-iff-spine", (rank2_det(g, 0, 1) == four_p) == spine, tag);

  const BigInteger prod = m.product();
  check("hermite-product", 4 * P * P <= prod && prod <= 8 * P * P, tag);
  if (spine) check("spine-d1-bound", 3 * m.d1 * m.d1 <= 16 * P, tag);

  const auto violated = validate_bounds(P, m, spine);
  for (const char* rule : kBoundRules) {
    const bool bad = std::find(violated.begin(), violated.end(), rule) != violated.end();
    check(rule, !bad, tag);
  }

  const OrthogonalizationData od = orthogonalization(g);
  const BigRational half(1, 2);
  check("size-reduced", abs(od.mu21) <= half && abs(od.mu31) <= half && abs(od.delta) <= half, tag);

  const bool diag_ok = g(0, 0) == m.d1 && g(1, 1) == m.d2 && g(2, 2) == m.d3;
  const bool xy_ok = g(0, 1) >= 0 && g(0, 2) >= 0 && 2 * g(0, 1) <= m.d1 && 2 * g(0, 2) <= m.d1;
  const bool z_ok = 2 * abs(g(1, 2)) <= m.d2;
  check("normalized-gram", diag_ok && xy_ok && z_ok, tag);

  if (p >= 3)
    check("structural", !t.flags.orthogonal && !t.flags.well_rounded, tag);
  else
    check("structural", !t.flags.orthogonal && t.flags.well_rounded, tag);

  // Rank jumps in the plain sorted enumeration, independent of the basis selection.
  const auto brute = greedy_minima(short_vectors(reduced, m.d3));
  check("brute-force-minima", brute && *brute == m, tag);

  if (spine && p != 3) {
    const MinimalBasis other = minimal_basis(t.lattice, TieBreak::LexDescending);
    check("tiebreak-uniqueness", other.gram == g, tag);
  }

  const auto subs = minimal_rank2_sublattices(t.lattice);
  bool sub_det_ok = !subs.empty();
  for (const auto& h : subs) {
    const IntMatrix sg = h * t.lattice.gram * h.transpose();
    const BigInteger d = det(sg);
    sub_det_ok = sub_det_ok && d > 0 && d % four_p == 0;
  }
  check("rank2-sublattice-det", sub_det_ok, tag);
  if (m.d1 == 3 && p >= 5) {
    // <b1,b2> and <b1,b3> are both minimal and distinct. They are not the only
    // ones: b2 + b3 - b1 also has norm D2 and spans a third.
    auto span2 = [&](std::size_t k) {
      IntMatrix h(2, 3);
      for (std::size_t c = 0; c < 3; ++c) {
        h(0, c) = t.minimal.coords(0, c);
        h(1, c) = t.minimal.coords(k, c);
      }
      return hnf(h);
    };
    const IntMatrix s12 = span2(1), s13 = span2(2);
    const bool both = std::find(subs.begin(), subs.end(), s12) != subs.end() &&
                      std::find(subs.begin(), subs.end(), s13) != subs.end() && !(s12 == s13);
    check("rank2-sublattices-j0", both && rank2_det(g, 0, 1) == four_p && rank2_det(g, 0, 2) == four_p, tag);
  }
  if (spine && m.d1 != 3 && p > 3) check("rank2-sublattice-unique", subs.size() == 1, tag);

  const auto small = embedded_discriminants(t.lattice, 8);
  const bool loop = std::any_of(small.begin(), small.end(),
                                [](const BigInteger& d) { return d == 4 || d == 7 || d == 8; });
  if (loop) check("loop-discriminants-spine", spine, tag);

  if (spine) {
    const auto cands = gram_gross(P, m.d1);
    const auto hit = std::find_if(cands.begin(), cands.end(),
                                  [&](const GramCandidate& c) { return c.gram == g; });
    check("gramgross-containment", hit != cands.end(), tag);
    bool sound = true;
    for (const auto& c : cands) sound = sound && candidate_violations(P, c).empty();
    check("gramgross-soundness", sound, tag);
    if (m.d1 >= 4 && !quadratic_residue_precheck(P, m.d1))
      check("gramgross-precheck", cands.empty(), tag);

    ++stats.queries;
    stats.max_candidates = std::max(stats.max_candidates, cands.size());
    if (cands.size() > 1) {
      ++stats.multiple;
      stats.multiple_at.emplace_back(p, m.d1.get_si());
    }
    if (hit != cands.end() && m.d1 != 3) {
      const BigRational D1(m.d1);
      const BigInteger a = ceil(D1 / 4 - D1 * D1 / (16 * BigRational(P)));
      if (hit->provenance.n == a) ++stats.n_equals_a;
    }
  }
}

void check_prime_level(long p, const std::vector<TypeRecord>& types, Checker& check, long oracle_cap,
                       PrimeReport& report) {
  const BigInteger P(p);

  std::size_t j0 = 0, j1728 = 0, both = 0;
  for (const auto& t : types) {
    j0 += t.flags.special_j == SpecialJ::J0 || t.flags.special_j == SpecialJ::Both;
    j1728 += t.flags.special_j == SpecialJ::J1728 || t.flags.special_j == SpecialJ::Both;
    both += t.flags.special_j == SpecialJ::Both;
  }
  const bool want_j0 = p % 3 == 2 || p == 3;
  const bool want_j1728 = p % 4 == 3 || p == 2;
  check("special-j-counts", j0 == (want_j0 ? 1u : 0u) && j1728 == (want_j1728 ? 1u : 0u) &&
                                (both == 0 || p == 2 || p == 3));

  std::size_t half = 0, plain = 0, na_spine = 0, labelled_nonspine = 0;
  for (const auto& t : types) {
    if (t.flags.spine) {
      half += t.flags.embedding == Embedding::HalfIntegral || t.flags.embedding == Embedding::Both;
      plain += t.flags.embedding == Embedding::SqrtMinusP;
      na_spine += t.flags.embedding == Embedding::NotApplicable;
    } else {
      labelled_nonspine += t.flags.embedding != Embedding::NotApplicable;
    }
  }
  check("embedding-count", half + plain == report.spine_count && na_spine == 0 && labelled_nonspine == 0);

  // Closed forms.
  if (p == 2) {
    check("closed-form-p2", types.size() == 1 && types[0].gram() == IntMatrix{{3, 1, 1}, {1, 3, -1}, {1, -1, 3}});
  }
  if (p == 3) {
    const IntMatrix a{{3, 0, 0}, {0, 4, -2}, {0, -2, 4}};
    const IntMatrix b{{3, 0, 0}, {0, 4, 2}, {0, 2, 4}};
    check("closed-form-p3", types.size() == 1 && (types[0].gram() == a || types[0].gram() == b));
  }
  for (ClosedFormFamily fam : {ClosedFormFamily::J0, ClosedFormFamily::J1728}) {
    if (!closed_form_applies(fam, P)) continue;
    const long d1 = fam == ClosedFormFamily::J0 ? 3 : 4;
    const IntMatrix cf = closed_form_gram(fam, P);
    const auto it = std::find_if(types.begin(), types.end(),
                                 [&](const TypeRecord& t) { return t.minima().d1 == d1; });
    check("closed-form-" + to_string(fam), it != types.end() && it->gram() == cf && det(cf) == 4 * P * P);
  }
  if (closed_form_applies(ClosedFormFamily::Minus15Cubed, P)) {
    const IntMatrix cf = closed_form_gram(ClosedFormFamily::Minus15Cubed, P);
    const std::size_t idx = cm_type_index(types, 7);
    check("closed-form-minus15", types[idx].gram() == cf && types[idx].flags.spine && det(cf) == 4 * P * P);
  }
  if (closed_form_applies(ClosedFormFamily::D1Twenty, P)) {
    const IntMatrix cf = closed_form_gram(ClosedFormFamily::D1Twenty, P);
    const bool hit = std::any_of(types.begin(), types.end(),
                                 [&](const TypeRecord& t) { return !t.flags.spine && t.gram() == cf; });
    check("closed-form-d1-20", hit && det(cf) == 4 * P * P);
  }

  // CM rows: unique embedding type, and D1 = d from N_E on.
  for (const auto& row : cm_rows()) {
    if (!row.supersingular_at(P)) continue;
    std::optional<std::size_t> idx;
    try {
      idx = cm_type_index(types, row.d);
    } catch (const std::logic_error& e) {
      check("cm-unique-embedding", false, row.j_label + ": " + e.what());
      continue;
    }
    check("cm-unique-embedding", true);
    if (p >= row.n_e) check("cm-d1-equals-d", types[*idx].minima().d1 == row.d, row.j_label);
  }

  // Neighbor prime independence.
  const BigInteger other = p == 3 ? BigInteger(5) : BigInteger(3);
  const BigInteger alt = other == default_neighbor_prime(P) ? BigInteger(5) : other;
  check("ell-independence", triples(enumerate_types(P, alt)) == triples(types), "ell = " + alt.get_str());

  if (p <= oracle_cap) {
    report.oracle_checked = true;
    const auto o = supersingular_j_set(static_cast<std::uint64_t>(p));
    check("oracle-orbit-count", o.orbit_count == types.size(),
          std::to_string(o.orbit_count) + " orbits vs " + std::to_string(types.size()) + " types");
    check("oracle-spine-count", o.spine_count == report.spine_count,
          std::to_string(o.spine_count) + " vs " + std::to_string(report.spine_count));
    check("oracle-eichler-deuring", o.count() == eichler_deuring_count(static_cast<std::uint64_t>(p)));
    const auto has = [&](std::uint64_t a) {
      return std::any_of(o.j_list.begin(), o.j_list.end(),
                         [&](const SupersingularJ& s) { return s.j == Fp2{a % static_cast<std::uint64_t>(p), 0}; });
    };
    check("oracle-special-j", has(0) == want_j0 && has(1728) == want_j1728);
  }
}

}  // namespace

std::size_t VerifyReport::check_count() const {
  std::size_t n = 0;
  for (const auto& p : primes) n += p.rules.size();
  return n + ne.size();
}

std::size_t VerifyReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& p : primes)
    for (const auto& [id, ok] : p.rules) n += !ok;
  for (const auto& r : ne) n += !r.pass;
  return n;
}

PrimeReport verify_prime(long p, const std::vector<TypeRecord>& types, long oracle_cap, GramGrossStats& stats) {
  PrimeReport report;
  report.p = p;
  report.type_count = types.size();
  for (const auto& t : types) report.spine_count += t.flags.spine;
  Checker check(report);
  for (std::size_t i = 0; i < types.size(); ++i) check_type(p, i, types[i], check, stats);
  check_prime_level(p, types, check, oracle_cap, report);
  return report;
}

PrimeReport verify_prime(long p, long oracle_cap, GramGrossStats& stats) {
  return verify_prime(p, enumerate_types(BigInteger(p)), oracle_cap, stats);
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.options = options;
  std::map<long, std::vector<TypeRecord>> cache;

  for (long p = std::max(2L, options.p_min); p <= options.p_max; ++p) {
    if (!is_prime(BigInteger(p))) continue;
    auto& types = cache[p] = enumerate_types(BigInteger(p));
    report.primes.push_back(verify_prime(p, types, options.oracle_cap, report.gramgross));
  }

  // Holds the most recent prime outside the cached range.
  long spare_p = 0;
  std::vector<TypeRecord> spare;
  const TypeProvider provider = [&](const BigInteger& p) -> const std::vector<TypeRecord>& {
    const long key = p.get_si();
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    if (spare_p != key) {
      spare = enumerate_types(p);
      spare_p = key;
    }
    return spare;
  };

  for (const auto& row : cm_rows()) {
    const bool extended_row = row.d >= 43;
    if (extended_row && !options.extended_cm) continue;
    const long needed = ceil(row.quarter_bound()).get_si();
    const long p_max = extended_row ? std::max(options.p_max, needed) : options.p_max;
    if (p_max < needed) continue;
    NeReport ne;
    ne.j_label = row.j_label;
    ne.d = row.d;
    ne.expected = row.n_e;
    ne.p_max = p_max;
    try {
      const NeResult r = recompute_ne(row, BigInteger(p_max), provider);
      ne.recomputed = r.n_e.get_si();
      ne.pass = ne.recomputed == ne.expected;
    } catch (const std::exception& e) {
      ne.detail = e.what();
    }
    report.ne.push_back(ne);
  }
  return report;
}

}  // namespace grosslat::cli
