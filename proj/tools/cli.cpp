#include "cli.hpp"

#include "verify.hpp"

#include "grosslat/classify.hpp"
#include "grosslat/cm.hpp"
#include "grosslat/gramgross.hpp"
#include "grosslat/oracle.hpp"
#include "grosslat/type_enumeration.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <stdexcept>

namespace grosslat::cli {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

// Thrown for bad input that CLI11 cannot see (non-prime p and the like).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big(const BigInteger& n) {
  if (mpz_fits_slong_p(n.get_mpz_t())) return n.get_si();
  return n.get_str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(big(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

void require_prime(long p, const char* what) {
  if (p < 2 || !is_prime(BigInteger(p))) throw UsageError(std::string(what) + " must be prime");
}

// ---------------------------------------------------------------------------

struct TypesArgs {
  long p = 0;
  long ell = 0;
  long disc_bound = 32;
  bool csv = false;
};

int cmd_types(const TypesArgs& a, std::ostream& out) {
  require_prime(a.p, "--p");
  const BigInteger P(a.p);
  BigInteger ell = default_neighbor_prime(P);
  if (a.ell != 0) {
    require_prime(a.ell, "--ell");
    if (a.ell == a.p) throw UsageError("--ell must differ from --p");
    ell = a.ell;
  }
  const auto types = enumerate_types(P, ell);

  if (a.csv) {
    out << "p,type_index,D1,D2,D3,x,y,z,spine,special_j,embedding\n";
    for (std::size_t i = 0; i < types.size(); ++i) {
      const auto& t = types[i];
      const IntMatrix& g = t.gram();
      out << a.p << ',' << i << ',' << g(0, 0) << ',' << g(1, 1) << ',' << g(2, 2) << ',' << g(0, 1) << ','
          << g(0, 2) << ',' << g(1, 2) << ',' << (t.flags.spine ? "true" : "false") << ','
          << to_string(t.flags.special_j) << ',' << to_string(t.flags.embedding) << '\n';
    }
    return kOk;
  }

  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "types";
  doc["p"] = a.p;
  doc["ell"] = big(ell);
  doc["types"] = json::array();
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& t = types[i];
    json discs = json::array();
    for (const auto& d : embedded_discriminants(t.lattice, a.disc_bound)) discs.push_back(big(d));
    doc["types"].push_back({
        {"index", i},
        {"minima", {big(t.minima().d1), big(t.minima().d2), big(t.minima().d3)}},
        {"gram", matrix_json(t.gram())},
        {"spine", t.flags.spine},
        {"special_j", to_string(t.flags.special_j)},
        {"embedding", to_string(t.flags.embedding)},
        {"orthogonal", t.flags.orthogonal},
        {"well_rounded", t.flags.well_rounded},
        {"embedded_discriminants", discs},
    });
  }
  doc["embedded_discriminant_bound"] = a.disc_bound;
  out << doc.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_gramgross(long p, long d1, std::ostream& out) {
  require_prime(p, "--p");
  std::vector<GramCandidate> cands;
  try {
    cands = gram_gross(BigInteger(p), BigInteger(d1));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "gramgross";
  doc["p"] = p;
  doc["d1"] = d1;
  doc["matrices"] = json::array();
  doc["provenance"] = json::array();
  for (const auto& c : cands) {
    doc["matrices"].push_back(matrix_json(c.gram));
    const auto& pr = c.provenance;
    doc["provenance"].push_back({{"x", big(pr.x)}, {"D2", big(pr.d2)}, {"y", big(pr.y)},
                                 {"D3", big(pr.d3)}, {"n", big(pr.n)}, {"z", big(pr.z)}});
  }
  out << doc.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

json prime_json(const PrimeReport& r) {
  json rules = json::object();
  for (const auto& [id, ok] : r.rules) rules[id] = ok ? "pass" : "fail";
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"rule", f.rule}, {"detail", f.detail}});
  return {{"p", r.p},
          {"types", r.type_count},
          {"spine", r.spine_count},
          {"oracle_checked", r.oracle_checked},
          {"rules", rules},
          {"failures", failures}};
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.p_min < 2 || opt.p_max < opt.p_min) throw UsageError("require 2 <= --pmin <= --pmax");
  const VerifyReport report = run_verify(opt);

  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "verify";
  doc["p_min"] = opt.p_min;
  doc["p_max"] = opt.p_max;
  doc["oracle_cap"] = opt.oracle_cap;
  doc["extended_cm"] = opt.extended_cm;
  doc["primes"] = json::array();
  for (const auto& r : report.primes) doc["primes"].push_back(prime_json(r));

  const auto& gs = report.gramgross;
  json multiple = json::array();
  for (const auto& [p, d1] : gs.multiple_at) multiple.push_back({{"p", p}, {"d1", d1}});
  doc["gramgross"] = {{"queries", gs.queries},
                      {"multiple_candidates", gs.multiple},
                      {"max_candidates", gs.max_candidates},
                      {"n_equals_a", gs.n_equals_a},
                      {"multiple_at", multiple}};

  doc["n_e"] = json::array();
  for (const auto& ne : report.ne) {
    doc["n_e"].push_back({{"j_label", ne.j_label},
                          {"d", ne.d},
                          {"expected", ne.expected},
                          {"recomputed", ne.recomputed},
                          {"p_max", ne.p_max},
                          {"pass", ne.pass},
                          {"detail", ne.detail}});
  }
  const std::size_t failures = report.failure_count();
  doc["summary"] = {{"primes", report.primes.size()}, {"checks", report.check_count()}, {"failures", failures}};
  out << doc.dump() << '\n';

  err << "verify " << opt.p_min << ".." << opt.p_max << ": " << report.primes.size() << " primes, "
      << report.check_count() << " checks, " << failures << " failures\n";
  for (const auto& r : report.primes)
    for (const auto& f : r.failures) err << "  p=" << r.p << " " << f.rule << ": " << f.detail << '\n';
  for (const auto& ne : report.ne) {
    err << "  N_E(" << ne.j_label << ") = " << ne.recomputed << " (table " << ne.expected << ")"
        << (ne.pass ? "" : "  FAIL " + ne.detail) << '\n';
  }
  err << "  gramgross: " << gs.queries << " queries, " << gs.multiple << " with several candidates, n = a in "
      << gs.n_equals_a << '\n';
  return failures == 0 ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

struct CmArgs {
  std::string row;
  bool all = false;
  long p_max = 300;
  bool json_out = false;
};

int cmd_cm(const CmArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<const CmRow*> rows;
  if (a.all) {
    for (const auto& r : cm_rows()) rows.push_back(&r);
  } else {
    if (a.row.empty()) throw UsageError("give --row LABEL or --all");
    try {
      rows.push_back(&find_cm_row(a.row));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (a.p_max < 2) throw UsageError("--pmax must be at least 2");

  long cached_p = 0;
  std::vector<TypeRecord> cached;
  const TypeProvider provider = [&](const BigInteger& p) -> const std::vector<TypeRecord>& {
    if (cached_p != p.get_si()) {
      cached = enumerate_types(p);
      cached_p = p.get_si();
    }
    return cached;
  };

  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "cm";
  doc["p_max"] = a.p_max;
  doc["rows"] = json::array();
  if (!a.json_out) out << "j_label,p,D1,D2,D3,matches_closed_form\n";

  bool ok = true;
  for (const CmRow* row : rows) {
    const auto family = closed_form_family(*row);
    json entries = json::array();
    for (BigInteger p = 2; p <= a.p_max; p = next_prime(p)) {
      if (!row->supersingular_at(p)) continue;
      const auto& types = provider(p);
      const auto& t = types[cm_type_index(types, row->d)];
      std::string match;
      if (family && closed_form_applies(*family, p)) {
        const bool same = closed_form_gram(*family, p) == t.gram();
        ok = ok && same;
        match = same ? "true" : "false";
      }
      const auto& m = t.minima();
      if (a.json_out) {
        entries.push_back({{"p", big(p)},
                           {"minima", {big(m.d1), big(m.d2), big(m.d3)}},
                           {"gram", matrix_json(t.gram())},
                           {"matches_closed_form", match.empty() ? json(nullptr) : json(match == "true")}});
      } else {
        out << row->j_label << ',' << p << ',' << m.d1 << ',' << m.d2 << ',' << m.d3 << ',' << match << '\n';
      }
    }

    json ne = nullptr;
    if (BigRational(a.p_max) >= row->quarter_bound()) {
      const NeResult r = recompute_ne(*row, BigInteger(a.p_max), provider);
      ne = big(r.n_e);
      ok = ok && r.n_e == row->n_e;
      err << "N_E(" << row->j_label << ") = " << r.n_e << " (table " << row->n_e << ")\n";
    } else {
      err << "N_E(" << row->j_label << "): --pmax below (d+1)^2/4, not recomputed\n";
    }
    doc["rows"].push_back({{"j_label", row->j_label},
                           {"d", row->d},
                           {"f", row->f},
                           {"field_disc", row->field_disc},
                           {"n_e_table", row->n_e},
                           {"n_e_recomputed", ne},
                           {"primes", entries}});
  }
  if (a.json_out) out << doc.dump() << '\n';
  return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

int cmd_oracle(long p, long cap, std::ostream& out) {
  require_prime(p, "--p");
  if (p > cap) throw UsageError("--p exceeds the oracle cap (raise --cap)");
  const auto s = supersingular_j_set(static_cast<std::uint64_t>(p));
  json doc;
  doc["schema"] = kSchema;
  doc["command"] = "oracle";
  doc["p"] = p;
  doc["count"] = s.count();
  doc["spine_count"] = s.spine_count;
  doc["orbit_count"] = s.orbit_count;
  doc["j_list"] = json::array();
  for (const auto& j : s.j_list) doc["j_list"].push_back({{"j", to_string(j.j)}, {"in_fp", j.in_fp}});
  out << doc.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gross lattices of supersingular elliptic curves", "grosslat"};
  app.require_subcommand(1);

  TypesArgs types_args;
  auto* types = app.add_subcommand("types", "Enumerate maximal order types and classify them");
  types->add_option("--p", types_args.p, "Prime")->required();
  types->add_option("--ell", types_args.ell, "Neighbor prime for the walk (default 2, or 3 at p = 2)");
  types->add_option("--disc-bound", types_args.disc_bound, "Bound for embedded discriminants")
      ->check(CLI::Range(3L, 100000L));
  auto* types_csv = types->add_flag("--csv", types_args.csv, "CSV output");
  types->add_flag("--json", "JSON output (default)")->excludes(types_csv);

  long gg_p = 0, gg_d1 = 0;
  auto* gg = app.add_subcommand("gramgross", "Candidate Gram matrices for a prime and first minimum");
  gg->add_option("--p", gg_p, "Prime")->required();
  gg->add_option("--d1", gg_d1, "First successive minimum")->required();

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite over a prime range");
  verify->add_option("--pmin", vopt.p_min, "Smallest prime to check");
  verify->add_option("--pmax", vopt.p_max, "Largest prime to check");
  verify->add_option("--oracle-cap", vopt.oracle_cap, "Skip the finite-field oracle above this prime");
  verify->add_flag("--extended-cm", vopt.extended_cm, "Also recompute N_E for d = 43, 67, 163");

  CmArgs cm_args;
  auto* cm = app.add_subcommand("cm", "Class number one CM rows: closed forms and N_E");
  auto* cm_row = cm->add_option("--row", cm_args.row, "j-invariant label, e.g. 0, 1728, -15^3");
  cm->add_flag("--all", cm_args.all, "All 13 rows")->excludes(cm_row);
  cm->add_option("--pmax", cm_args.p_max, "Largest prime");
  auto* cm_json = cm->add_flag("--json", cm_args.json_out, "JSON output");
  cm->add_flag("--csv", "CSV output (default)")->excludes(cm_json);

  long or_p = 0, or_cap = 500;
  auto* oracle = app.add_subcommand("oracle", "Supersingular j-invariants over F_{p^2}");
  oracle->add_option("--p", or_p, "Prime")->required();
  oracle->add_option("--cap", or_cap, "Largest prime accepted");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*types) return cmd_types(types_args, out);
    if (*gg) return cmd_gramgross(gg_p, gg_d1, out);
    if (*verify) return cmd_verify(vopt, out, err);
    if (*cm) return cmd_cm(cm_args, out, err);
    if (*oracle) return cmd_oracle(or_p, or_cap, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace grosslat::cli
