#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "specht/groebner.hpp"
#include "specht/monomial_ideal.hpp"
#include "specht/suite.hpp"

using nlohmann::json;
using namespace specht;

namespace {

constexpr const char* kTool = "specht-gb";
constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 success / claim holds, 1 claim failure or cap hit,
// 2 usage or input error.
enum { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct GlobalConfig {
  int threads = 1;
  std::string output = "pretty";
  std::string field = "rational";
  bool timings = false;
  unsigned degree_cap = 0;
  double time_cap = 0;

  Caps caps() const {
    Caps c;
    c.degree_cap = degree_cap;
    c.time_cap_seconds = time_cap;
    return c;
  }
  VerifyOptions verify_options() const {
    VerifyOptions v;
    v.caps = caps();
    return v;
  }
};

/// Flags that name one ideal; shared by gens, gb, and radical-witness.
struct SpecFlags {
  std::string family = "specht_head";
  int n = 0;
  int l = 1;
  int m = 1;
  std::string lambda;
  std::vector<std::string> max;
  std::string chain;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(piece, &pos);
    } catch (const std::exception&) {
      throw Error("not an integer: \"" + piece + "\"");
    }
    if (pos != piece.size()) throw Error("not an integer: \"" + piece + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw Error("empty integer list");
  return out;
}

Partition parse_partition(const std::string& text) {
  return Partition::from_unsorted(parse_int_list(text));
}

/// n is redundant given lambda and l but must be stated; a mismatch is a
/// usage error, not something to silently repair.
void check_weight(int n, int l, const Partition& lambda) {
  if (lambda.weight() != n + l - 1)
    throw Error("lambda has weight " + std::to_string(lambda.weight()) +
                " but n + l - 1 = " + std::to_string(n + l - 1));
}

Filter filter_from_flags(const SpecFlags& sf) {
  if (!sf.max.empty()) {
    std::vector<Partition> frontier;
    for (const auto& s : sf.max) frontier.push_back(parse_partition(s));
    return Filter(sf.n, sf.l, Filter::Kind::lower, std::move(frontier));
  }
  if (!sf.lambda.empty())
    return Filter::principal_lower(sf.n, sf.l, parse_partition(sf.lambda));
  throw Error("a filter family needs --max (repeatable) or --lambda");
}

IdealSpec build_spec(const SpecFlags& sf) {
  const Family fam = family_from_name(sf.family);
  switch (fam) {
    case Family::specht_head:
    case Family::specht_tail:
    case Family::mixed: {
      if (sf.lambda.empty()) throw Error("--lambda is required for this family");
      Partition lam = parse_partition(sf.lambda);
      check_weight(sf.n, sf.l, lam);
      if (fam == Family::specht_head) return IdealSpec::specht_head(sf.l, lam);
      if (fam == Family::specht_tail) return IdealSpec::specht_tail(sf.l, lam);
      return IdealSpec::mixed(sf.l, sf.m, lam);
    }
    case Family::specht_filter:
      return IdealSpec::specht_filter(filter_from_flags(sf));
    case Family::mixed_filter:
      return IdealSpec::mixed_filter(sf.m, filter_from_flags(sf));
    case Family::lili: {
      if (sf.chain.empty()) throw Error("--chain is required for the lili family");
      std::vector<std::vector<int>> chain;
      std::stringstream ss(sf.chain);
      std::string piece;
      while (std::getline(ss, piece, ';')) chain.push_back(parse_int_list(piece));
      return IdealSpec::lili_chain(sf.n, std::move(chain));
    }
  }
  throw Error("unhandled family");
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// "rational" or "prime:<p>"; returns 0 for rational.
uint32_t parse_field(const std::string& field) {
  if (field == "rational") return 0;
  if (field.rfind("prime:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(field.substr(6));
    } catch (const std::exception&) {
      throw Error("bad field spec: " + field);
    }
    if (!is_prime(p) || p > 2147483647ul)
      throw Error("field characteristic must be a prime below 2^31");
    return static_cast<uint32_t>(p);
  }
  throw Error("--field must be rational or prime:<p>");
}

void require_not_csv(const GlobalConfig& g) {
  if (g.output == "csv") throw Error("csv output applies to the verify command only");
}

void require_rational(const GlobalConfig& g) {
  if (g.field != "rational")
    throw Error("--field prime:<p> applies to the gb command only");
}

json meta_json(const GlobalConfig& g) {
  return json{{"tool", kTool}, {"version", kVersion}, {"field", g.field}};
}

std::string histogram_str(const std::map<int, int>& h) {
  std::string out = "{";
  bool first = true;
  for (const auto& [d, c] : h) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(d) + ": " + std::to_string(c);
  }
  return out + "}";
}

json histogram_json(const std::map<int, int>& h) {
  json j = json::object();
  for (const auto& [d, c] : h) j[std::to_string(d)] = c;
  return j;
}

// ---------------------------------------------------------------------------
// stab

int cmd_stab(const GlobalConfig& g, int n, int l, const std::string& lambda,
             const std::string& variant) {
  require_not_csv(g);
  require_rational(g);
  Partition lam = parse_partition(lambda);
  check_weight(n, l, lam);
  Variant v;
  if (variant == "head") {
    v = Variant::head;
  } else if (variant == "tail") {
    v = Variant::tail;
  } else {
    throw Error("--variant must be head or tail");
  }
  std::vector<Tableau> tabs = enumerate_standard(l, lam, v);

  if (g.output == "json") {
    json out = meta_json(g);
    out["shape"] = partition_to_json(lam);
    out["l"] = l;
    out["n"] = n;
    out["variant"] = variant;
    out["count"] = tabs.size();
    json arr = json::array();
    for (const auto& t : tabs) arr.push_back(tableau_to_json(t));
    out["tableaux"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "standard tableaux, shape " << lam.str() << ", l=" << l << ", "
              << variant << " variant: " << tabs.size() << "\n";
    for (size_t i = 0; i < tabs.size(); ++i)
      std::cout << "  " << (i + 1) << ". " << tabs[i].str() << "\n";
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// gens

int cmd_gens(const GlobalConfig& g, const SpecFlags& sf, bool standard_only,
             bool expanded) {
  require_not_csv(g);
  require_rational(g);
  IdealSpec spec = build_spec(sf);
  std::vector<Generator> gens = generators(spec, standard_only);

  if (g.output == "json") {
    json out = meta_json(g);
    out["spec"] = spec.str();
    out["count"] = gens.size();
    json arr = json::array();
    for (const auto& gen : gens)
      arr.push_back(generator_to_json(gen, spec.n, expanded));
    out["generators"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << spec.str() << ": " << gens.size() << " generators\n";
    for (size_t i = 0; i < gens.size(); ++i) {
      std::cout << "  " << (i + 1) << ". " << gens[i].poly.str()
                << (gens[i].standard ? "   [standard]" : "") << "\n";
      if (expanded)
        std::cout << "     = " << gens[i].poly.expand<Rational>().str(spec.n)
                  << "\n";
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------
// gb

template <class K>
int gb_run(const GlobalConfig& g, const IdealSpec& spec,
           const std::vector<Polynomial<K>>& polys, const MonomialOrder& ord,
           bool verify_only, size_t gen_count, bool standard_only) {
  GBReport<K> rep = verify_only ? is_groebner(polys, ord, g.caps())
                                : buchberger(polys, ord, g.caps());
  std::vector<Monomial> mins =
      minimal_generators(leading_monomials(rep, ord));
  std::map<int, int> degrees = degree_histogram(mins);

  if (g.output == "json") {
    json out = meta_json(g);
    out["spec"] = spec.str();
    out["order"] = ord.str();
    out["mode"] = verify_only ? "is_groebner" : "buchberger";
    out["exact"] = g.field == "rational";
    out["generators"] = gen_count;
    out["standard_only"] = standard_only;
    out["verified"] = rep.verified;
    out["spairs"] = rep.spair_count;
    out["reductions_to_zero"] = rep.reductions_to_zero;
    out["max_intermediate_terms"] = rep.max_intermediate_terms;
    out["initial_degrees"] = histogram_json(degrees);
    json basis = json::array();
    for (const auto& f : rep.basis) basis.push_back(f.str(spec.n));
    out["basis"] = basis;
    if (!rep.verified && rep.fail_i >= 0)
      out["failure"] = json{{"pair", {rep.fail_i, rep.fail_j}},
                            {"stuck_monomial", rep.fail_lm.str(spec.n)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "ideal: " << spec.str() << "\n"
              << "order: " << ord.str() << "\n"
              << "field: " << g.field
              << (g.field == "rational" ? "" : "   (heuristic, not exact)")
              << "\n"
              << "generators: " << gen_count
              << (standard_only ? " (standard)" : " (full)") << "\n"
              << "mode: " << (verify_only ? "is_groebner" : "buchberger")
              << "\n"
              << "verified: " << (rep.verified ? "yes" : "no") << "\n"
              << "s-pairs: " << rep.spair_count
              << ", reductions to zero: " << rep.reductions_to_zero
              << ", max intermediate terms: " << rep.max_intermediate_terms
              << "\n"
              << "initial ideal minimal generator degrees: "
              << histogram_str(degrees) << "\n";
    if (!rep.verified && rep.fail_i >= 0)
      std::cout << "stuck pair (" << rep.fail_i << ", " << rep.fail_j
                << "), stuck leading monomial " << rep.fail_lm.str(spec.n)
                << "\n";
    std::cout << "basis (" << rep.basis.size() << " elements):\n";
    for (size_t i = 0; i < rep.basis.size(); ++i)
      std::cout << "  " << (i + 1) << ". " << rep.basis[i].str(spec.n) << "\n";
  }
  return rep.verified ? kExitPass : kExitFail;
}

int cmd_gb(const GlobalConfig& g, const SpecFlags& sf,
           const std::string& order_str, bool verify_only, bool full) {
  require_not_csv(g);
  IdealSpec spec = build_spec(sf);
  const bool standard_only =
      !full && (spec.family == Family::specht_head ||
                spec.family == Family::specht_tail ||
                spec.family == Family::specht_filter);
  std::vector<Generator> gens = generators(spec, standard_only);
  MonomialOrder ord = order_str.empty() ? MonomialOrder::default_lex(spec.n)
                                        : MonomialOrder::parse(order_str);
  if (ord.n() != spec.n)
    throw Error("order mentions " + std::to_string(ord.n()) +
                " variables but the ideal lives in " + std::to_string(spec.n));

  std::vector<QPoly> polys;
  for (const auto& gen : gens) polys.push_back(gen.poly.expand<Rational>());

  const uint32_t p = parse_field(g.field);
  if (p == 0)
    return gb_run(g, spec, polys, ord, verify_only, gens.size(), standard_only);
  std::vector<FpPoly> fp;
  for (const auto& f : polys) fp.push_back(to_prime(f, p));
  return gb_run(g, spec, fp, ord, verify_only, gens.size(), standard_only);
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const GlobalConfig& g, const std::string& suite_path,
               const std::string& report_path, const std::string& csv_path) {
  require_rational(g);
  std::ifstream in(suite_path);
  if (!in) throw Error("cannot open suite file: " + suite_path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error("cannot parse suite file: " + std::string(e.what()));
  }
  std::vector<SuiteItem> items = parse_suite(doc);

  SuiteOptions so;
  so.verify = g.verify_options();
  so.threads = g.threads;
  so.with_timings = g.timings;
  SuiteResult res = run_suite(items, so);

  auto write_jsonl = [&](std::ostream& os) {
    json meta = meta_json(g);
    meta["items"] = items.size();
    os << meta.dump() << "\n";
    for (size_t i = 0; i < items.size(); ++i)
      os << report_json_line(res.reports[i], items[i].expect_pass, g.timings)
         << "\n";
  };
  auto write_csv = [&](std::ostream& os) {
    os << csv_header() << "\n";
    for (const auto& rep : res.reports)
      os << report_csv_row(rep, g.timings) << "\n";
  };

  if (!report_path.empty()) {
    std::ofstream os(report_path);
    if (!os) throw Error("cannot write report file: " + report_path);
    write_jsonl(os);
  }
  if (!csv_path.empty()) {
    std::ofstream os(csv_path);
    if (!os) throw Error("cannot write csv file: " + csv_path);
    write_csv(os);
  }

  if (g.output == "json") {
    write_jsonl(std::cout);
  } else if (g.output == "csv") {
    write_csv(std::cout);
  } else {
    size_t good = 0;
    for (size_t i = 0; i < items.size(); ++i) {
      const ClaimReport& rep = res.reports[i];
      const bool sat = res.satisfied[i];
      if (sat) ++good;
      const char* marker = sat ? (items[i].expect_pass ? "pass " : "xfail")
                               : (rep.pass ? "XPASS" : "FAIL ");
      std::cout << marker << "  " << rep.claim << "  " << rep.params;
      std::string w = report_witness(rep);
      if (!w.empty()) std::cout << "  [" << w << "]";
      if (g.timings) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "  (%.3fs)", rep.seconds);
        std::cout << buf;
      }
      std::cout << "\n";
    }
    std::cout << good << "/" << items.size() << " claims satisfied\n";
  }
  return res.all_satisfied ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// universal

int cmd_universal(const GlobalConfig& g, int n, int l,
                  const std::string& lambda, bool exhaustive_flag,
                  bool exhaustive_given, bool random_only, int trials,
                  uint64_t seed) {
  require_not_csv(g);
  require_rational(g);
  Partition lam = parse_partition(lambda);
  check_weight(n, l, lam);

  constexpr int kExhaustiveCap = 5;
  bool exhaustive = exhaustive_given ? exhaustive_flag
                                     : (n <= kExhaustiveCap && !random_only);
  if (random_only) exhaustive = false;
  if (exhaustive && n > kExhaustiveCap)
    throw Error("the exhaustive lex sweep is capped at n = " +
                std::to_string(kExhaustiveCap) +
                "; use --random-only with --trials for larger n");
  if (!exhaustive && trials == 0)
    std::cerr << "warning: no order sweep requested; only the two guaranteed "
                 "orders are checked\n";

  ClaimReport rep =
      universal_search(n, l, lam, exhaustive, trials, seed, g.verify_options());

  if (g.output == "json") {
    json out = meta_json(g);
    out["seed"] = seed;
    out["line"] = json::parse(report_json_line(rep, true, g.timings));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rep.params << "\n";
    const json& e = rep.evidence;
    for (const auto& o : e.at("orders"))
      std::cout << "  ok    " << o.get<std::string>() << "\n";
    if (!rep.pass) {
      const json& c = e.at("counterexample");
      std::cout << "  FAIL  " << c.at("order").get<std::string>()
                << "  stuck leading monomial "
                << c.at("stuck_monomial").get<std::string>() << "\n";
    }
    const size_t checked = e.at("orders_checked").get<size_t>();
    if (rep.pass)
      std::cout << checked << "/" << checked << " orders pass\n";
    else
      std::cout << "counterexample found after " << checked << " orders\n";
  }
  return rep.pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// codim

int cmd_codim(const GlobalConfig& g, int n, int l, const std::string& lambda) {
  require_not_csv(g);
  require_rational(g);
  Partition lam = parse_partition(lambda);
  check_weight(n, l, lam);
  ClaimReport rep = check_codimension(n, l, lam, g.verify_options());

  if (g.output == "json") {
    json out = meta_json(g);
    out["line"] = json::parse(report_json_line(rep, true, g.timings));
    std::cout << out.dump(2) << "\n";
  } else {
    const json& e = rep.evidence;
    std::cout << rep.params << "\n"
              << "codimension: " << e.at("codimension").get<int>()
              << " (expected " << e.at("expected").get<int>() << ") "
              << (rep.pass ? "ok" : "MISMATCH") << "\n"
              << "initial ideal minimal generators: "
              << e.at("initial_generators").get<int>() << "\n";
  }
  return rep.pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// radical-witness

int cmd_radical_witness(const GlobalConfig& g, const SpecFlags& sf,
                        const std::string& f_str, int delta_m, bool search) {
  require_not_csv(g);
  require_rational(g);
  IdealSpec spec = build_spec(sf);

  ClaimReport rep;
  if (search) {
    rep = search_radicality_witness(spec, g.verify_options());
  } else if (delta_m > 0) {
    rep = check_radicality_witness(
        spec, DiffProduct::delta(delta_m).expand<Rational>(),
        g.verify_options());
  } else if (!f_str.empty()) {
    rep = check_radicality_witness(spec, QPoly::parse(f_str, spec.n),
                                   g.verify_options());
  } else {
    throw Error("need --f <poly>, --delta <m>, or --search");
  }

  if (g.output == "json") {
    json out = meta_json(g);
    out["line"] = json::parse(report_json_line(rep, true, g.timings));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rep.params << "\n";
    const json& e = rep.evidence;
    if (search) {
      if (rep.pass)
        std::cout << "witness: " << e.at("witness").get<std::string>()
                  << "   (f is outside the ideal, f^2 inside; scanned "
                  << e.at("scanned").get<size_t>() << " candidates)\n";
      else
        std::cout << "no witness among " << e.at("scanned").get<size_t>()
                  << " candidates up to degree "
                  << e.at("degree_bound").get<int>() << "\n";
    } else if (rep.pass) {
      std::cout << "witness confirmed: normal form has leading monomial "
                << e.at("nf_leading").get<std::string>()
                << ", and the square reduces to zero\n";
    } else {
      std::cout << "not a witness: "
                << (e.value("nf_nonzero", true)
                        ? "its square does not lie in the ideal"
                        : "the polynomial already lies in the ideal")
                << "\n";
    }
  }
  return rep.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specht ideal toolkit: generators, Groebner bases, and "
               "verification of their structural properties"};
  app.set_version_flag("--version", std::string(kTool) + " " + kVersion);
  app.require_subcommand(1);

  GlobalConfig g;
  if (const char* env = std::getenv("SPECHT_GB_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) g.threads = t;
  }
  app.add_option("--threads", g.threads, "worker threads for the verify suite")
      ->capture_default_str();
  app.add_option("--output", g.output, "output style")
      ->check(CLI::IsMember({"pretty", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--field", g.field,
                 "coefficient field: rational or prime:<p> (gb only)")
      ->capture_default_str();
  app.add_flag("--timings", g.timings, "include wall times in reports");
  app.add_option("--degree-cap", g.degree_cap,
                 "abort reductions above this total degree (0 = off)");
  app.add_option("--time-cap", g.time_cap,
                 "abort a claim after this many seconds (0 = off)");

  int rc = kExitPass;

  // stab
  auto* stab = app.add_subcommand("stab", "list standard tableaux");
  int stab_n = 0, stab_l = 1;
  std::string stab_lambda, stab_variant = "head";
  stab->add_option("--n", stab_n, "number of labels")->required();
  stab->add_option("--l", stab_l, "copies of the special label");
  stab->add_option("--lambda", stab_lambda, "shape, comma list")->required();
  stab->add_option("--variant", stab_variant, "head or tail")
      ->capture_default_str();
  stab->callback(
      [&] { rc = cmd_stab(g, stab_n, stab_l, stab_lambda, stab_variant); });

  auto add_spec_flags = [](CLI::App* cmd, SpecFlags& sf) {
    cmd->add_option("--family", sf.family,
                    "specht_head, specht_tail, specht_filter, lili, mixed, "
                    "mixed_filter")
        ->capture_default_str();
    cmd->add_option("--n", sf.n, "number of variables")->required();
    cmd->add_option("--l", sf.l, "copies of the special label");
    cmd->add_option("--m", sf.m, "Delta_m size for the mixed families");
    cmd->add_option("--lambda", sf.lambda, "shape, comma list");
    cmd->add_option("--max", sf.max,
                    "filter frontier shape, repeatable, comma list each");
    cmd->add_option("--chain", sf.chain,
                    "nested index sets, semicolon separated: 1,2,3;1,2");
  };

  // gens
  auto* gens = app.add_subcommand("gens", "print the generator list");
  SpecFlags gens_sf;
  bool gens_standard = false, gens_expanded = false;
  add_spec_flags(gens, gens_sf);
  gens->add_flag("--standard-only", gens_standard,
                 "standard tableaux only (rejected by the mixed families)");
  gens->add_flag("--expanded", gens_expanded, "also print expanded polynomials");
  gens->callback([&] { rc = cmd_gens(g, gens_sf, gens_standard, gens_expanded); });

  // gb
  auto* gb = app.add_subcommand(
      "gb", "compute or check a Groebner basis of the ideal");
  SpecFlags gb_sf;
  std::string gb_order;
  bool gb_verify_only = false, gb_full = false;
  add_spec_flags(gb, gb_sf);
  gb->add_option("--order", gb_order,
                 "monomial order, e.g. lex:1,2,3,4,5 (smallest first); "
                 "default lex with x1 smallest");
  gb->add_flag("--verify-only", gb_verify_only,
               "check the generators as given instead of completing them");
  gb->add_flag("--full-tab", gb_full,
               "use the full tableau enumeration, not just standard ones");
  gb->callback([&] { rc = cmd_gb(g, gb_sf, gb_order, gb_verify_only, gb_full); });

  // verify
  auto* verify = app.add_subcommand("verify", "run a claim suite file");
  std::string verify_suite, verify_report, verify_csv;
  verify->add_option("--suite", verify_suite, "suite JSON file")->required();
  verify->add_option("--report", verify_report, "also write a JSON-lines report");
  verify->add_option("--csv", verify_csv, "also write a CSV summary");
  verify->callback(
      [&] { rc = cmd_verify(g, verify_suite, verify_report, verify_csv); });

  // universal
  auto* uni = app.add_subcommand(
      "universal", "sweep monomial orders for a fixed shape");
  int uni_n = 0, uni_l = 1, uni_trials = 0;
  uint64_t uni_seed = 0;
  std::string uni_lambda;
  bool uni_exhaustive = false, uni_random_only = false;
  uni->add_option("--n", uni_n, "number of variables")->required();
  uni->add_option("--l", uni_l, "copies of the special label");
  uni->add_option("--lambda", uni_lambda, "shape, comma list")->required();
  auto* uni_ex = uni->add_flag("--exhaustive,!--no-exhaustive", uni_exhaustive,
                               "sweep all n! lex orders (default when n <= 5)");
  auto* uni_ro = uni->add_flag("--random-only", uni_random_only,
                               "skip the lex sweep, run random trials only");
  uni_ex->excludes(uni_ro);
  uni->add_option("--trials", uni_trials, "random weight orders to try");
  uni->add_option("--seed", uni_seed, "seed for the random weight orders");
  uni->callback([&] {
    rc = cmd_universal(g, uni_n, uni_l, uni_lambda, uni_exhaustive,
                       uni_ex->count() > 0, uni_random_only, uni_trials,
                       uni_seed);
  });

  // codim
  auto* codim = app.add_subcommand(
      "codim", "check the codimension formula for one shape");
  int codim_n = 0, codim_l = 1;
  std::string codim_lambda;
  codim->add_option("--n", codim_n, "number of variables")->required();
  codim->add_option("--l", codim_l, "copies of the special label");
  codim->add_option("--lambda", codim_lambda, "shape, comma list")->required();
  codim->callback([&] { rc = cmd_codim(g, codim_n, codim_l, codim_lambda); });

  // radical-witness
  auto* rad = app.add_subcommand(
      "radical-witness", "confirm or search for a non-radicality witness");
  SpecFlags rad_sf;
  std::string rad_f;
  int rad_delta = 0;
  bool rad_search = false;
  add_spec_flags(rad, rad_sf);
  rad->add_option("--f", rad_f, "candidate polynomial, e.g. \"x1*x2 - x3^2\"");
  rad->add_option("--delta", rad_delta,
                  "use the Vandermonde of the first <m> variables as candidate");
  rad->add_flag("--search", rad_search,
                "scan generator divisors for a witness");
  rad->callback(
      [&] { rc = cmd_radical_witness(g, rad_sf, rad_f, rad_delta, rad_search); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
