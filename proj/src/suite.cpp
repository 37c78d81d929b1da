#include "specht/suite.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>
#include <utility>

#include "specht/common.hpp"

namespace specht {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("missing parameter: ") + key);
  const json& v = j.at(key);
  if (!v.is_number_integer())
    throw Error(std::string("parameter must be an integer: ") + key);
  return v.get<int>();
}

int int_or(const json& j, const char* key, int fallback) {
  return j.contains(key) ? require_int(j, key) : fallback;
}

const json& require_key(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("missing parameter: ") + key);
  return j.at(key);
}

bool bool_or(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_boolean())
    throw Error(std::string("parameter must be a boolean: ") + key);
  return v.get<bool>();
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("missing parameter: ") + key);
  const json& v = j.at(key);
  if (!v.is_string())
    throw Error(std::string("parameter must be a string: ") + key);
  return v.get<std::string>();
}

MonomialOrder order_or_default(const json& j, int n) {
  if (j.contains("order")) return MonomialOrder::parse(require_string(j, "order"));
  return MonomialOrder::default_lex(n);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", s);
  return buf;
}

}  // namespace

json partition_to_json(const Partition& p) {
  json a = json::array();
  for (int i = 1; i <= p.length(); ++i) a.push_back(p.part(i));
  return a;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw Error("a partition must be a JSON array of parts");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error("partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition::from_unsorted(std::move(parts));
}

Filter filter_from_json(const json& j) {
  const int n = require_int(j, "n");
  const int l = require_int(j, "l");
  if (j.contains("lambda"))
    return Filter::principal_lower(n, l, partition_from_json(j.at("lambda")));
  const std::string kind_name =
      j.contains("kind") ? require_string(j, "kind") : "lower";
  Filter::Kind kind;
  if (kind_name == "lower") {
    kind = Filter::Kind::lower;
  } else if (kind_name == "upper") {
    kind = Filter::Kind::upper;
  } else {
    throw Error("filter kind must be \"lower\" or \"upper\"");
  }
  const char* key = j.contains("frontier") ? "frontier"
                    : j.contains("max")    ? "max"
                                           : nullptr;
  if (!key)
    throw Error("a filter needs \"lambda\" or a \"frontier\" list");
  const json& front = j.at(key);
  if (!front.is_array())
    throw Error("the filter frontier must be an array of partitions");
  std::vector<Partition> frontier;
  for (const auto& v : front) frontier.push_back(partition_from_json(v));
  return Filter(n, l, kind, std::move(frontier));
}

json filter_to_json(const Filter& f) {
  json front = json::array();
  for (const auto& p : f.frontier()) front.push_back(partition_to_json(p));
  return json{{"n", f.n()},
              {"l", f.l()},
              {"kind", f.kind() == Filter::Kind::lower ? "lower" : "upper"},
              {"frontier", front}};
}

IdealSpec spec_from_json(const json& j) {
  const Family family = family_from_name(require_string(j, "family"));
  switch (family) {
    case Family::specht_head:
      return IdealSpec::specht_head(require_int(j, "l"),
                                    partition_from_json(require_key(j, "lambda")));
    case Family::specht_tail:
      return IdealSpec::specht_tail(require_int(j, "l"),
                                    partition_from_json(require_key(j, "lambda")));
    case Family::specht_filter:
      return IdealSpec::specht_filter(filter_from_json(j));
    case Family::mixed:
      return IdealSpec::mixed(require_int(j, "l"), require_int(j, "m"),
                              partition_from_json(require_key(j, "lambda")));
    case Family::mixed_filter:
      return IdealSpec::mixed_filter(require_int(j, "m"), filter_from_json(j));
    case Family::lili: {
      if (!j.contains("chain") || !j.at("chain").is_array())
        throw Error("a lili spec needs a \"chain\" array of index sets");
      std::vector<std::vector<int>> chain;
      for (const auto& y : j.at("chain")) {
        if (!y.is_array()) throw Error("chain entries must be index arrays");
        chain.push_back(y.get<std::vector<int>>());
      }
      return IdealSpec::lili_chain(require_int(j, "n"), std::move(chain));
    }
  }
  throw Error("unhandled family");
}

json tableau_to_json(const Tableau& t) {
  return json{{"shape", partition_to_json(t.shape())},
              {"l", t.l()},
              {"variant", t.variant() == Variant::head ? "head" : "tail"},
              {"rows", t.rows()},
              {"standard", t.is_standard()}};
}

json generator_to_json(const Generator& g, int n, bool expanded) {
  json j{{"factored", g.poly.str()},
         {"degree", g.poly.degree()},
         {"columns", g.columns},
         {"standard", g.standard}};
  if (!g.shape.empty()) j["shape"] = partition_to_json(g.shape);
  if (expanded) j["expanded"] = g.poly.expand<Rational>().str(n);
  return j;
}

bool known_claim(const std::string& claim) {
  static const char* const kClaims[] = {
      "main1",        "main1_5",     "main2",
      "codimension",  "m_le_2",      "radicality_witness",
      "radicality_search", "universal"};
  for (const char* c : kClaims)
    if (claim == c) return true;
  return false;
}

ClaimReport run_claim(const std::string& claim, const json& params,
                      const VerifyOptions& opt) {
  if (claim == "main1") {
    Filter f = filter_from_json(params);
    return check_main1(f.n(), f.l(), f, order_or_default(params, f.n()), opt);
  }
  if (claim == "main1_5") {
    Filter f = filter_from_json(params);
    return check_main1_5(f.n(), f.l(), f, opt);
  }
  if (claim == "main2") {
    Filter f = filter_from_json(params);
    return check_main2(f.n(), f.l(), require_int(params, "m"), f,
                       order_or_default(params, f.n()), opt);
  }
  if (claim == "codimension") {
    return check_codimension(require_int(params, "n"), require_int(params, "l"),
                             partition_from_json(require_key(params, "lambda")),
                             opt);
  }
  if (claim == "m_le_2") {
    return check_m_le_2(require_int(params, "n"), require_int(params, "l"),
                        partition_from_json(require_key(params, "lambda")),
                        opt);
  }
  if (claim == "radicality_witness") {
    if (!params.contains("spec")) throw Error("missing parameter: spec");
    IdealSpec spec = spec_from_json(params.at("spec"));
    QPoly f;
    if (params.contains("delta")) {
      f = DiffProduct::delta(require_int(params, "delta")).expand<Rational>();
    } else {
      f = QPoly::parse(require_string(params, "f"), spec.n);
    }
    return check_radicality_witness(spec, f, opt);
  }
  if (claim == "radicality_search") {
    if (!params.contains("spec")) throw Error("missing parameter: spec");
    return search_radicality_witness(spec_from_json(params.at("spec")), opt);
  }
  if (claim == "universal") {
    return universal_search(require_int(params, "n"), require_int(params, "l"),
                            partition_from_json(require_key(params, "lambda")),
                            bool_or(params, "exhaustive", false),
                            int_or(params, "trials", 0),
                            static_cast<uint64_t>(int_or(params, "seed", 0)),
                            opt);
  }
  throw Error("unknown claim: " + claim);
}

SuiteItem parse_suite_item(const json& doc) {
  if (!doc.is_object()) throw Error("a suite item must be a JSON object");
  SuiteItem item;
  item.claim = require_string(doc, "claim");
  if (!known_claim(item.claim)) throw Error("unknown claim: " + item.claim);
  item.params = doc.contains("params") ? doc.at("params") : json::object();
  const std::string expect =
      doc.contains("expect") ? require_string(doc, "expect") : "pass";
  if (expect == "pass") {
    item.expect_pass = true;
  } else if (expect == "fail") {
    item.expect_pass = false;
  } else {
    throw Error("expect must be \"pass\" or \"fail\"");
  }
  return item;
}

std::vector<SuiteItem> parse_suite(const json& doc) {
  const json* items = nullptr;
  if (doc.is_array()) {
    items = &doc;
  } else if (doc.is_object() && doc.contains("suite")) {
    items = &doc.at("suite");
  } else {
    throw Error("a suite is a JSON array of items or {\"suite\": [...]}");
  }
  if (!items->is_array()) throw Error("the suite list must be a JSON array");
  std::vector<SuiteItem> out;
  for (const auto& j : *items) out.push_back(parse_suite_item(j));
  return out;
}

SuiteResult run_suite(const std::vector<SuiteItem>& items,
                      const SuiteOptions& opt) {
  SuiteResult result;
  result.reports.resize(items.size());
  result.satisfied.assign(items.size(), false);

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        result.reports[i] = run_claim(items[i].claim, items[i].params, opt.verify);
      } catch (const std::exception& e) {
        ClaimReport rep;
        rep.claim = items[i].claim;
        rep.params = items[i].params.dump();
        rep.pass = false;
        rep.evidence["error"] = e.what();
        result.reports[i] = std::move(rep);
      }
    }
  };

  const int threads = std::max(1, opt.threads);
  if (threads == 1 || items.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int count = std::min<int>(threads, static_cast<int>(items.size()));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  result.all_satisfied = true;
  for (size_t i = 0; i < items.size(); ++i) {
    result.satisfied[i] = result.reports[i].pass == items[i].expect_pass;
    if (!result.satisfied[i]) result.all_satisfied = false;
  }
  return result;
}

std::string report_witness(const ClaimReport& r) {
  const json& e = r.evidence;
  if (e.contains("witness") && e.at("witness").is_string())
    return e.at("witness").get<std::string>();
  if (e.contains("nf_leading") && e.at("nf_leading").is_string())
    return e.at("nf_leading").get<std::string>();
  for (const char* key : {"gb_failure", "counterexample"}) {
    if (e.contains(key) && e.at(key).is_object() &&
        e.at(key).contains("stuck_monomial"))
      return e.at(key).at("stuck_monomial").get<std::string>();
  }
  if (e.contains("initial_monomials_missed") &&
      e.at("initial_monomials_missed").is_array() &&
      !e.at("initial_monomials_missed").empty())
    return e.at("initial_monomials_missed").front().get<std::string>();
  for (const char* key : {"vanishing_failure", "separation_failure"}) {
    if (e.contains(key)) return e.at(key).dump();
  }
  if (e.contains("error")) return e.at("error").get<std::string>();
  return "";
}

std::string report_json_line(const ClaimReport& r, bool expect_pass,
                             bool with_timings) {
  json out{{"claim", r.claim},
           {"params", r.params},
           {"status", r.pass ? "pass" : "fail"},
           {"expected", expect_pass ? "pass" : "fail"},
           {"satisfied", r.pass == expect_pass},
           {"witness", report_witness(r)},
           {"evidence", r.evidence}};
  if (with_timings) out["seconds"] = r.seconds;
  return out.dump();
}

std::string csv_header() { return "claim,params,status,witness,seconds"; }

std::string report_csv_row(const ClaimReport& r, bool with_timings) {
  std::string row = csv_quote(r.claim);
  row += ',';
  row += csv_quote(r.params);
  row += ',';
  row += r.pass ? "pass" : "fail";
  row += ',';
  row += csv_quote(report_witness(r));
  row += ',';
  if (with_timings) row += format_seconds(r.seconds);
  return row;
}

}  // namespace specht
