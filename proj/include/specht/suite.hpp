#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "specht/verify.hpp"

namespace specht {

/// One suite entry: a claim id, its parameters, and the expected outcome.
/// expect_pass=false marks a known-negative case; the suite then succeeds
/// exactly when the checker reports a failure.
struct SuiteItem {
  std::string claim;
  nlohmann::json params;
  bool expect_pass = true;
};

struct SuiteOptions {
  VerifyOptions verify;
  int threads = 1;
  /// Wall times differ run to run; reports stay byte-identical unless asked.
  bool with_timings = false;
};

struct SuiteResult {
  std::vector<ClaimReport> reports;  // in item order, whatever the workers did
  std::vector<bool> satisfied;       // outcome matches the expectation
  bool all_satisfied = true;
};

bool known_claim(const std::string& claim);

/// Parses {"claim": ..., "params": {...}, "expect": "pass"|"fail"} or a whole
/// suite document: either a bare array of items or {"suite": [...]}.
SuiteItem parse_suite_item(const nlohmann::json& doc);
std::vector<SuiteItem> parse_suite(const nlohmann::json& doc);

/// Dispatches one claim by id. Throws on unknown claims or bad parameters.
ClaimReport run_claim(const std::string& claim, const nlohmann::json& params,
                      const VerifyOptions& opt);

/// Runs the items on a small worker pool; per-item errors become failing
/// reports with the message in evidence. Results keep the input order.
SuiteResult run_suite(const std::vector<SuiteItem>& items,
                      const SuiteOptions& opt);

/// One report as a JSON line / a CSV row (claim, params, status, witness,
/// seconds) and the matching CSV header.
std::string report_json_line(const ClaimReport& r, bool expect_pass,
                             bool with_timings);
std::string report_csv_row(const ClaimReport& r, bool with_timings);
std::string csv_header();

/// The most specific witness a report carries, empty when passing.
std::string report_witness(const ClaimReport& r);

// JSON forms of the domain types used in suite parameters and dumps.
nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);
/// {"n", "l", "kind"?, "frontier": [[...], ...]}; "max" is accepted as an
/// alias for "frontier", and "lambda" names a principal lower filter.
Filter filter_from_json(const nlohmann::json& j);
nlohmann::json filter_to_json(const Filter& f);
/// {"family", "n"?, "l"?, "m"?, "lambda"?, "max"?, "chain"?}.
IdealSpec spec_from_json(const nlohmann::json& j);
nlohmann::json tableau_to_json(const Tableau& t);
nlohmann::json generator_to_json(const Generator& g, int n, bool expanded);

}  // namespace specht
