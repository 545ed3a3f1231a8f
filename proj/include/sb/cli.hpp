#pragma once

#include "sb/domains.hpp"
#include "sb/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sb {

struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Empty p/q/n/m lists select the suite's default sweep.
struct SuiteConfig {
  std::string suite;
  std::vector<int> p, q, n;
  std::vector<MultiIndex> m;
  Method method = Method::quad;
  int nodes = 0;  // 0 keeps the engine defaults
  long samples = 200000;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;
  int degree = 3;  // oscillator degree cap
  std::string out;
};

const std::vector<std::string>& suite_names();

// "0..2" or "0,1,2".
std::vector<int> parse_int_list(const std::string& s);
// "1,0" or "2,-1".
MultiIndex parse_multi_index(const std::string& s);

void validate(const SuiteConfig& cfg);

struct SuiteOutcome {
  std::vector<VerificationReport> reports;
  nlohmann::json records = nlohmann::json::array();  // reports plus suite-specific fields
  bool all_pass() const;
};

SuiteOutcome run_suite(const SuiteConfig& cfg);

// Runs the suite, writes the JSON array to cfg.out (stdout when empty) and returns
// 0 when every report passes, 1 on numeric failure, 2 on invalid configuration.
int run(const SuiteConfig& cfg, std::ostream& log);

struct SummaryRow {
  std::string identity;
  long total = 0;
  long passed = 0;
  double max_rel_err = 0.0;
};

struct Summary {
  std::vector<SummaryRow> rows;
  bool all_pass() const;
  std::string table() const;
};

// Aggregates report files; throws std::runtime_error on unreadable input.
Summary report_summary(const std::vector<std::string>& paths);

}  // namespace sb
