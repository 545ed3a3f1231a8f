#pragma once

#include "sb/smat.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace sb {

struct VerificationReport {
  std::string identity;
  int p = 0, q = 0, n = 0;
  MultiIndex m;
  std::string method = "quad";
  long nodes = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  cplx lhs{0.0, 0.0};
  cplx rhs{0.0, 0.0};
  cplx reference{0.0, 0.0};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time_ms = 0.0;
  double lhs_std_error = 0.0;
  double rhs_std_error = 0.0;
  std::string note;
};

// Error of value against reference; relative error falls back to the absolute
// error when the reference vanishes.
struct ErrorPair {
  double abs_err = 0.0;
  double rel_err = 0.0;
};
ErrorPair compare(cplx value, cplx reference);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace sb
