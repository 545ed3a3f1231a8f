#include "sb/report.hpp"

#include <cmath>

namespace sb {

ErrorPair compare(cplx value, cplx reference) {
  ErrorPair e;
  e.abs_err = std::abs(value - reference);
  const double scale = std::abs(reference);
  e.rel_err = scale > 0.0 ? e.abs_err / scale : e.abs_err;
  return e;
}

namespace {
nlohmann::json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }
cplx from_cjson(const nlohmann::json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }
}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j = {{"identity", r.identity},
                      {"p", r.p},
                      {"q", r.q},
                      {"n", r.n},
                      {"m", r.m},
                      {"method", r.method},
                      {"nodes", r.nodes},
                      {"samples", r.samples},
                      {"seed", r.seed},
                      {"lhs", cjson(r.lhs)},
                      {"rhs", cjson(r.rhs)},
                      {"reference", cjson(r.reference)},
                      {"abs_err", r.abs_err},
                      {"rel_err", r.rel_err},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"wall_time_ms", r.wall_time_ms}};
  if (r.method == "mc") {
    j["lhs_std_error"] = r.lhs_std_error;
    j["rhs_std_error"] = r.rhs_std_error;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  r.p = j.value("p", 0);
  r.q = j.value("q", 0);
  r.n = j.value("n", 0);
  r.m = j.value("m", MultiIndex{});
  r.method = j.value("method", std::string("quad"));
  r.nodes = j.value("nodes", 0L);
  r.samples = j.value("samples", 0L);
  r.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("lhs")) r.lhs = from_cjson(j.at("lhs"));
  if (j.contains("rhs")) r.rhs = from_cjson(j.at("rhs"));
  if (j.contains("reference")) r.reference = from_cjson(j.at("reference"));
  r.abs_err = j.value("abs_err", 0.0);
  r.rel_err = j.value("rel_err", 0.0);
  r.tolerance = j.value("tolerance", 0.0);
  r.pass = j.at("pass").get<bool>();
  r.wall_time_ms = j.value("wall_time_ms", 0.0);
  r.note = j.value("note", std::string());
  return r;
}

}  // namespace sb
