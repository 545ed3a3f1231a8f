#include "sb/cli.hpp"

#include "sb/osc.hpp"
#include "sb/properties.hpp"
#include "sb/riesz.hpp"
#include "sb/weights.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace sb {

namespace {

using Clock = std::chrono::steady_clock;

struct Triple {
  int p, q, n;
};

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw config_error("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw config_error("not an integer: '" + s + "'");
  return v;
}

std::vector<Triple> triples(const SuiteConfig& cfg, const std::vector<Triple>& defaults) {
  if (cfg.p.empty() && cfg.q.empty() && cfg.n.empty()) return defaults;
  const std::vector<int> ps = cfg.p.empty() ? std::vector<int>{1} : cfg.p;
  const std::vector<int> qs = cfg.q.empty() ? std::vector<int>{1} : cfg.q;
  const std::vector<int> ns = cfg.n.empty() ? std::vector<int>{1} : cfg.n;
  std::vector<Triple> out;
  for (int p : ps)
    for (int q : qs)
      for (int n : ns) out.push_back({p, q, n});
  return out;
}

MultiIndex sized(const MultiIndex& m, int p, int q) {
  if (static_cast<int>(m.size()) != p + q)
    throw config_error("multi-index " + nlohmann::json(m).dump() + " must have length p + q = " + std::to_string(p + q));
  return m;
}

std::vector<MultiIndex> cone(int p, int q, int cap) {
  std::vector<MultiIndex> out;
  for (const auto& k : k_types(p, q, cap)) out.push_back(k.m);
  return out;
}

// All m with entries in [lo, hi].
std::vector<MultiIndex> box(int len, int lo, int hi) {
  std::vector<MultiIndex> out{{}};
  for (int i = 0; i < len; ++i) {
    std::vector<MultiIndex> next;
    for (const auto& m : out)
      for (int v = lo; v <= hi; ++v) {
        MultiIndex x = m;
        x.push_back(v);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

FlatDomain flat_domain(const SuiteConfig& cfg, int p, int q, int n) {
  FlatDomain d{p, q, n};
  d.method = cfg.method;
  d.samples = cfg.samples;
  d.seed = cfg.seed;
  if (cfg.nodes > 0) {
    d.radial_nodes = cfg.nodes;
    d.hermite_nodes = std::min(cfg.nodes, 8);
  }
  return d;
}

OmegaDomain omega_domain(const SuiteConfig& cfg, int p, int q) {
  OmegaDomain d{p, q};
  d.method = cfg.method;
  d.samples = cfg.samples;
  d.seed = cfg.seed;
  if (cfg.nodes > 0) {
    d.herm_nodes = cfg.nodes;
    d.cross_nodes = cfg.nodes;
  }
  return d;
}

VerificationReport base_report(const std::string& identity, int p, int q, int n, const MultiIndex& m,
                               const std::string& method) {
  VerificationReport r;
  r.identity = identity;
  r.p = p;
  r.q = q;
  r.n = n;
  r.m = m;
  r.method = method;
  return r;
}

void judge(VerificationReport& r, cplx lhs, cplx reference, double tol, double std_error = 0.0) {
  r.lhs = lhs;
  r.rhs = reference;
  r.reference = reference;
  const ErrorPair e = compare(lhs, reference);
  r.abs_err = e.abs_err;
  r.rel_err = e.rel_err;
  r.tolerance = tol;
  r.lhs_std_error = std_error;
  r.pass = e.rel_err <= tol || (std_error > 0.0 && e.abs_err <= 3.0 * std_error);
}

void push(SuiteOutcome& out, const VerificationReport& r, nlohmann::json extra = nullptr) {
  out.reports.push_back(r);
  nlohmann::json j = to_json(r);
  if (!extra.is_null()) j.update(extra);
  out.records.push_back(std::move(j));
}

void run_sbos(const SuiteConfig& cfg, SuiteOutcome& out) {
  const std::vector<Triple> def = {{0, 1, 1}, {0, 1, 2}, {1, 0, 1}, {1, 0, 2}, {1, 1, 1}, {1, 1, 2}, {0, 2, 1}, {1, 2, 2}};
  for (const auto& t : triples(cfg, def)) {
    const auto ms = cfg.m.empty() ? cone(t.p, t.q, 2) : cfg.m;
    for (const auto& m0 : ms) {
      const MultiIndex m = sized(m0, t.p, t.q);
      SbosOptions opt;
      if (cfg.tolerance) opt.tolerance = opt.mc_tolerance = *cfg.tolerance;
      const FlatDomain fd = flat_domain(cfg, t.p, t.q, t.n);
      push(out, superbosonise_check(t.p, t.q, t.n, StructuredFunction::conical(m), fd, omega_domain(cfg, t.p, t.q), opt));
    }
  }
}

void run_gamma(const SuiteConfig& cfg, SuiteOutcome& out) {
  const std::vector<Triple> def = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 0, 0}, {0, 2, 0}};
  for (const auto& t : triples(cfg, def)) {
    std::vector<MultiIndex> ms;
    if (cfg.m.empty()) {
      for (const auto& m : box(t.p + t.q, -2, 3))
        if (convergent(m, t.p, t.q)) ms.push_back(m);
    } else {
      for (const auto& m : cfg.m) {
        if (!convergent(sized(m, t.p, t.q), t.p, t.q))
          throw config_error("gamma: the integral diverges for m = " + nlohmann::json(m).dump() +
                             " (needs m_j > j - 1, and m_{p+1} - m_{p+2} <= 1 when q = 2)");
        ms.push_back(m);
      }
    }
    const OmegaDomain od = omega_domain(cfg, t.p, t.q);
    const double tol = cfg.tolerance.value_or(t.p == 2 || od.method == Method::mc ? 1e-3 : 1e-6);
    for (const auto& m : ms) {
      const auto t0 = Clock::now();
      const IntegrationResult num = integrate_omega(StructuredFunction::conical(m), 0, od);
      VerificationReport r = base_report("gamma", t.p, t.q, 0, m, to_string(od.method));
      judge(r, num.value, gamma_omega(m, t.p, t.q).value, tol, num.std_error);
      r.rhs_std_error = 0.0;
      (od.method == Method::mc ? r.samples : r.nodes) = num.evaluations;
      r.seed = od.method == Method::mc ? od.seed : 0;
      r.wall_time_ms = elapsed_ms(t0);
      push(out, r);
    }
  }
}

const std::vector<std::vector<double>>& laplace_points() {
  static const std::vector<std::vector<double>> base = {
      {0.7, 1.3, 0.9}, {1.0, 1.0, 1.0}, {1.6, 0.8, 1.2}, {2.5, 1.4, 0.6}, {0.5, 2.0, 1.5}};
  return base;
}

void run_laplace(const SuiteConfig& cfg, SuiteOutcome& out) {
  const std::vector<Triple> def = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  for (const auto& t : triples(cfg, def)) {
    std::vector<MultiIndex> ms;
    if (cfg.m.empty()) {
      for (const auto& m : box(t.p + t.q, -2, 3)) {
        int s = 0;
        for (int x : m) s += std::abs(x);
        if (s <= 3 && convergent(m, t.p, t.q) && gamma_omega(m, t.p, t.q).value != cplx(0.0)) ms.push_back(m);
      }
    } else {
      for (const auto& m : cfg.m) ms.push_back(sized(m, t.p, t.q));
    }
    const OmegaDomain od = omega_domain(cfg, t.p, t.q);
    const double tol = cfg.tolerance.value_or(od.method == Method::mc ? 1e-3 : 1e-6);
    for (const auto& m : ms) {
      if (!convergent(m, t.p, t.q))
        throw config_error("laplace: the transform diverges for m = " + nlohmann::json(m).dump() +
                           " (needs m_j > j - 1, and m_{p+1} - m_{p+2} <= 1 when q = 2)");
      for (const auto& pt : laplace_points()) {
        const auto t0 = Clock::now();
        const std::vector<double> x(pt.begin(), pt.begin() + t.p + t.q);
        const LaplacePair lp = laplace_conical(m, x, od);
        VerificationReport r = base_report("laplace", t.p, t.q, 0, m, to_string(od.method));
        judge(r, lp.numeric, lp.closed_form, tol, lp.detail.std_error);
        (od.method == Method::mc ? r.samples : r.nodes) = lp.detail.evaluations;
        r.seed = od.method == Method::mc ? od.seed : 0;
        r.note = "x = diag" + nlohmann::json(x).dump();
        r.wall_time_ms = elapsed_ms(t0);
        push(out, r);
      }
    }
    if (t.p == 1 && cfg.m.empty()) {
      MultiIndex m(t.p + t.q, 0);
      VerificationReport r = base_report("laplace_divergence", t.p, t.q, 0, m, "predicate");
      bool rejected = false;
      try {
        laplace_conical(m, std::vector<double>(t.p + t.q, 1.0), od);
      } catch (const divergence_error&) {
        rejected = true;
      }
      r.lhs = rejected ? 1.0 : 0.0;
      r.rhs = r.reference = 1.0;
      r.pass = rejected;
      r.note = "m_1 = 0 at p = 1 must be rejected as divergent";
      push(out, r);
    }
  }
}

void run_wtlap(const SuiteConfig& cfg, SuiteOutcome& out) {
  const std::vector<Triple> def = {{1, 0, 1}, {1, 1, 1}};
  for (const auto& t : triples(cfg, def)) {
    const auto ms = cfg.m.empty() ? cone(t.p, t.q, 1) : cfg.m;
    for (const auto& m0 : ms) {
      const MultiIndex m = sized(m0, t.p, t.q);
      for (double z : {0.0, 0.3, 0.5}) {
        const auto reps = weighted_lt_check(t.p, t.q, t.n, m, std::vector<double>(t.p + t.q, z),
                                            omega_domain(cfg, t.p, t.q), cfg.tolerance.value_or(1e-6));
        for (const auto& r : reps) push(out, r);
      }
    }
  }
}

void run_oscillator(const SuiteConfig& cfg, SuiteOutcome& out) {
  const std::vector<Triple> def = {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 2}};
  for (const auto& t : triples(cfg, def)) {
    {
      const auto t0 = Clock::now();
      const CommutatorReport c = commutator_check(t.p, t.q, t.n, cfg.degree);
      VerificationReport r = base_report("oscillator_commutators", t.p, t.q, t.n, {}, "exact");
      r.lhs = static_cast<double>(c.failures + c.centralizer_failures);
      r.pass = c.pass();
      r.nodes = c.vectors_checked + c.centralizer_checked;
      r.abs_err = r.rel_err = std::abs(r.lhs);
      r.note = std::to_string(c.pairs_checked) + " basis pairs, degree <= " + std::to_string(cfg.degree) +
               "; lhs counts failing vectors";
      r.wall_time_ms = elapsed_ms(t0);
      nlohmann::json extra = {{"failure_samples", c.failure_samples}};
      push(out, r, extra);
    }
    {
      const auto t0 = Clock::now();
      const auto got = highest_weight(t.p, t.q, t.n);
      const auto want = oscillator_lambda(t.p, t.q, t.n);
      VerificationReport r = base_report("oscillator_highest_weight", t.p, t.q, t.n, {}, "exact");
      r.pass = got == want;
      r.lhs = r.pass ? 0.0 : 1.0;
      const WeightBasis wb{t.p, t.q};
      r.note = "operators: " + wb.name(got) + "; formula: " + wb.name(want);
      r.wall_time_ms = elapsed_ms(t0);
      push(out, r);
    }
    {
      const auto t0 = Clock::now();
      const InvariantSpace inv = invariants_up_to_degree(t.p, t.q, t.n, 2);
      VerificationReport r = base_report("oscillator_invariants", t.p, t.q, t.n, {}, "exact");
      const int r2 = (t.p + t.q) * (t.p + t.q);
      judge(r, static_cast<double>(inv.dims[2]), static_cast<double>(r2), 0.0);
      r.pass = inv.dims[0] == 1 && inv.dims[1] == 0 && inv.dims[2] == r2;
      r.note = "invariant dimensions by degree " + nlohmann::json(inv.dims).dump() + "; degree 2 against (p+q)^2";
      r.wall_time_ms = elapsed_ms(t0);
      push(out, r);
    }
  }
}

void run_borel(const SuiteConfig& cfg, SuiteOutcome& out) {
  const std::vector<Triple> def = {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {2, 2, 1}};
  std::vector<Triple> ts = triples(cfg, def);
  for (const auto& t : ts) {
    const auto t0 = Clock::now();
    const BorelChain chain = borel_chain(t.p, t.q);
    VerificationReport r = base_report("borel_diagram", t.p, t.q, 0, {}, "exact");
    r.pass = chain.matches_target;
    r.lhs = r.pass ? 1.0 : 0.0;
    r.rhs = r.reference = 1.0;
    r.note = "final system " + nlohmann::json(chain.system.names()).dump() + "; target " +
             nlohmann::json(target_simple_system(t.p, t.q).names()).dump();
    r.wall_time_ms = elapsed_ms(t0);
    nlohmann::json log = nlohmann::json::array();
    for (const auto& s : chain.log) log.push_back(s.label);
    push(out, r, {{"diagram", chain.diagram.to_json()}, {"diagram_ascii", chain.diagram.ascii()}, {"reflections", log}});

    const std::vector<int> ns = cfg.n.empty() ? std::vector<int>{1, 2, 3, 4} : cfg.n;
    for (int n : ns) {
      const Weight lambda = oscillator_lambda(t.p, t.q, n);
      const Weight moved = reflect_along(lambda, chain);
      const WeightBasis wb{t.p, t.q};
      VerificationReport li = base_report("borel_lambda_invariance", t.p, t.q, n, {}, "exact");
      li.pass = moved == lambda;
      li.lhs = li.pass ? 0.0 : 1.0;
      li.note = "lambda " + wb.name(lambda) + " -> " + wb.name(moved);
      push(out, li);

      const FiniteDimResult fd = finite_dim_check(lambda, t.p, t.q);
      VerificationReport fr = base_report("finite_dim", t.p, t.q, n, {}, "exact");
      fr.pass = fd.finite == (t.p == 0);
      fr.lhs = fd.finite ? 1.0 : 0.0;
      fr.rhs = fr.reference = t.p == 0 ? 1.0 : 0.0;
      fr.note = fd.witness ? fd.witness->description : "even part dominant integral";
      push(out, fr);
    }
  }
}

void run_properties(const SuiteConfig& cfg, SuiteOutcome& out) {
  PropertyOptions po;
  po.seed = cfg.seed;
  if (cfg.tolerance) po.tolerance = *cfg.tolerance;
  for (const auto& r : algebraic_properties(po)) push(out, r);
  InvarianceOptions io;
  io.seed = cfg.seed;
  if (cfg.tolerance) io.tolerance = *cfg.tolerance;
  push(out, dy_invariance(1, 0, {2}, io));
  push(out, dy_invariance(0, 1, {1}, io));
  push(out, dy_invariance(1, 1, {2, 1}, io));
  for (int n : {1, 2}) {
    push(out, dv_relative_invariance(1, 0, n, {1}, io));
    push(out, dv_relative_invariance(0, 1, n, {-1}, io));
  }
  push(out, dv_relative_invariance(1, 1, 1, {1, 0}, io));
  push(out, dv_relative_invariance(1, 1, 2, {1, -1}, io));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"sbos", "gamma", "laplace", "wtlap", "oscillator", "borel", "properties"};
  return names;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  const std::string t = trim(s);
  if (t.empty()) return out;
  const auto dots = t.find("..");
  if (dots != std::string::npos) {
    const int lo = to_int(trim(t.substr(0, dots))), hi = to_int(trim(t.substr(dots + 2)));
    if (hi < lo) throw config_error("empty range: '" + s + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(trim(item)));
  return out;
}

MultiIndex parse_multi_index(const std::string& s) {
  MultiIndex m;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) m.push_back(to_int(trim(item)));
  if (m.empty()) throw config_error("empty multi-index");
  return m;
}

void validate(const SuiteConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw config_error("unknown suite '" + cfg.suite + "'");
  for (int v : cfg.p)
    if (v < 0 || v > 2) throw config_error("p = " + std::to_string(v) + " unsupported: need 0 <= p <= 2");
  for (int v : cfg.q)
    if (v < 0 || v > 2) throw config_error("q = " + std::to_string(v) + " unsupported: need 0 <= q <= 2");
  for (int v : cfg.n)
    if (v < 0 || v > 4) throw config_error("n = " + std::to_string(v) + " unsupported: need 0 <= n <= 4");
  if (cfg.samples <= 0) throw config_error("samples must be positive");
  if (cfg.nodes < 0) throw config_error("nodes must be nonnegative");
  if (cfg.tolerance && !(*cfg.tolerance >= 0.0)) throw config_error("tolerance must be nonnegative");
  if (cfg.suite == "sbos" || cfg.suite == "wtlap") {
    for (int p : cfg.p.empty() ? std::vector<int>{1} : cfg.p)
      for (int n : cfg.n.empty() ? std::vector<int>{1} : cfg.n) {
        if (cfg.suite == "sbos" && n < p)
          throw config_error("sbos requires n >= p (got n = " + std::to_string(n) + ", p = " + std::to_string(p) + ")");
        if (n < 1) throw config_error(cfg.suite + " requires n >= 1");
      }
  }
  if (cfg.suite == "sbos") {
    for (const auto& m : cfg.m) {
      for (int p : cfg.p.empty() ? std::vector<int>{1} : cfg.p) {
        if (static_cast<int>(m.size()) < p) continue;
        bool in_cone = true;
        for (int j = 0; j < static_cast<int>(m.size()); ++j) {
          if (j < p && m[j] < 0) in_cone = false;
          if (j >= p && m[j] > 0) in_cone = false;
          if (j + 1 < p && m[j] < m[j + 1]) in_cone = false;
          if (j >= p && j + 1 < static_cast<int>(m.size()) && m[j] > m[j + 1]) in_cone = false;
        }
        if (!in_cone)
          throw config_error("sbos: m = " + nlohmann::json(m).dump() +
                             " is outside the polynomial cone m_1 >= ... >= m_p >= 0, m_{p+1} <= ... <= m_{p+q} <= 0");
      }
    }
  }
  if (cfg.suite == "oscillator") {
    if (cfg.degree < 0 || cfg.degree > 4) throw config_error("oscillator degree cap must lie in 0..4");
    for (int n : cfg.n)
      if (n > 2) throw config_error("oscillator requires n <= 2");
  }
}

bool SuiteOutcome::all_pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

SuiteOutcome run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  SuiteOutcome out;
  if (cfg.suite == "sbos") run_sbos(cfg, out);
  else if (cfg.suite == "gamma") run_gamma(cfg, out);
  else if (cfg.suite == "laplace") run_laplace(cfg, out);
  else if (cfg.suite == "wtlap") run_wtlap(cfg, out);
  else if (cfg.suite == "oscillator") run_oscillator(cfg, out);
  else if (cfg.suite == "borel") run_borel(cfg, out);
  else if (cfg.suite == "properties") run_properties(cfg, out);
  return out;
}

int run(const SuiteConfig& cfg, std::ostream& log) {
  SuiteOutcome out;
  try {
    out = run_suite(cfg);
  } catch (const config_error& e) {
    log << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const divergence_error& e) {
    log << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    log << "invalid configuration: " << e.what() << "\n";
    return 2;
  }
  const std::string text = out.records.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      log << "cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  long passed = 0;
  for (const auto& r : out.reports) passed += r.pass ? 1 : 0;
  log << cfg.suite << ": " << passed << "/" << out.reports.size() << " pass\n";
  return out.all_pass() ? 0 : 1;
}

bool Summary::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const SummaryRow& r) { return r.passed == r.total; });
}

std::string Summary::table() const {
  std::ostringstream os;
  os << std::left << std::setw(28) << "identity" << std::right << std::setw(8) << "pass" << std::setw(8) << "total"
     << std::setw(14) << "max_rel_err" << "\n";
  for (const auto& r : rows)
    os << std::left << std::setw(28) << r.identity << std::right << std::setw(8) << r.passed << std::setw(8) << r.total
       << std::setw(14) << std::setprecision(3) << std::scientific << r.max_rel_err << std::defaultfloat << "\n";
  return os.str();
}

Summary report_summary(const std::vector<std::string>& paths) {
  std::map<std::string, SummaryRow> rows;
  for (const auto& path : paths) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read report file " + path);
    nlohmann::json j;
    try {
      f >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("malformed report file " + path + ": " + e.what());
    }
    if (!j.is_array()) throw std::runtime_error("report file " + path + " is not a JSON array");
    for (const auto& item : j) {
      const VerificationReport r = report_from_json(item);
      SummaryRow& row = rows[r.identity];
      row.identity = r.identity;
      ++row.total;
      row.passed += r.pass ? 1 : 0;
      row.max_rel_err = std::max(row.max_rel_err, r.rel_err);
    }
  }
  Summary s;
  for (auto& [k, v] : rows) s.rows.push_back(v);
  return s;
}

}  // namespace sb
