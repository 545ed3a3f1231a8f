#include "sb/riesz.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace sb {

namespace {

double rgamma_int(int x) { return x <= 0 ? 0.0 : 1.0 / std::tgamma(x); }

void check_length(const MultiIndex& m, int p, int q) {
  if (static_cast<int>(m.size()) != p + q) throw std::invalid_argument("multi-index length does not match p + q");
}

GammaValue finish(double value, bool pole) {
  GammaValue g;
  g.is_pole = pole;
  g.value = pole ? cplx(std::numeric_limits<double>::infinity(), 0.0) : cplx(value, 0.0);
  return g;
}

double herm_factor(const MultiIndex& m, int p, bool& pole) {
  double v = std::pow(2.0 * std::numbers::pi, p * (p - 1) / 2.0);
  for (int j = 0; j < p; ++j) {
    const int arg = m[j] - j;
    if (arg <= 0) pole = true;
    else v *= std::tgamma(arg);
  }
  return v;
}

Eigen::MatrixXcd diagonal_matrix(const std::vector<cplx>& x) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d(i, i) = x[i];
  return d;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

GammaValue gamma_omega(const MultiIndex& m, int p, int q) {
  check_length(m, p, q);
  bool pole = false;
  double v = herm_factor(m, p, pole);
  int odd_sum = 0;
  for (int k = 1; k <= q; ++k) {
    const int mk = m[p + k - 1];
    odd_sum += mk;
    v *= std::tgamma(k) * rgamma_int(mk - p + k);
  }
  if (odd_sum < 0) v = 0.0;
  return finish(v, pole);
}

GammaValue gamma_omega_literal(const MultiIndex& m, int p, int q) {
  check_length(m, p, q);
  bool pole = false;
  double v = herm_factor(m, p, pole);
  for (int k = 1; k <= q; ++k) {
    const int mk = m[p + k - 1];
    v *= std::tgamma(q - k + 1) * rgamma_int(mk + q - k + 1) * rgamma_int(mk - p + k);
    if (mk + k <= 0) pole = true;
    else v *= std::tgamma(mk + k);
  }
  return finish(v, pole);
}

bool no_pole_region(const MultiIndex& m, int p, int q) {
  check_length(m, p, q);
  for (int j = 0; j < p; ++j)
    if (m[j] <= j) return false;
  for (int k = 1; k <= q; ++k)
    if (m[p + k - 1] <= p - k) return false;
  return true;
}

MultiIndex shifted(const MultiIndex& m, int n) {
  MultiIndex r = m;
  for (auto& x : r) x += n;
  return r;
}

cplx pochhammer(int n, const MultiIndex& m, int p, int q) {
  const GammaValue g0 = gamma_omega(MultiIndex(p + q, n), p, q);
  if (g0.is_pole || g0.value == cplx(0.0)) throw std::domain_error("pochhammer: Gamma_Omega(n) vanishes or has a pole");
  const GammaValue g1 = gamma_omega(shifted(m, n), p, q);
  if (g1.is_pole) throw std::domain_error("pochhammer: Gamma_Omega(m + n) has a pole");
  return g1.value / g0.value;
}

bool annihilated_if_below_n_minus_p(const MultiIndex& m, int n, int p) { return m.at(p) < n - p; }
bool annihilated_if_below_p_minus_n(const MultiIndex& m, int n, int p) { return m.at(p) < p - n; }

cplx delta_m_diagonal(const std::vector<cplx>& x, const MultiIndex& m, int p, int q) {
  check_length(m, p, q);
  if (static_cast<int>(x.size()) != p + q) throw std::invalid_argument("delta_m_diagonal: point length mismatch");
  cplx r = 1.0, ber = 1.0;
  for (int k = 1; k <= p + q; ++k) {
    ber = k <= p ? ber * x[k - 1] : ber / x[k - 1];
    const int e = m[k - 1] - (k < p + q ? m[k] : 0);
    r *= std::pow(ber, e);
  }
  return r;
}

LaplacePair laplace_conical(const MultiIndex& m, const std::vector<double>& x, const OmegaDomain& dom) {
  const int p = dom.p, q = dom.q;
  check_length(m, p, q);
  if (static_cast<int>(x.size()) != p + q) throw std::invalid_argument("laplace_conical: point length mismatch");
  for (double v : x)
    if (v <= 0.0) throw std::invalid_argument("laplace_conical: point must be positive diagonal");
  if (!convergent(m, p, q)) throw divergence_error("laplace_conical: requires m_j > j - 1 (and the U(2) condition)");
  std::vector<cplx> xc(x.begin(), x.end()), xinv;
  for (double v : x) xinv.push_back(1.0 / v);
  const SuperPoint xi = SuperPoint::from_body(diagonal_matrix(xinv), p, q);
  const Evaluator g = [xi, m](const SuperPoint& y) { return exp_neg_str(xi * y, 1.0) * delta_m(y, m); };
  std::vector<double> rate(p);
  for (int j = 0; j < p; ++j) rate[j] = 1.0 / x[j];
  LaplacePair r;
  r.detail = integrate_omega(g, OmegaHints::for_exponent(m, p, rate), dom);
  r.numeric = r.detail.value;
  r.closed_form = gamma_omega(m, p, q).value * delta_m_diagonal(xc, m, p, q);
  return r;
}

IntegrationResult riesz_apply(const RieszSpec& spec, const StructuredFunction& f, const OmegaDomain& dom) {
  if (dom.p != spec.p || dom.q != spec.q) throw std::invalid_argument("riesz_apply: domain (p, q) differs from the functional");
  IntegrationResult r = integrate_omega(f, spec.n, dom);
  if (spec.normalization == Normalization::normalised) {
    const GammaValue g = gamma_omega(MultiIndex(spec.p + spec.q, spec.n), spec.p, spec.q);
    if (g.is_pole || g.value == cplx(0.0)) throw std::domain_error("riesz_apply: Gamma_Omega(n) vanishes or has a pole");
    r.value /= g.value;
    r.std_error /= std::abs(g.value);
  }
  return r;
}

cplx chi_2lambda(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& d, int p, int q, int n) {
  return std::pow(numeric_berezinian(d, p, q), n) * std::pow(numeric_berezinian(a, p, q), -n);
}

IntegrationResult weighted_laplace(const Evaluator& f, const Eigen::MatrixXcd& x, int n, const OmegaHints& hints,
                                   const OmegaDomain& dom) {
  const int p = dom.p, q = dom.q;
  const GammaValue g = gamma_omega(MultiIndex(p + q, n), p, q);
  if (g.is_pole || g.value == cplx(0.0)) throw std::domain_error("weighted_laplace: Gamma_Omega(n) vanishes or has a pole");
  const SuperPoint xs = SuperPoint::from_body(x, p, q);
  const Evaluator k = [xs, f, n](const SuperPoint& y) {
    return exp_neg_str(xs * y, 0.5) * f(y) * pow(berezinian(y), n);
  };
  IntegrationResult r = integrate_omega(k, hints, dom);
  r.value /= g.value;
  r.std_error /= std::abs(g.value);
  return r;
}

VerificationReport superbosonise_check(int p, int q, int n, const StructuredFunction& f, const FlatDomain& flat,
                                       const OmegaDomain& omega, const SbosOptions& opt) {
  if (n < p) throw std::invalid_argument("superbosonise_check: the identity needs n >= p");
  const auto t0 = std::chrono::steady_clock::now();
  FlatDomain fd = flat;
  fd.p = p;
  fd.q = q;
  fd.n = n;
  OmegaDomain od = omega;
  od.p = p;
  od.q = q;
  const double scale = std::pow(std::sqrt(std::numbers::pi), n * p);

  VerificationReport rep;
  rep.identity = "sbos";
  rep.p = p;
  rep.q = q;
  rep.n = n;
  rep.m = f.exponent(p, q);
  const bool mc = fd.method == Method::mc || od.method == Method::mc;
  rep.method = mc ? "mc" : "quad";
  rep.seed = mc ? fd.seed : 0;

  const IntegrationResult lhs = integrate_flat(f, fd);
  const IntegrationResult rn = riesz_apply({p, q, n, Normalization::normalised}, f, od);
  rep.lhs = lhs.value;
  rep.rhs = scale * rn.value;
  rep.lhs_std_error = lhs.std_error;
  rep.rhs_std_error = scale * rn.std_error;
  rep.nodes = mc ? 0 : lhs.evaluations + rn.evaluations;
  rep.samples = mc ? lhs.evaluations + rn.evaluations : 0;

  const bool closed = f.poly.empty() && f.alpha == 1.0;
  ErrorPair e;
  if (closed) {
    rep.reference = scale * pochhammer(n, rep.m, p, q);
    const ErrorPair el = compare(rep.lhs, rep.reference), er = compare(rep.rhs, rep.reference);
    e = {std::max(el.abs_err, er.abs_err), std::max(el.rel_err, er.rel_err)};
  } else {
    rep.reference = rep.rhs;
    rep.note = "no closed form for this integrand; lhs compared with rhs";
    e = compare(rep.lhs, rep.rhs);
  }
  rep.abs_err = e.abs_err;
  rep.rel_err = e.rel_err;
  rep.tolerance = mc ? opt.mc_tolerance : opt.tolerance;
  if (mc) {
    const double se = std::hypot(rep.lhs_std_error, rep.rhs_std_error);
    rep.pass = e.rel_err <= opt.mc_tolerance || e.abs_err <= 3.0 * se;
  } else {
    rep.pass = e.rel_err <= opt.tolerance;
  }
  rep.wall_time_ms = elapsed_ms(t0);
  return rep;
}

std::vector<VerificationReport> weighted_lt_check(int p, int q, int n, const MultiIndex& m, const std::vector<double>& z,
                                                  const OmegaDomain& omega, double tolerance) {
  check_length(m, p, q);
  if (static_cast<int>(z.size()) != p + q) throw std::invalid_argument("weighted_lt_check: point length mismatch");
  const auto t0 = std::chrono::steady_clock::now();
  OmegaDomain od = omega;
  od.p = p;
  od.q = q;
  const MultiIndex total = shifted(m, n);
  if (!convergent(total, p, q)) throw divergence_error("weighted_lt_check: LT_n diverges for m + n");

  std::vector<cplx> zc(z.begin(), z.end()), one_minus;
  for (double v : z) {
    if (v == 1.0) throw std::domain_error("weighted_lt_check: 1 - z is singular");
    one_minus.push_back(1.0 - v);
  }
  const SuperPoint zp = SuperPoint::from_body(diagonal_matrix(zc), p, q);
  const Eigen::MatrixXcd x = cayley(zp).body();

  std::vector<double> rate(p);
  for (int j = 0; j < p; ++j) rate[j] = 0.5 * (x(j, j).real() + 1.0);
  const IntegrationResult lt =
      weighted_laplace(evaluator(StructuredFunction::conical(m, 0.5)), x, n, OmegaHints::for_exponent(total, p, rate), od);

  const cplx poch = pochhammer(n, m, p, q);
  const cplx ber_one_minus = numeric_berezinian(diagonal_matrix(one_minus), p, q);

  std::vector<VerificationReport> out;
  for (int variant = 0; variant < 2; ++variant) {
    VerificationReport r;
    r.identity = variant == 0 ? "wtlap_pullback" : "wtlap_weighted";
    r.p = p;
    r.q = q;
    r.n = n;
    r.m = m;
    r.method = to_string(od.method);
    r.seed = od.method == Method::mc ? od.seed : 0;
    r.nodes = od.method == Method::mc ? 0 : lt.evaluations;
    r.samples = od.method == Method::mc ? lt.evaluations : 0;
    if (variant == 0) {
      r.lhs = lt.value;
      r.reference = poch * delta_m_diagonal(one_minus, total, p, q);
    } else {
      r.lhs = std::pow(ber_one_minus, -n) * lt.value;
      r.reference = poch * delta_m_diagonal(one_minus, m, p, q);
    }
    r.rhs = r.reference;
    r.lhs_std_error = lt.std_error;
    const ErrorPair e = compare(r.lhs, r.reference);
    r.abs_err = e.abs_err;
    r.rel_err = e.rel_err;
    r.tolerance = tolerance;
    r.pass = od.method == Method::mc ? (e.rel_err <= tolerance || e.abs_err <= 3.0 * lt.std_error) : e.rel_err <= tolerance;
    r.note = "z = diag(";
    for (std::size_t i = 0; i < z.size(); ++i) r.note += (i ? ", " : "") + std::to_string(z[i]);
    r.note += ")";
    r.wall_time_ms = elapsed_ms(t0);
    out.push_back(r);
  }
  return out;
}

}  // namespace sb
