#include "sb/domains.hpp"

#include "sb/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace sb {

std::string to_string(Method m) { return m == Method::quad ? "quad" : "mc"; }

Method method_from_string(const std::string& s) {
  if (s == "quad") return Method::quad;
  if (s == "mc") return Method::mc;
  throw std::invalid_argument("unknown method '" + s + "' (expected quad or mc)");
}

OmegaHints OmegaHints::for_exponent(const MultiIndex& total, int p, std::vector<double> rate) {
  OmegaHints h;
  h.rate = std::move(rate);
  for (int j = 0; j < p; ++j) h.beta.push_back(std::max(static_cast<double>(total[j]) - 1.0 - j, -0.5));
  return h;
}

bool convergent(const MultiIndex& m, int p, int q) {
  if (static_cast<int>(m.size()) != p + q) throw std::invalid_argument("convergent: multi-index length mismatch");
  for (int j = 0; j < p; ++j)
    if (m[j] <= j) return false;
  if (q == 2 && m[p] - m[p + 1] > 1) return false;
  return true;
}

cplx berezin_fiber(const SElement<cplx>& integrand, int generators) {
  if (integrand.generators() > generators) throw std::invalid_argument("berezin_fiber: undeclared odd generators present");
  return berezin_top(integrand.widened(generators));
}

SuperPoint omega_point(const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w) {
  using E = SElement<cplx>;
  const int p = static_cast<int>(z.rows()), q = static_cast<int>(w.rows());
  const int gens = OmegaLayout::generators(p, q);
  SuperPoint y = SuperPoint::square(p, q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) y(i, j) = E(z(i, j), gens);
  for (int k = 0; k < q; ++k)
    for (int l = 0; l < q; ++l) y(p + k, p + l) = E(w(k, l), gens);
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < q; ++k) {
      y(j, p + k) = E::generator(OmegaLayout::zeta(j, k, p), gens);
      y(p + k, j) = E::generator(OmegaLayout::omega(k, j, p), gens);
    }
  return y;
}

SElement<cplx> omega_density(const SuperPoint& y) {
  const int p = y.row_even(), q = y.row_odd();
  const SuperPoint z = y.block_A(), zeta = y.block_B(), om = y.block_C(), w = y.block_D();
  SElement<cplx> r(cplx(1.0));
  if (p == 0) return r;
  r = pow(det_even(z), -p);
  if (q == 0) return r;
  r = r * pow(det_even(z - zeta * inverse(w) * om), q);
  r = r * pow(det_even(w - om * inverse(z) * zeta), p);
  return r;
}

namespace {

struct Node {
  Eigen::MatrixXcd m;
  double w;
};

// Points on S^{2n-1}: u_a = sqrt(s_a) e^{i theta_a}, s uniform on the simplex.
std::vector<Node> sphere_rule(int n, int k) {
  const Rule ph = circle_trapezoid(k);
  const Rule leg = gauss_legendre(k);
  std::vector<std::pair<std::vector<double>, double>> simplex;
  if (n == 1) {
    simplex.push_back({{1.0}, 1.0});
  } else {
    // stick-breaking s_i = rest_i x_i with Jacobian prod rest_i; density (n-1)!
    std::vector<int> idx(n - 1, 0);
    double fact = 1.0;
    for (int i = 2; i < n; ++i) fact *= i;
    while (true) {
      std::vector<double> s(n);
      double rest = 1.0, wt = fact;
      for (int i = 0; i < n - 1; ++i) {
        const double x = leg.x[idx[i]];
        wt *= leg.w[idx[i]] * rest;
        s[i] = rest * x;
        rest *= 1.0 - x;
      }
      s[n - 1] = rest;
      simplex.push_back({s, wt});
      int d = 0;
      while (d < n - 1 && ++idx[d] == static_cast<int>(leg.size())) idx[d++] = 0;
      if (d == n - 1) break;
    }
  }
  std::vector<Node> out;
  std::vector<int> pidx(n, 0);
  while (true) {
    double wph = 1.0;
    for (int a = 0; a < n; ++a) wph *= ph.w[pidx[a]];
    for (const auto& [s, ws] : simplex) {
      Eigen::MatrixXcd u(1, n);
      for (int a = 0; a < n; ++a) u(0, a) = std::sqrt(s[a]) * std::polar(1.0, ph.x[pidx[a]]);
      out.push_back({u, wph * ws});
    }
    int d = 0;
    while (d < n && ++pidx[d] == static_cast<int>(ph.size())) pidx[d++] = 0;
    if (d == n) break;
  }
  return out;
}

IntegrationResult mean_with_error(const std::vector<cplx>& samples) {
  IntegrationResult r;
  const double n = static_cast<double>(samples.size());
  r.value = pairwise_sum(samples) / n;
  std::vector<double> dev(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) dev[i] = std::norm(samples[i] - r.value);
  r.std_error = samples.size() > 1 ? std::sqrt(pairwise_sum(dev) / (n - 1.0) / n) : 0.0;
  r.evaluations = static_cast<long>(samples.size());
  return r;
}

}  // namespace

IntegrationResult integrate_flat(const StructuredFunction& f, const FlatDomain& dom) {
  if (dom.p > 0 && f.alpha <= 0.0) throw std::invalid_argument("integrate_flat: alpha must be positive (non-integrable)");
  if (f.m && dom.p > dom.n) throw std::invalid_argument("integrate_flat: p > n makes the conical factor singular");
  const int m1 = (f.m && dom.p > 0) ? (*f.m)[0] : 0;
  return integrate_flat(evaluator(f), dom, f.alpha, m1);
}

IntegrationResult integrate_flat(const Evaluator& f, const FlatDomain& dom, double alpha, int radial_power) {
  const int p = dom.p, q = dom.q, n = dom.n;
  if (p < 0 || q < 0 || n < 1) throw std::invalid_argument("integrate_flat: invalid (p, q, n)");
  const int gens = FlatLayout::generators(q, n);
  auto fiber = [&](const Eigen::MatrixXcd& l0) { return berezin_fiber(f(q_map(l0, q)), gens); };
  const double sqrt_pi = std::sqrt(std::numbers::pi);

  if (p == 0) {
    IntegrationResult r;
    r.value = fiber(Eigen::MatrixXcd(0, n));
    r.evaluations = 1;
    return r;
  }
  if (alpha <= 0.0) throw std::invalid_argument("integrate_flat: alpha must be positive (non-integrable)");

  if (dom.method == Method::mc) {
    std::mt19937_64 rng(dom.seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5 / alpha));
    std::vector<cplx> vals;
    vals.reserve(dom.samples);
    const double log_norm = p * n * (std::log(alpha / std::numbers::pi) + 0.5 * std::log(std::numbers::pi));
    for (long s = 0; s < dom.samples; ++s) {
      Eigen::MatrixXcd l0(p, n);
      double r2 = 0.0;
      for (int i = 0; i < p; ++i)
        for (int a = 0; a < n; ++a) {
          const double x = normal(rng), y = normal(rng);
          l0(i, a) = cplx(x, y);
          r2 += x * x + y * y;
        }
      // F / (pdf * sqrt(pi)^{pn}) with pdf = (alpha/pi)^{pn} e^{-alpha |L|^2}
      vals.push_back(fiber(l0) * std::exp(alpha * r2 - log_norm));
    }
    return mean_with_error(vals);
  }

  std::vector<cplx> vals;
  if (p == 1 && !dom.hermite) {
    const Rule rad = gauss_laguerre(dom.radial_nodes, n - 1.0 + std::max(radial_power, 0), alpha);
    const std::vector<Node> sph = sphere_rule(n, dom.sphere_nodes);
    const double pref = std::pow(sqrt_pi, n) / std::tgamma(n);
    for (std::size_t i = 0; i < rad.size(); ++i) {
      const double t = rad.x[i];
      for (const auto& node : sph) vals.push_back(fiber(std::sqrt(t) * node.m) * (pref * rad.w[i] * std::pow(t, n - 1) * node.w));
    }
  } else {
    const Rule gh = gauss_hermite(dom.hermite_nodes, alpha);
    const int dims = 2 * p * n;
    const double total = std::pow(static_cast<double>(gh.size()), dims);
    if (total > 4.0e6) throw std::invalid_argument("integrate_flat: Gauss-Hermite grid too large, use --method mc");
    std::vector<int> idx(dims, 0);
    const double norm = std::pow(sqrt_pi, -p * n);
    while (true) {
      Eigen::MatrixXcd l0(p, n);
      double w = norm;
      for (int i = 0; i < p; ++i)
        for (int a = 0; a < n; ++a) {
          const int d = 2 * (i * n + a);
          l0(i, a) = cplx(gh.x[idx[d]], gh.x[idx[d + 1]]);
          w *= gh.w[idx[d]] * gh.w[idx[d + 1]];
        }
      vals.push_back(fiber(l0) * w);
      int d = 0;
      while (d < dims && ++idx[d] == static_cast<int>(gh.size())) idx[d++] = 0;
      if (d == dims) break;
    }
  }
  IntegrationResult r;
  r.value = pairwise_sum(vals);
  r.evaluations = static_cast<long>(vals.size());
  return r;
}

namespace {

std::vector<Node> unitary_rule(int q, const OmegaDomain& dom) {
  std::vector<Node> out;
  if (q == 0) {
    out.push_back({Eigen::MatrixXcd(0, 0), 1.0});
    return out;
  }
  const Rule ph = circle_trapezoid(dom.phase_nodes);
  if (q == 1) {
    for (std::size_t i = 0; i < ph.size(); ++i) {
      Eigen::MatrixXcd w(1, 1);
      w(0, 0) = std::polar(1.0, ph.x[i]);
      out.push_back({w, ph.w[i]});
    }
    return out;
  }
  if (q != 2) throw std::invalid_argument("unitary_rule: q must be at most 2");
  const Rule chi = circle_trapezoid(dom.euler_nodes);
  const Rule leg = gauss_legendre(dom.s_nodes);
  for (std::size_t a = 0; a < ph.size(); ++a)
    for (std::size_t b = 0; b < ph.size(); ++b)
      for (std::size_t c = 0; c < chi.size(); ++c)
        for (std::size_t d = 0; d < leg.size(); ++d) {
          const double cs = std::sqrt(leg.x[d]), sn = std::sqrt(1.0 - leg.x[d]);
          Eigen::MatrixXcd w(2, 2);
          w << std::polar(cs, ph.x[b]), std::polar(sn, chi.x[c]), -std::polar(sn, -chi.x[c]), std::polar(cs, -ph.x[b]);
          w *= std::polar(1.0, ph.x[a]);
          out.push_back({w, ph.w[a] * ph.w[b] * chi.w[c] * leg.w[d]});
        }
  return out;
}

Eigen::MatrixXcd cholesky_point(double u, double v, cplx c) {
  Eigen::MatrixXcd z(2, 2);
  const double a = std::sqrt(u);
  z << u, a * std::conj(c), a * c, std::norm(c) + v;
  return z;
}

std::vector<Node> herm_rule(int p, const OmegaHints& h, const OmegaDomain& dom) {
  std::vector<Node> out;
  if (p == 0) {
    out.push_back({Eigen::MatrixXcd(0, 0), 1.0});
    return out;
  }
  if (static_cast<int>(h.rate.size()) != p || static_cast<int>(h.beta.size()) != p)
    throw std::invalid_argument("integrate_omega: hints do not match p");
  if (p == 1) {
    const Rule r = gauss_laguerre(dom.herm_nodes, h.beta[0], h.rate[0]);
    for (std::size_t i = 0; i < r.size(); ++i) out.push_back({Eigen::MatrixXcd::Constant(1, 1, r.x[i]), r.w[i]});
    return out;
  }
  if (p != 2) throw std::invalid_argument("herm_rule: p must be at most 2");
  // trace-form Lebesgue measure in Cholesky coordinates: 2 u du dv d^2c
  const Rule ru = gauss_laguerre(dom.herm_nodes, h.beta[0], h.rate[0]);
  const Rule rv = gauss_laguerre(dom.herm_nodes, h.beta[1], h.rate[1]);
  const Rule rc = gauss_hermite(dom.cross_nodes, h.rate[1]);
  for (std::size_t i = 0; i < ru.size(); ++i)
    for (std::size_t j = 0; j < rv.size(); ++j)
      for (std::size_t a = 0; a < rc.size(); ++a)
        for (std::size_t b = 0; b < rc.size(); ++b)
          out.push_back({cholesky_point(ru.x[i], rv.x[j], cplx(rc.x[a], rc.x[b])),
                         2.0 * ru.x[i] * ru.w[i] * rv.w[j] * rc.w[a] * rc.w[b]});
  return out;
}

}  // namespace

IntegrationResult integrate_omega(const Evaluator& g, const OmegaHints& hints, const OmegaDomain& dom) {
  const int p = dom.p, q = dom.q;
  if (p < 0 || q < 0 || p > 2 || q > 2) throw std::invalid_argument("integrate_omega: (p, q) must lie in {0, 1, 2}");
  const int gens = OmegaLayout::generators(p, q);
  auto fiber = [&](const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w) {
    const SuperPoint y = omega_point(z, w);
    return berezin_fiber(omega_density(y) * g(y), gens);
  };

  if (dom.method == Method::mc) {
    std::mt19937_64 rng(dom.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<cplx> vals;
    vals.reserve(dom.samples);
    for (long s = 0; s < dom.samples; ++s) {
      Eigen::MatrixXcd z(p, p), w(q, q);
      double weight = 1.0;
      if (p >= 1) {
        std::gamma_distribution<double> gu(hints.beta[0] + 1.0, 1.0 / hints.rate[0]);
        const double u = gu(rng);
        const double log_pdf_u = (hints.beta[0] + 1.0) * std::log(hints.rate[0]) + hints.beta[0] * std::log(u) -
                                 hints.rate[0] * u - std::lgamma(hints.beta[0] + 1.0);
        if (p == 1) {
          z(0, 0) = u;
          weight = std::exp(-log_pdf_u);
        } else {
          std::gamma_distribution<double> gv(hints.beta[1] + 1.0, 1.0 / hints.rate[1]);
          std::normal_distribution<double> nc(0.0, std::sqrt(0.5 / hints.rate[1]));
          const double v = gv(rng);
          const double x = nc(rng), y = nc(rng);
          const double log_pdf_v = (hints.beta[1] + 1.0) * std::log(hints.rate[1]) + hints.beta[1] * std::log(v) -
                                   hints.rate[1] * v - std::lgamma(hints.beta[1] + 1.0);
          const double log_pdf_c = std::log(hints.rate[1] / std::numbers::pi) - hints.rate[1] * (x * x + y * y);
          z = cholesky_point(u, v, cplx(x, y));
          weight = 2.0 * u * std::exp(-log_pdf_u - log_pdf_v - log_pdf_c);
        }
      }
      if (q == 1) {
        w(0, 0) = std::polar(1.0, two_pi * unit(rng));
      } else if (q == 2) {
        const double a = two_pi * unit(rng), b = two_pi * unit(rng), c = two_pi * unit(rng), t = unit(rng);
        const double cs = std::sqrt(t), sn = std::sqrt(1.0 - t);
        w << std::polar(cs, b), std::polar(sn, c), -std::polar(sn, -c), std::polar(cs, -b);
        w *= std::polar(1.0, a);
      }
      vals.push_back(fiber(z, w) * weight);
    }
    return mean_with_error(vals);
  }

  const std::vector<Node> hz = herm_rule(p, hints, dom);
  const std::vector<Node> uw = unitary_rule(q, dom);
  std::vector<cplx> vals;
  vals.reserve(hz.size() * uw.size());
  for (const auto& a : hz)
    for (const auto& b : uw) vals.push_back(fiber(a.m, b.m) * (a.w * b.w));
  IntegrationResult r;
  r.value = pairwise_sum(vals);
  r.evaluations = static_cast<long>(vals.size());
  return r;
}

IntegrationResult integrate_omega(const StructuredFunction& f, int weight_n, const OmegaDomain& dom) {
  const int p = dom.p, q = dom.q;
  MultiIndex total = f.exponent(p, q);
  for (auto& x : total) x += weight_n;
  if (!convergent(total, p, q)) throw divergence_error("integrate_omega: integral diverges for this exponent");
  if (p > 0 && f.alpha <= 0.0) throw std::invalid_argument("integrate_omega: alpha must be positive");
  const Evaluator g = [f, weight_n](const SuperPoint& y) { return evaluate(f, y) * pow(berezinian(y), weight_n); };
  return integrate_omega(g, OmegaHints::for_exponent(total, p, std::vector<double>(p, f.alpha)), dom);
}

}  // namespace sb
