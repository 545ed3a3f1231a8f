#include "sb/properties.hpp"

#include "sb/domains.hpp"
#include "sb/riesz.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

namespace sb {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Worst case over a batch of (value, reference) comparisons.
struct Worst {
  ErrorPair err;
  cplx lhs, ref;
  long count = 0;

  void add(cplx value, cplx reference) {
    const ErrorPair e = compare(value, reference);
    if (count == 0 || e.rel_err > err.rel_err) {
      err = e;
      lhs = value;
      ref = reference;
    }
    ++count;
  }

  void add_super(const SElement<cplx>& value, const SElement<cplx>& reference) {
    const double scale = std::max(max_abs(reference), 1e-300);
    const double abs = max_abs_diff(value, reference);
    ErrorPair e{abs, abs / scale};
    if (count == 0 || e.rel_err > err.rel_err) {
      err = e;
      lhs = value.body();
      ref = reference.body();
    }
    ++count;
  }
};

VerificationReport finish(const std::string& identity, int p, int q, int n, const Worst& w, double tol,
                          std::uint64_t seed, Clock::time_point t0, std::string note) {
  VerificationReport r;
  r.identity = identity;
  r.p = p;
  r.q = q;
  r.n = n;
  r.method = "exact-sample";
  r.samples = w.count;
  r.seed = seed;
  r.lhs = w.lhs;
  r.rhs = w.ref;
  r.reference = w.ref;
  r.abs_err = w.err.abs_err;
  r.rel_err = w.err.rel_err;
  r.tolerance = tol;
  r.pass = w.count > 0 && w.err.rel_err <= tol;
  r.wall_time_ms = elapsed_ms(t0);
  r.note = std::move(note);
  return r;
}

struct Shape {
  int p, q;
};
constexpr Shape shapes[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};

std::string shape_note(int instances) {
  return std::to_string(instances) + " instances over (p|q) in {(1|1), (2|1), (1|2), (2|2)}, 4 odd generators";
}

Eigen::MatrixXcd block_diag(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& d) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(a.rows() + d.rows(), a.cols() + d.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(d.rows(), d.cols()) = d;
  return m;
}

}  // namespace

double RandomSuper::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

SuperMatrix<cplx> RandomSuper::even_matrix(int p, int q, double body_shift, double scale) {
  using E = SElement<cplx>;
  auto c = [&] { return cplx(uniform(-1.0, 1.0), uniform(-1.0, 1.0)); };
  SuperMatrix<cplx> m = SuperMatrix<cplx>::square(p, q);
  for (int i = 0; i < p + q; ++i)
    for (int j = 0; j < p + q; ++j) {
      E e(cplx(0.0), gens);
      if ((i >= p) == (j >= p)) {
        e = E(scale * c() + (i == j ? cplx(body_shift) : cplx(0.0)), gens);
        for (int a = 0; a < gens; ++a)
          for (int b = a + 1; b < gens; ++b) e += E::monomial((1u << a) | (1u << b), scale * c(), gens);
      } else {
        for (int a = 0; a < gens; ++a) e += E::monomial(1u << a, scale * c(), gens);
      }
      m(i, j) = e;
    }
  return m;
}

SuperMatrix<Rational> RandomSuper::even_matrix_exact(int p, int q, long long body_shift) {
  using E = SElement<Rational>;
  std::uniform_int_distribution<long long> num(-3, 3), den(1, 3), small(-1, 1);
  auto c = [&] { return Rational(num(rng), den(rng)); };
  SuperMatrix<Rational> m = SuperMatrix<Rational>::square(p, q);
  for (int i = 0; i < p + q; ++i)
    for (int j = 0; j < p + q; ++j) {
      E e(Rational(0), gens);
      if ((i >= p) == (j >= p)) {
        e = E(Rational(small(rng), den(rng)) + (i == j ? Rational(body_shift) : Rational(0)), gens);
        for (int a = 0; a < gens; ++a)
          for (int b = a + 1; b < gens; ++b) e += E::monomial((1u << a) | (1u << b), c(), gens);
      } else {
        for (int a = 0; a < gens; ++a) e += E::monomial(1u << a, c(), gens);
      }
      m(i, j) = e;
    }
  return m;
}

MobiusElement<cplx> RandomSuper::mobius_element(int p, int q, double scale) {
  return {even_matrix(p, q, 1.0, scale), even_matrix(p, q, 0.0, scale), even_matrix(p, q, 0.0, scale),
          even_matrix(p, q, 1.0, scale)};
}

EvenGroupElement RandomSuper::even_group_element(int p, int q, double max_phase) {
  auto posdef = [&](int k) {
    Eigen::MatrixXcd x(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) x(i, j) = cplx(uniform(-0.3, 0.3), uniform(-0.3, 0.3));
    return Eigen::MatrixXcd(x * x.adjoint() + Eigen::MatrixXcd::Identity(k, k) * uniform(0.7, 1.3));
  };
  auto unitary = [&](int k, double phase) {
    if (k == 0) return Eigen::MatrixXcd(0, 0);
    Eigen::MatrixXcd h(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) h(i, j) = cplx(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    h = (h + h.adjoint()).eval() * 0.5;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXd ev = es.eigenvalues() / std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-12);
    Eigen::VectorXcd ph(k);
    for (int i = 0; i < k; ++i) ph(i) = std::polar(1.0, phase * ev(i));
    return Eigen::MatrixXcd(es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint());
  };
  EvenGroupElement h;
  h.p = p;
  h.q = q;
  h.A = block_diag(posdef(p), posdef(q));
  h.D = block_diag(unitary(p, max_phase), unitary(q, std::numbers::pi));
  return h;
}

std::vector<VerificationReport> algebraic_properties(const PropertyOptions& opt) {
  std::vector<VerificationReport> out;
  RandomSuper rs(opt.seed);
  const int n_char = 2;

  {
    const auto t0 = Clock::now();
    Worst w;
    for (int i = 0; i < opt.instances; ++i) {
      const Shape s = shapes[i % 4];
      const auto x = rs.even_matrix(s.p, s.q, 2.0, 0.5), y = rs.even_matrix(s.p, s.q, 2.0, 0.5);
      w.add_super(berezinian(x * y), berezinian(x) * berezinian(y));
    }
    out.push_back(finish("ber_multiplicativity", 0, 0, 0, w, opt.tolerance, opt.seed, t0, shape_note(opt.instances)));
  }
  {
    const auto t0 = Clock::now();
    long bad = 0, total = 0;
    for (int i = 0; i < opt.instances; ++i) {
      const Shape s = shapes[i % 4];
      const auto x = rs.even_matrix_exact(s.p, s.q, 3), y = rs.even_matrix_exact(s.p, s.q, 3);
      if (!(berezinian(x * y) == berezinian(x) * berezinian(y))) ++bad;
      if (!(supertrace(x * y) == supertrace(y * x))) ++bad;
      total += 2;
    }
    Worst w;
    w.add(cplx(static_cast<double>(bad)), cplx(0.0));
    w.count = total;
    VerificationReport r = finish("exact_ber_str", 0, 0, 0, w, 0.0, opt.seed, t0,
                                  "rational ring: Ber(XY) == Ber(X)Ber(Y) and str(XY) == str(YX); lhs counts mismatches; " +
                                      shape_note(opt.instances));
    r.method = "exact";
    out.push_back(r);
  }
  {
    const auto t0 = Clock::now();
    Worst w;
    for (int i = 0; i < opt.instances; ++i) {
      const Shape s = shapes[i % 4];
      const auto x = rs.even_matrix(s.p, s.q, 0.0, 1.0), y = rs.even_matrix(s.p, s.q, 0.0, 1.0);
      const SElement<cplx> a = supertrace(x * y), b = supertrace(y * x);
      const double scale = std::max(max_abs(a), 1.0);
      w.add(cplx(max_abs_diff(a, b) / scale), cplx(0.0));
    }
    VerificationReport r = finish("str_cyclicity", 0, 0, 0, w, opt.tolerance, opt.seed, t0, shape_note(opt.instances));
    r.pass = w.err.abs_err <= opt.tolerance;
    out.push_back(r);
  }
  {
    const auto t0 = Clock::now();
    Worst w;
    for (int i = 0; i < opt.instances; ++i) {
      const Shape s = shapes[i % 4];
      const auto g1 = rs.mobius_element(s.p, s.q, 0.2), g2 = rs.mobius_element(s.p, s.q, 0.2);
      const auto z = rs.even_matrix(s.p, s.q, 0.0, 0.3);
      const auto lhs = mobius(g1 * g2, z), rhs = mobius(g1, mobius(g2, z));
      double scale = 1e-300;
      for (int a = 0; a < rhs.rows(); ++a)
        for (int b = 0; b < rhs.cols(); ++b) scale = std::max(scale, max_abs(rhs(a, b)));
      const double d = max_abs_diff(lhs, rhs);
      w.add(cplx(d / scale), cplx(0.0));
    }
    VerificationReport r = finish("mobius_composition", 0, 0, 0, w, opt.tolerance, opt.seed, t0, shape_note(opt.instances));
    r.note += "; lhs is the worst relative deviation";
    r.pass = w.err.abs_err <= opt.tolerance;
    out.push_back(r);
  }
  {
    const auto t0 = Clock::now();
    Worst w;
    for (int i = 0; i < opt.instances; ++i) {
      const Shape s = shapes[i % 4];
      const auto g1 = rs.mobius_element(s.p, s.q, 0.2), g2 = rs.mobius_element(s.p, s.q, 0.2);
      const auto z = rs.even_matrix(s.p, s.q, 0.0, 0.3);
      const auto lhs = chi_2lambda(isotropy_cocycle(g1 * g2, z), n_char);
      const auto rhs = chi_2lambda(isotropy_cocycle(g1, mobius(g2, z)), n_char) * chi_2lambda(isotropy_cocycle(g2, z), n_char);
      w.add_super(lhs, rhs);
    }
    out.push_back(finish("cocycle_character", 0, 0, n_char, w, opt.tolerance, opt.seed, t0, shape_note(opt.instances)));
  }
  return out;
}

VerificationReport dy_invariance(int p, int q, const MultiIndex& m, const InvarianceOptions& opt) {
  if (p > 1 || q > 1) throw std::invalid_argument("dy_invariance: supported for p, q <= 1");
  const auto t0 = Clock::now();
  RandomSuper rs(opt.seed);
  const StructuredFunction f = StructuredFunction::conical(m);
  OmegaDomain dom{p, q};
  dom.herm_nodes = 48;
  dom.phase_nodes = 32;
  const IntegrationResult base = integrate_omega(f, 0, dom);
  Worst w;
  for (int s = 0; s < opt.samples; ++s) {
    const EvenGroupElement h = rs.even_group_element(p, q, opt.max_phase);
    std::vector<double> rate(p);
    for (int j = 0; j < p; ++j) rate[j] = (h.D.topLeftCorner(p, p).inverse() * h.A.topLeftCorner(p, p)).real()(j, j);
    const Evaluator g = group_action(h, evaluator(f), 0, false);
    const IntegrationResult moved = integrate_omega(g, OmegaHints::for_exponent(f.exponent(p, q), p, rate), dom);
    w.add(moved.value, base.value);
  }
  VerificationReport r = finish("dy_invariance", p, q, 0, w, opt.tolerance, opt.seed, Clock::now(), "");
  r.m = f.exponent(p, q);
  r.method = "quad";
  r.note = std::to_string(opt.samples) + " sampled h = (A, D), A positive definite, D unitary; f = e^{-str} Delta_m";
  r.wall_time_ms = elapsed_ms(t0);
  return r;
}

VerificationReport dv_relative_invariance(int p, int q, int n, const MultiIndex& m, const InvarianceOptions& opt) {
  if (p > 1 || q > 1) throw std::invalid_argument("dv_relative_invariance: supported for p, q <= 1");
  if (n < p) throw std::invalid_argument("dv_relative_invariance: needs n >= p");
  const auto t0 = Clock::now();
  RandomSuper rs(opt.seed);
  const StructuredFunction f = StructuredFunction::conical(m);
  FlatDomain dom{p, q, n};
  dom.radial_nodes = 48;
  const int m1 = p > 0 ? f.exponent(p, q)[0] : 0;
  const IntegrationResult base = integrate_flat(f, dom);
  Worst w;
  for (int s = 0; s < opt.samples; ++s) {
    const EvenGroupElement h = rs.even_group_element(p, q, opt.max_phase);
    double alpha = 1.0;
    if (p > 0) alpha = (h.D.topLeftCorner(p, p).inverse() * h.A.topLeftCorner(p, p)).real()(0, 0);
    const Evaluator g = group_action(h, evaluator(f), n, false);
    const IntegrationResult moved = integrate_flat(g, dom, alpha, m1);
    w.add(moved.value, chi_2lambda(h.A, h.D, p, q, n) * base.value);
  }
  VerificationReport r = finish("dv_relative_invariance", p, q, n, w, opt.tolerance, opt.seed, Clock::now(), "");
  r.m = f.exponent(p, q);
  r.method = "quad";
  r.note = std::to_string(opt.samples) +
           " sampled h = (A, D); untwisted action against chi_{2 lambda}(h) = Ber(D)^n Ber(A)^-n; f = e^{-str} Delta_m";
  r.wall_time_ms = elapsed_ms(t0);
  return r;
}

}  // namespace sb
