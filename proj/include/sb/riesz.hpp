#pragma once

#include "sb/domains.hpp"
#include "sb/report.hpp"

#include <utility>
#include <vector>

namespace sb {

struct GammaValue {
  cplx value{0.0, 0.0};
  bool is_pole = false;
};

// Gindikin Gamma of Omega = Herm+(p) x U(q):
//   (2 pi)^{p(p-1)/2} prod_j Gamma(m_j - j + 1) prod_k Gamma(k) / Gamma(m_{p+k} - p + k),
// times the U(1)-selection factor [sum_k m_{p+k} >= 0]. Reciprocal Gamma makes
// denominator poles exact zeros.
GammaValue gamma_omega(const MultiIndex& m, int p, int q);

// The q-factor prod_k Gamma(q-k+1)/Gamma(m_{p+k}+q-k+1) * Gamma(m_{p+k}+k)/Gamma(m_{p+k}-p+k)
// as displayed in the source; agrees with gamma_omega for q <= 1 only.
GammaValue gamma_omega_literal(const MultiIndex& m, int p, int q);

// m_j > j - 1 for j <= p and m_{p+k} > p - k for k <= q.
bool no_pole_region(const MultiIndex& m, int p, int q);

// (n)_m = Gamma_Omega(m + n) / Gamma_Omega(n).
cplx pochhammer(int n, const MultiIndex& m, int p, int q);

// Two readings of the annihilation condition for the K-type m under LT_n.
bool annihilated_if_below_n_minus_p(const MultiIndex& m, int n, int p);
bool annihilated_if_below_p_minus_n(const MultiIndex& m, int n, int p);

MultiIndex shifted(const MultiIndex& m, int n);

// Delta_m at the numeric diagonal point diag(x_1..x_{p+q}).
cplx delta_m_diagonal(const std::vector<cplx>& x, const MultiIndex& m, int p, int q);

struct LaplacePair {
  cplx numeric{0.0, 0.0};
  cplx closed_form{0.0, 0.0};
  IntegrationResult detail;
};

// int_Omega e^{-str(x^-1 y)} Delta_m(y) |Dy| against Gamma_Omega(m) Delta_m(x).
LaplacePair laplace_conical(const MultiIndex& m, const std::vector<double>& x, const OmegaDomain& dom);

enum class Normalization { raw, normalised };

struct RieszSpec {
  int p = 0, q = 0, n = 0;
  Normalization normalization = Normalization::normalised;
};

// T_n f = int_Omega |Dy| Ber(y)^n f(y); R_n = Gamma_Omega(n)^-1 T_n.
IntegrationResult riesz_apply(const RieszSpec& spec, const StructuredFunction& f, const OmegaDomain& dom);

// chi_{2 lambda}(A, D) = Ber(D)^n Ber(A)^-n for numeric even (p|q) matrices.
cplx chi_2lambda(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& d, int p, int q, int n);

// LT_n(f)(x) = Gamma_Omega(n)^-1 int_Omega |Dy| e^{-str(x y)/2} f(y) Ber(y)^n for a
// numeric even point x. `rate` gives the Herm+ decay of the whole integrand.
IntegrationResult weighted_laplace(const Evaluator& f, const Eigen::MatrixXcd& x, int n, const OmegaHints& hints,
                                   const OmegaDomain& dom);

struct SbosOptions {
  double tolerance = 1e-6;
  double mc_tolerance = 1e-3;
};

VerificationReport superbosonise_check(int p, int q, int n, const StructuredFunction& f, const FlatDomain& flat,
                                       const OmegaDomain& omega, const SbosOptions& opt = {});

// Reports "wtlap_pullback" (LT_n at gamma(z) vs (n)_m Delta_{m+n}(1-z)) and
// "wtlap_weighted" (Ber(1-z)^-n LT_n at gamma(z) vs (n)_m Delta_m(1-z)).
std::vector<VerificationReport> weighted_lt_check(int p, int q, int n, const MultiIndex& m, const std::vector<double>& z,
                                                  const OmegaDomain& omega, double tolerance = 1e-6);

}  // namespace sb
