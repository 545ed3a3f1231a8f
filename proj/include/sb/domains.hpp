#pragma once

#include "sb/sfunc.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sb {

enum class Method { quad, mc };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct divergence_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Flat cycle V_R with even part {(L0, L0^*)}: per complex entry the even
// measure is dx dy / sqrt(pi), odd generators integrate to 1 per adjacent pair.
struct FlatDomain {
  int p = 0, q = 0, n = 1;
  Method method = Method::quad;
  int radial_nodes = 12;   // p = 1: Laguerre nodes in t = |L0|^2
  int sphere_nodes = 4;    // p = 1: phase and simplex nodes on S^{2n-1}
  int hermite_nodes = 6;   // Gauss-Hermite nodes per real dimension
  bool hermite = false;    // force the Gauss-Hermite product rule for p = 1
  long samples = 200000;
  std::uint64_t seed = 1;
};

// Omega_0 = Herm+(p) x U(q) with Lebesgue measure from the trace form on
// Herm(p) and normalised Haar measure on U(q).
struct OmegaDomain {
  int p = 0, q = 0;
  Method method = Method::quad;
  int herm_nodes = 8;     // Laguerre nodes per Herm+ diagonal coordinate
  int cross_nodes = 8;    // p = 2: Hermite nodes per real part of the off-diagonal entry
  int phase_nodes = 16;   // trapezoid nodes for the phases of U(q)
  int euler_nodes = 8;    // q = 2: nodes for the off-diagonal phase
  int s_nodes = 12;       // q = 2: Gauss-Legendre nodes for |w_11|^2
  long samples = 200000;
  std::uint64_t seed = 1;
};

struct IntegrationResult {
  cplx value{0.0, 0.0};
  double std_error = 0.0;  // Monte Carlo only
  long evaluations = 0;
};

// Quadrature hints for the Herm+ directions: integrand ~ det-powers times
// exp(-tr(diag(rate) z)). beta is the Laguerre exponent per Cholesky coordinate.
struct OmegaHints {
  std::vector<double> rate;
  std::vector<double> beta;
  static OmegaHints for_exponent(const MultiIndex& total, int p, std::vector<double> rate);
};

// Odd generator layout on Omega: omega_{kj} (q x p) and zeta_{jk} (p x q) adjacent.
struct OmegaLayout {
  static int omega(int k, int j, int p) { return 2 * (k * p + j); }
  static int zeta(int j, int k, int p) { return 2 * (k * p + j) + 1; }
  static int generators(int p, int q) { return 2 * p * q; }
};

// Absolute convergence of int_Omega e^{-str y} Delta_m(y) |Dy|: m_j > j - 1 on
// the Herm+ side; for q = 2 additionally m_{p+1} - m_{p+2} <= 1 on U(2).
bool convergent(const MultiIndex& m, int p, int q);

// Top odd coefficient of an integrand declared over `generators` odd generators.
cplx berezin_fiber(const SElement<cplx>& integrand, int generators);

// The point y = [[z, zeta], [omega, w]] with the Omega odd generators.
SuperPoint omega_point(const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w);

// det(z)^-p det(z - zeta w^-1 omega)^q det(w - omega z^-1 zeta)^p.
SElement<cplx> omega_density(const SuperPoint& y);

IntegrationResult integrate_flat(const StructuredFunction& f, const FlatDomain& dom);
IntegrationResult integrate_flat(const Evaluator& f, const FlatDomain& dom, double alpha, int radial_power);

IntegrationResult integrate_omega(const Evaluator& g, const OmegaHints& hints, const OmegaDomain& dom);
// int_Omega |Dy| Ber(y)^n f(y).
IntegrationResult integrate_omega(const StructuredFunction& f, int weight_n, const OmegaDomain& dom);

}  // namespace sb
