#pragma once

#include "sb/smat.hpp"

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace sb {

using SuperPoint = SuperMatrix<cplx>;
using Evaluator = std::function<SElement<cplx>(const SuperPoint&)>;

// coeff * y(i0,j0) * y(i1,j1) * ..., multiplied in the listed order.
struct EntryMonomial {
  cplx coeff{1.0, 0.0};
  std::vector<std::pair<int, int>> entries;
};

// exp(-alpha str y) * Delta_m(y) * poly(y). An empty poly means the constant 1.
struct StructuredFunction {
  double alpha = 1.0;
  std::optional<MultiIndex> m;
  std::vector<EntryMonomial> poly;

  static StructuredFunction gaussian(double alpha = 1.0) { return {alpha, std::nullopt, {}}; }
  static StructuredFunction conical(MultiIndex m, double alpha = 1.0) { return {alpha, std::move(m), {}}; }

  // Exponent of the conical factor, zero-padded to length p + q.
  MultiIndex exponent(int p, int q) const;

  friend StructuredFunction operator*(const StructuredFunction& f, const StructuredFunction& g);
};

SElement<cplx> exp_neg_str(const SuperPoint& y, double alpha);
SElement<cplx> evaluate(const StructuredFunction& f, const SuperPoint& y);
Evaluator evaluator(const StructuredFunction& f);

// Odd generator layout of the flat superspace: lambda_{k a} (q x n block of L)
// and lambda'_{a k} (n x q block of L') sit in adjacent slots.
struct FlatLayout {
  static int lambda(int k, int a, int n) { return 2 * (k * n + a); }
  static int lambda_prime(int a, int k, int n) { return 2 * (k * n + a) + 1; }
  static int generators(int q, int n) { return 2 * q * n; }
};

// Q(L, L') = L L' with L = [L0; lambda], L' = [L0^*, lambda'] on the real cycle.
SuperPoint q_map(const Eigen::MatrixXcd& l0, int q);

// Even element h = (A, D) of GL(p|q) x GL(p|q), both numeric block diagonal.
struct EvenGroupElement {
  Eigen::MatrixXcd A, D;
  int p = 0, q = 0;

  static EvenGroupElement identity(int p, int q);
  friend EvenGroupElement operator*(const EvenGroupElement& x, const EvenGroupElement& y);
};

cplx numeric_berezinian(const Eigen::MatrixXcd& m, int p, int q);

// y -> f(D^-1 y A), times sqrt(Ber A)^n / sqrt(Ber D)^n when twisted (principal roots).
Evaluator group_action(const EvenGroupElement& h, Evaluator f, int n, bool twisted);

}  // namespace sb
