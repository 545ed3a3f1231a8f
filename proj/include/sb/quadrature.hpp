#pragma once

#include "sb/ring.hpp"

#include <vector>

namespace sb {

// Nodes x and weights w for a plain integral: int g ~= sum_i w_i g(x_i).
struct Rule {
  std::vector<double> x, w;
  std::size_t size() const { return x.size(); }
};

// Gauss-Legendre on [0, 1]; weights sum to 1.
Rule gauss_legendre(int k);

// Generalized Gauss-Laguerre for int_0^inf g(t) dt, exact when
// g(t) = t^beta e^(-rate t) poly(t) with deg poly <= 2k-1.
Rule gauss_laguerre(int k, double beta, double rate);

// Gauss-Hermite for int_R g(x) dx, exact when g = e^(-alpha x^2) poly(x).
Rule gauss_hermite(int k, double alpha);

// Equispaced angles 2 pi j / k on the circle with weights 1/k (mean value).
Rule circle_trapezoid(int k);

// Fixed-shape pairwise reduction; the result depends only on the input order.
cplx pairwise_sum(const std::vector<cplx>& v);
double pairwise_sum(const std::vector<double>& v);

}  // namespace sb
