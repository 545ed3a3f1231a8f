#include "sb/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sb {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights mu0 * v0^2.
Rule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double log_mu0, bool log_weights) {
  const int k = static_cast<int>(diag.size());
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(k, k);
  j.diagonal() = diag;
  for (int i = 0; i + 1 < k; ++i) j(i, i + 1) = j(i + 1, i) = off(i);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  if (es.info() != Eigen::Success) throw std::runtime_error("golub_welsch: eigensolver failed");
  Rule r;
  r.x.resize(k);
  r.w.resize(k);
  for (int i = 0; i < k; ++i) {
    r.x[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    r.w[i] = log_weights ? log_mu0 + 2.0 * std::log(std::abs(v0)) : std::exp(log_mu0) * v0 * v0;
  }
  return r;
}

void check_nodes(int k) {
  if (k < 1 || k > 200) throw std::invalid_argument("quadrature: node count must be in [1, 200]");
}

}  // namespace

Rule gauss_legendre(int k) {
  check_nodes(k);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(k), off(std::max(k - 1, 0));
  for (int i = 1; i < k; ++i) off(i - 1) = i / std::sqrt(4.0 * i * i - 1.0);
  Rule r = golub_welsch(diag, off, std::log(2.0), false);
  for (int i = 0; i < k; ++i) {
    r.x[i] = 0.5 * (r.x[i] + 1.0);
    r.w[i] *= 0.5;
  }
  return r;
}

Rule gauss_laguerre(int k, double beta, double rate) {
  check_nodes(k);
  if (beta <= -1.0) throw std::invalid_argument("gauss_laguerre: beta must exceed -1");
  if (rate <= 0.0) throw std::invalid_argument("gauss_laguerre: rate must be positive");
  Eigen::VectorXd diag(k), off(std::max(k - 1, 0));
  for (int i = 0; i < k; ++i) diag(i) = 2.0 * i + beta + 1.0;
  for (int i = 1; i < k; ++i) off(i - 1) = std::sqrt(i * (i + beta));
  Rule r = golub_welsch(diag, off, std::lgamma(beta + 1.0), true);
  // int g dt = (1/rate) int g(t/rate) dt, and the weight t^beta e^-t is divided out.
  for (int i = 0; i < k; ++i) {
    const double t = r.x[i];
    r.w[i] = std::exp(r.w[i] - beta * std::log(t) + t) / rate;
    r.x[i] = t / rate;
  }
  return r;
}

Rule gauss_hermite(int k, double alpha) {
  check_nodes(k);
  if (alpha <= 0.0) throw std::invalid_argument("gauss_hermite: alpha must be positive");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(k), off(std::max(k - 1, 0));
  for (int i = 1; i < k; ++i) off(i - 1) = std::sqrt(i / 2.0);
  Rule r = golub_welsch(diag, off, 0.5 * std::log(std::numbers::pi), true);
  const double s = 1.0 / std::sqrt(alpha);
  for (int i = 0; i < k; ++i) {
    const double x = r.x[i];
    r.w[i] = std::exp(r.w[i] + x * x) * s;
    r.x[i] = x * s;
  }
  return r;
}

Rule circle_trapezoid(int k) {
  check_nodes(k);
  Rule r;
  for (int i = 0; i < k; ++i) {
    r.x.push_back(2.0 * std::numbers::pi * i / k);
    r.w.push_back(1.0 / k);
  }
  return r;
}

namespace {
template <class T>
T pairwise(const T* v, std::size_t n) {
  if (n == 0) return T{};
  if (n <= 8) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise(v, h) + pairwise(v + h, n - h);
}
}  // namespace

cplx pairwise_sum(const std::vector<cplx>& v) { return pairwise(v.data(), v.size()); }
double pairwise_sum(const std::vector<double>& v) { return pairwise(v.data(), v.size()); }

}  // namespace sb
