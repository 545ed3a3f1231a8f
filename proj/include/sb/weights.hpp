#pragma once

#include "sb/ring.hpp"
#include "sb/smat.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sb {

// Coefficients over delta_1..delta_{2p}, eps_1..eps_{2q}.
using Weight = std::vector<Rational>;

struct WeightBasis {
  int p = 0, q = 0;
  int size() const { return 2 * p + 2 * q; }
  Weight zero() const { return Weight(size(), Rational(0)); }
  Weight delta(int i) const;  // 1-based
  Weight eps(int j) const;    // 1-based
  std::string name(const Weight& w) const;
};

// (delta_i, delta_j) = delta_ij, (eps_i, eps_j) = -delta_ij, (delta, eps) = 0.
Rational pairing(const Weight& a, const Weight& b, int p);
bool is_odd_root(const Weight& a, int p);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);

struct SimpleSystem {
  int p = 0, q = 0;
  std::vector<Weight> roots;
  bool odd(std::size_t i) const { return is_odd_root(roots[i], p); }
  bool contains(const Weight& a) const;
  std::vector<std::string> names() const;
  friend bool operator==(const SimpleSystem& a, const SimpleSystem& b) { return a.roots == b.roots; }
};

SimpleSystem standard_simple_system(int p, int q);

// alpha -> -alpha, beta -> beta + alpha when (beta, alpha) != 0.
SimpleSystem odd_reflection(const SimpleSystem& sys, const Weight& alpha);

// lambda - alpha if (lambda, alpha) != 0, else lambda.
Weight reflect_weight(const Weight& lambda, const Weight& alpha, int p);

struct DynkinDiagram {
  struct Edge {
    int from = 0, to = 0;
    Rational pairing{0};
  };
  std::vector<std::string> labels;
  std::vector<bool> odd;
  std::vector<Edge> edges;

  std::string ascii() const;
  nlohmann::json to_json() const;
};

DynkinDiagram dynkin_diagram(const SimpleSystem& sys);

// delta_1..delta_p, eps_1..eps_q, delta_{p+1}..delta_{2p}, eps_{q+1}..eps_{2q} chained.
SimpleSystem target_simple_system(int p, int q);

struct ChainStep {
  Weight root;
  bool applied = false;
  std::string label;
};

struct BorelChain {
  SimpleSystem system;
  DynkinDiagram diagram;
  std::vector<ChainStep> log;
  bool matches_target = false;
};

// Reflections of R_max(p,q) ... R_1 in application order.
std::vector<Weight> chain_roots(int p, int q);
BorelChain borel_chain(int p, int q);

// The lambda of the oscillator module: (-n/2, +n/2 per delta half | +n/2, -n/2 per eps half).
Weight oscillator_lambda(int p, int q, int n);
Weight reflect_along(const Weight& lambda, const BorelChain& chain);

struct FiniteDimWitness {
  Weight root;
  Rational value{0};
  std::string description;
};

struct FiniteDimResult {
  bool finite = true;
  std::optional<FiniteDimWitness> witness;
};

// Dominance-integrality of the even part: coordinate differences along delta_i - delta_{i+1}
// and eps_j - eps_{j+1} must be nonnegative integers. The first violation is the witness.
FiniteDimResult finite_dim_check(const Weight& lambda, int p, int q);

struct KType {
  MultiIndex m;
  Weight mu;  // over delta_1..delta_p, eps_1..eps_q
};

// m_1 >= ... >= m_p >= 0, m_{p+1} <= ... <= m_{p+q} <= 0, sum |m_j| <= cap.
std::vector<KType> k_types(int p, int q, int degree_cap);

}  // namespace sb
