#include "sb/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sb {

namespace {

void check_size(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight: size mismatch");
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

// Chain of consecutive differences along an ordering of the basis.
SimpleSystem chain_system(const WeightBasis& wb, const std::vector<Weight>& order) {
  SimpleSystem s{wb.p, wb.q, {}};
  for (std::size_t i = 0; i + 1 < order.size(); ++i) s.roots.push_back(order[i] - order[i + 1]);
  return s;
}

void enumerate_chain(int len, int cap, int max_entry, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= std::min(cap, max_entry); ++v) {
    cur.push_back(v);
    enumerate_chain(len, cap - v, v, cur, out);
    cur.pop_back();
  }
}

// Non-increasing tuples of nonnegative integers with sum <= cap, ordered by sum then descending lex.
std::vector<MultiIndex> partitions(int len, int cap) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  enumerate_chain(len, cap, cap, cur, out);
  auto sum = [](const MultiIndex& m) {
    int s = 0;
    for (int x : m) s += x;
    return s;
  };
  std::stable_sort(out.begin(), out.end(), [&](const MultiIndex& a, const MultiIndex& b) {
    if (sum(a) != sum(b)) return sum(a) < sum(b);
    return a > b;
  });
  return out;
}

}  // namespace

Weight WeightBasis::delta(int i) const {
  if (i < 1 || i > 2 * p) throw std::out_of_range("WeightBasis::delta: index out of range");
  Weight w = zero();
  w[i - 1] = 1;
  return w;
}

Weight WeightBasis::eps(int j) const {
  if (j < 1 || j > 2 * q) throw std::out_of_range("WeightBasis::eps: index out of range");
  Weight w = zero();
  w[2 * p + j - 1] = 1;
  return w;
}

std::string WeightBasis::name(const Weight& w) const {
  std::ostringstream os;
  bool first = true;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < size(); ++i) {
      const Rational c = w[i];
      if (c.numerator() == 0 || (c < Rational(0)) != (pass == 1)) continue;
      if (pass == 1) os << "-";
      else if (!first) os << "+";
      const Rational a = pass == 1 ? Rational(-c) : c;
      if (a != Rational(1)) os << rational_string(a) << "*";
      if (i < 2 * p) os << "d" << i + 1;
      else os << "e" << i - 2 * p + 1;
      first = false;
    }
  return first ? std::string("0") : os.str();
}

Rational pairing(const Weight& a, const Weight& b, int p) {
  check_size(a, b);
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(i) < 2 * p) s += a[i] * b[i];
    else s -= a[i] * b[i];
  }
  return s;
}

bool is_odd_root(const Weight& a, int p) {
  bool has_delta = false, has_eps = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].numerator() == 0) continue;
    if (static_cast<int>(i) < 2 * p) has_delta = true;
    else has_eps = true;
  }
  return has_delta && has_eps;
}

Weight operator+(const Weight& a, const Weight& b) {
  check_size(a, b);
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  check_size(a, b);
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool SimpleSystem::contains(const Weight& a) const { return std::find(roots.begin(), roots.end(), a) != roots.end(); }

std::vector<std::string> SimpleSystem::names() const {
  const WeightBasis wb{p, q};
  std::vector<std::string> out;
  for (const auto& r : roots) out.push_back(wb.name(r));
  return out;
}

SimpleSystem standard_simple_system(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("standard_simple_system: negative rank");
  const WeightBasis wb{p, q};
  std::vector<Weight> order;
  for (int i = 1; i <= 2 * p; ++i) order.push_back(wb.delta(i));
  for (int j = 1; j <= 2 * q; ++j) order.push_back(wb.eps(j));
  return chain_system(wb, order);
}

SimpleSystem target_simple_system(int p, int q) {
  const WeightBasis wb{p, q};
  std::vector<Weight> order;
  for (int i = 1; i <= p; ++i) order.push_back(wb.delta(i));
  for (int j = 1; j <= q; ++j) order.push_back(wb.eps(j));
  for (int i = p + 1; i <= 2 * p; ++i) order.push_back(wb.delta(i));
  for (int j = q + 1; j <= 2 * q; ++j) order.push_back(wb.eps(j));
  return chain_system(wb, order);
}

SimpleSystem odd_reflection(const SimpleSystem& sys, const Weight& alpha) {
  if (!sys.contains(alpha)) throw std::invalid_argument("odd_reflection: root is not simple in the system");
  if (!is_odd_root(alpha, sys.p) || pairing(alpha, alpha, sys.p) != Rational(0))
    throw std::invalid_argument("odd_reflection: root is not odd isotropic");
  SimpleSystem out{sys.p, sys.q, {}};
  for (const auto& b : sys.roots) {
    if (b == alpha) out.roots.push_back(-alpha);
    else if (pairing(b, alpha, sys.p) != Rational(0)) out.roots.push_back(b + alpha);
    else out.roots.push_back(b);
  }
  return out;
}

Weight reflect_weight(const Weight& lambda, const Weight& alpha, int p) {
  if (pairing(alpha, alpha, p) != Rational(0)) throw std::invalid_argument("reflect_weight: root is not isotropic");
  return pairing(lambda, alpha, p) != Rational(0) ? lambda - alpha : lambda;
}

DynkinDiagram dynkin_diagram(const SimpleSystem& sys) {
  DynkinDiagram d;
  d.labels = sys.names();
  for (std::size_t i = 0; i < sys.roots.size(); ++i) d.odd.push_back(sys.odd(i));
  for (std::size_t i = 0; i < sys.roots.size(); ++i)
    for (std::size_t j = i + 1; j < sys.roots.size(); ++j) {
      const Rational c = pairing(sys.roots[i], sys.roots[j], sys.p);
      if (c != Rational(0)) d.edges.push_back({static_cast<int>(i), static_cast<int>(j), c});
    }
  return d;
}

std::string DynkinDiagram::ascii() const {
  auto linked = [&](int a, int b) {
    return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.from == a && e.to == b; });
  };
  std::string top, bottom;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string node = odd[i] ? "(x)" : "( )";
    const std::size_t width = std::max(node.size(), labels[i].size());
    top += node;
    bottom += labels[i] + std::string(width - labels[i].size(), ' ');
    if (i + 1 < labels.size()) {
      const int ii = static_cast<int>(i);
      top += std::string(width - node.size() + 3, linked(ii, ii + 1) ? '-' : ' ');
      bottom += "   ";
    }
  }
  return top + "\n" + bottom + "\n";
}

nlohmann::json DynkinDiagram::to_json() const {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < labels.size(); ++i)
    nodes.push_back({{"id", i}, {"root", labels[i]}, {"parity", odd[i] ? "odd" : "even"}});
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : edges) es.push_back({{"from", e.from}, {"to", e.to}, {"pairing", rational_string(e.pairing)}});
  return {{"nodes", nodes}, {"edges", es}};
}

std::vector<Weight> chain_roots(int p, int q) {
  std::vector<Weight> seq;
  if (p == 0 || q == 0) return seq;
  const WeightBasis wb{p, q};
  auto r = [&](int i, int j) { return wb.delta(i) - wb.eps(j); };
  for (int i = 1; i <= std::max(p, q); ++i) {
    const bool rd = i <= p;
    const bool re = i <= q;
    std::vector<Weight> factors;  // left to right
    factors.push_back(r(std::max(p + 1, 2 * p - i + 1), std::min(i, q)));
    if (rd)
      for (int k = i; k >= 1; --k) factors.push_back(r(2 * p - i + 1, std::min(k, q)));
    if (re)
      for (int k = i; k >= 1; --k) factors.push_back(r(std::max(p + 1, 2 * p - k + 1), i));
    seq.insert(seq.end(), factors.rbegin(), factors.rend());
  }
  return seq;
}

BorelChain borel_chain(int p, int q) {
  const WeightBasis wb{p, q};
  BorelChain out;
  out.system = standard_simple_system(p, q);
  for (const auto& a : chain_roots(p, q)) {
    ChainStep step{a, false, "r_{" + wb.name(a) + "}"};
    if (out.system.contains(a)) {
      out.system = odd_reflection(out.system, a);
      step.applied = true;
    } else {
      step.label += " skipped: not simple";
    }
    out.log.push_back(std::move(step));
  }
  out.diagram = dynkin_diagram(out.system);
  out.matches_target = out.system == target_simple_system(p, q);
  return out;
}

Weight oscillator_lambda(int p, int q, int n) {
  Weight w;
  const Rational h(n, 2);
  for (int i = 0; i < p; ++i) w.push_back(-h);
  for (int i = 0; i < p; ++i) w.push_back(h);
  for (int j = 0; j < q; ++j) w.push_back(h);
  for (int j = 0; j < q; ++j) w.push_back(-h);
  return w;
}

Weight reflect_along(const Weight& lambda, const BorelChain& chain) {
  Weight w = lambda;
  for (const auto& s : chain.log)
    if (s.applied) w = reflect_weight(w, s.root, chain.system.p);
  return w;
}

FiniteDimResult finite_dim_check(const Weight& lambda, int p, int q) {
  const WeightBasis wb{p, q};
  if (static_cast<int>(lambda.size()) != wb.size()) throw std::invalid_argument("finite_dim_check: weight size mismatch");
  FiniteDimResult res;
  auto test = [&](int a, int b, const Weight& root) {
    if (!res.finite) return;
    const Rational diff = lambda[a] - lambda[b];
    if (diff.denominator() == 1 && diff >= Rational(0)) return;
    res.finite = false;
    res.witness = FiniteDimWitness{root, diff, "<lambda, " + wb.name(root) + "> = " + rational_string(diff)};
  };
  for (int i = 1; i < 2 * p; ++i) test(i - 1, i, wb.delta(i) - wb.delta(i + 1));
  for (int j = 1; j < 2 * q; ++j) test(2 * p + j - 1, 2 * p + j, wb.eps(j) - wb.eps(j + 1));
  return res;
}

std::vector<KType> k_types(int p, int q, int degree_cap) {
  if (p < 0 || q < 0 || degree_cap < 0) throw std::invalid_argument("k_types: negative argument");
  std::vector<KType> out;
  for (int odd_cap = 0; odd_cap <= degree_cap; ++odd_cap) {
    for (const auto& o : partitions(q, odd_cap)) {
      int os = 0;
      for (int x : o) os += x;
      if (os != odd_cap) continue;
      for (const auto& e : partitions(p, degree_cap - odd_cap)) {
        KType k;
        k.m = e;
        for (int x : o) k.m.push_back(-x);
        for (int j = 0; j < p; ++j) k.mu.push_back(Rational(-e[j]));
        for (int j = 0; j < q; ++j) k.mu.push_back(Rational(k.m[p + j]));
        out.push_back(std::move(k));
      }
    }
  }
  return out;
}

}  // namespace sb
