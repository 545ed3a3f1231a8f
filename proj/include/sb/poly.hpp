#pragma once

#include "sb/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sb {

// Sparse polynomial in up to 8 commuting variables. A monomial is a packed
// exponent key: byte i holds the exponent of variable i (at most 255).
template <class R>
class Poly {
 public:
  using Key = std::uint64_t;
  static constexpr int max_vars = 8;

  Poly() = default;
  Poly(R c) {  // NOLINT(google-explicit-constructor)
    if (!Ring<R>::is_zero(c)) terms_.emplace_back(Key{0}, std::move(c));
  }
  Poly(long long c) : Poly(R(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(int i) {
    check_var(i);
    Poly p;
    p.terms_.emplace_back(Key{1} << (8 * i), Ring<R>::one());
    return p;
  }

  static Poly monomial(Key k, R c) {
    Poly p;
    if (!Ring<R>::is_zero(c)) p.terms_.emplace_back(k, std::move(c));
    return p;
  }

  static int exponent(Key k, int i) { return static_cast<int>((k >> (8 * i)) & 0xffu); }
  static int degree(Key k) {
    int d = 0;
    for (int i = 0; i < max_vars; ++i) d += exponent(k, i);
    return d;
  }

  const std::vector<std::pair<Key, R>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  R coeff(Key k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const auto& t, Key x) { return t.first < x; });
    return (it != terms_.end() && it->first == k) ? it->second : Ring<R>::zero();
  }

  // Highest total degree among the monomials (-1 for the zero polynomial).
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, degree(t.first));
    return d;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    std::map<Key, R> acc;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        auto [it, fresh] = acc.try_emplace(ka + kb, ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    }
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (!Ring<R>::is_zero(c)) r.terms_.emplace_back(k, std::move(c));
    return r;
  }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly derivative(int i) const {
    check_var(i);
    Poly r;
    for (const auto& [k, c] : terms_) {
      int e = exponent(k, i);
      if (e == 0) continue;
      r.terms_.emplace_back(k - (Key{1} << (8 * i)), c * R(e));
    }
    return r;  // key order is preserved by the shift
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [k, c] : p.terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      for (int i = 0; i < max_vars; ++i) {
        int e = exponent(k, i);
        if (e == 1) os << "*x" << i;
        if (e > 1) os << "*x" << i << "^" << e;
      }
    }
    return os;
  }

 private:
  static void check_var(int i) {
    if (i < 0 || i >= max_vars) throw std::out_of_range("Poly: variable index out of range");
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.emplace_back(ib->first, subtract ? R(-ib->second) : ib->second);
        ++ib;
      } else {
        R c = subtract ? R(ia->second - ib->second) : R(ia->second + ib->second);
        if (!Ring<R>::is_zero(c)) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::vector<std::pair<Key, R>> terms_;
};

template <class R>
struct Ring<Poly<R>> {
  static Poly<R> zero() { return {}; }
  static Poly<R> one() { return Poly<R>(Ring<R>::one()); }
  static bool is_zero(const Poly<R>& a) { return a.is_zero(); }
  static Poly<R> ratio(long long num, long long den) { return Poly<R>(Ring<R>::ratio(num, den)); }
};

}  // namespace sb
