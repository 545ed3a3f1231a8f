#pragma once

#include "sb/ring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace sb {

// Element of the Grassmann algebra on N odd generators xi_0..xi_{N-1} with
// coefficients in S. Terms are kept sorted by generator mask, zeros dropped.
// An element with N = 0 is a pure constant and combines with any universe.
template <class S>
class SElement {
 public:
  using Mask = std::uint32_t;
  using Term = std::pair<Mask, S>;
  static constexpr int max_generators = 24;

  SElement() = default;
  explicit SElement(S c, int n = 0) : n_(check_n(n)) {
    if (!Ring<S>::is_zero(c)) terms_.emplace_back(Mask{0}, std::move(c));
  }

  static SElement generator(int i, int n) {
    if (i < 0 || i >= n) throw std::out_of_range("SElement: generator index out of range");
    return monomial(Mask{1} << i, Ring<S>::one(), n);
  }

  static SElement monomial(Mask mask, S c, int n) {
    SElement r;
    r.n_ = check_n(n);
    if ((mask >> n) != 0) throw std::out_of_range("SElement: monomial outside generator universe");
    if (!Ring<S>::is_zero(c)) r.terms_.emplace_back(mask, std::move(c));
    return r;
  }

  // Sum of arbitrary (mask, coeff) terms; repeated masks are combined.
  static SElement from_terms(std::vector<Term> raw, int n) {
    SElement r;
    r.n_ = check_n(n);
    std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    for (auto& t : raw) {
      if ((t.first >> n) != 0) throw std::out_of_range("SElement: term outside generator universe");
      if (!r.terms_.empty() && r.terms_.back().first == t.first) r.terms_.back().second += t.second;
      else {
        if (!r.terms_.empty() && Ring<S>::is_zero(r.terms_.back().second)) r.terms_.pop_back();
        r.terms_.push_back(std::move(t));
      }
    }
    if (!r.terms_.empty() && Ring<S>::is_zero(r.terms_.back().second)) r.terms_.pop_back();
    return r;
  }

  int generators() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coeff(Mask mask) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, Mask m) { return t.first < m; });
    return (it != terms_.end() && it->first == mask) ? it->second : Ring<S>::zero();
  }

  S body() const { return coeff(0); }

  SElement soul() const {
    SElement r = *this;
    if (!r.terms_.empty() && r.terms_.front().first == 0) r.terms_.erase(r.terms_.begin());
    return r;
  }

  // 0 for even, 1 for odd, -1 for inhomogeneous. Zero counts as even.
  int parity() const {
    int par = -2;
    for (const auto& t : terms_) {
      int tp = std::popcount(t.first) & 1;
      if (par == -2) par = tp;
      else if (par != tp) return -1;
    }
    return par == -2 ? 0 : par;
  }
  bool is_even() const { return parity() == 0; }
  bool is_odd() const { return parity() == 1 || is_zero(); }

  // Same element viewed in a universe of n >= generators() generators.
  SElement widened(int n) const {
    if (n < n_) throw std::invalid_argument("SElement: cannot shrink generator universe");
    SElement r = *this;
    r.n_ = check_n(n);
    return r;
  }

  SElement operator-() const {
    SElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend SElement operator+(const SElement& a, const SElement& b) { return merge(a, b, false); }
  friend SElement operator-(const SElement& a, const SElement& b) { return merge(a, b, true); }

  friend SElement operator*(const SElement& a, const SElement& b) {
    SElement r;
    r.n_ = joint_universe(a, b);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if constexpr (std::is_same_v<S, cplx> || std::is_same_v<S, double>) {
      if (r.n_ <= 16) {
        dense_product(a, b, r);
        return r;
      }
    }
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma & mb) continue;
        S c = ca * cb;
        raw.emplace_back(ma | mb, product_sign(ma, mb) ? S(-c) : c);
      }
    }
    r = from_terms(std::move(raw), r.n_);
    return r;
  }

  friend SElement operator*(const S& c, const SElement& a) {
    SElement r;
    r.n_ = a.n_;
    if (Ring<S>::is_zero(c)) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [m, x] : a.terms_) {
      S v = c * x;
      if (!Ring<S>::is_zero(v)) r.terms_.emplace_back(m, std::move(v));
    }
    return r;
  }
  friend SElement operator*(const SElement& a, const S& c) { return c * a; }

  SElement& operator+=(const SElement& b) { return *this = *this + b; }
  SElement& operator-=(const SElement& b) { return *this = *this - b; }
  SElement& operator*=(const SElement& b) { return *this = *this * b; }

  friend bool operator==(const SElement& a, const SElement& b) { return a.terms_ == b.terms_; }

  // Sign (true = negative) of reordering xi_a xi_b into canonical order.
  static bool product_sign(Mask a, Mask b) {
    int s = 0;
    while (b) {
      int j = std::countr_zero(b);
      b &= b - 1;
      s += std::popcount(a >> (j + 1));
    }
    return s & 1;
  }

  friend std::ostream& operator<<(std::ostream& os, const SElement& a) {
    if (a.terms_.empty()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : a.terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      for (Mask x = m; x; x &= x - 1) os << "*xi" << std::countr_zero(x);
    }
    return os;
  }

 private:
  static int check_n(int n) {
    if (n < 0 || n > max_generators) throw std::out_of_range("SElement: unsupported generator count");
    return n;
  }

  static int joint_universe(const SElement& a, const SElement& b) {
    if (a.n_ == b.n_ || b.n_ == 0) return a.n_;
    if (a.n_ == 0) return b.n_;
    throw std::invalid_argument("SElement: mismatched generator universes");
  }

  static SElement merge(const SElement& a, const SElement& b, bool subtract) {
    SElement r;
    r.n_ = joint_universe(a, b);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.emplace_back(ib->first, subtract ? S(-ib->second) : ib->second);
        ++ib;
      } else {
        S c = subtract ? S(ia->second - ib->second) : S(ia->second + ib->second);
        if (!Ring<S>::is_zero(c)) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  static void dense_product(const SElement& a, const SElement& b, SElement& r) {
    thread_local std::vector<S> acc;
    thread_local std::vector<char> used;
    thread_local std::vector<Mask> touched;
    const std::size_t size = std::size_t{1} << r.n_;
    if (acc.size() < size) {
      acc.assign(size, S{});
      used.assign(size, 0);
    }
    touched.clear();
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma & mb) continue;
        const Mask m = ma | mb;
        const S c = ca * cb;
        if (!used[m]) {
          used[m] = 1;
          acc[m] = S{};
          touched.push_back(m);
        }
        if (product_sign(ma, mb)) acc[m] -= c;
        else acc[m] += c;
      }
    }
    std::sort(touched.begin(), touched.end());
    r.terms_.reserve(touched.size());
    for (Mask m : touched) {
      used[m] = 0;
      if (!Ring<S>::is_zero(acc[m])) r.terms_.emplace_back(m, acc[m]);
    }
  }

  int n_ = 0;
  std::vector<Term> terms_;
};

template <class S>
struct BodySoul {
  S body;
  SElement<S> soul;
};

template <class S>
BodySoul<S> body_soul(const SElement<S>& a) {
  return {a.body(), a.soul()};
}

// Left derivative with respect to xi_i: removes xi_i after commuting it to the front.
template <class S>
SElement<S> odd_derivative(int i, const SElement<S>& a) {
  if (i < 0 || i >= a.generators()) throw std::out_of_range("odd_derivative: generator index out of range");
  using Mask = typename SElement<S>::Mask;
  const Mask bit = Mask{1} << i;
  std::vector<typename SElement<S>::Term> raw;
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    const bool neg = std::popcount(m & (bit - 1)) & 1;
    raw.emplace_back(m ^ bit, neg ? S(-c) : c);
  }
  return SElement<S>::from_terms(std::move(raw), a.generators());
}

// Coefficient of xi_0 xi_1 ... xi_{N-1}; the Berezin integral with int xi_0...xi_{N-1} = 1.
template <class S>
S berezin_top(const SElement<S>& a) {
  const int n = a.generators();
  const auto full = static_cast<typename SElement<S>::Mask>((std::uint64_t{1} << n) - 1);
  return a.coeff(full);
}

template <class S>
SElement<S> exp_nilpotent(const SElement<S>& a) {
  if (!Ring<S>::is_zero(a.body())) throw std::invalid_argument("exp_nilpotent: nonzero body");
  if (!a.is_even()) throw std::invalid_argument("exp_nilpotent: argument is not even");
  SElement<S> result(Ring<S>::one(), a.generators());
  SElement<S> power = result;
  for (long long k = 1; k <= a.generators() + 1; ++k) {
    power = (power * a) * Ring<S>::ratio(1, k);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

// Inverse via body inverse and the terminating Neumann series in the soul.
template <class S>
SElement<S> inverse(const SElement<S>& a) {
  const S b = a.body();
  if (Ring<S>::is_zero(b)) throw std::domain_error("SElement inverse: zero body");
  const S binv = Ring<S>::divide(Ring<S>::one(), b);
  const SElement<S> x = -(a.soul() * binv);
  SElement<S> result(Ring<S>::one(), a.generators());
  SElement<S> power = result;
  for (int k = 1; k <= a.generators() + 1; ++k) {
    power = power * x;
    if (power.is_zero()) break;
    result += power;
  }
  return result * binv;
}

template <class S>
SElement<S> pow(const SElement<S>& a, int e) {
  if (e < 0) return pow(inverse(a), -e);
  SElement<S> result(Ring<S>::one(), a.generators());
  SElement<S> base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

inline double max_abs(const SElement<cplx>& a) {
  double d = 0.0;
  for (const auto& [m, c] : a.terms()) d = std::max(d, std::abs(c));
  return d;
}

inline double max_abs_diff(const SElement<cplx>& a, const SElement<cplx>& b) {
  return max_abs(a - b);
}

}  // namespace sb
