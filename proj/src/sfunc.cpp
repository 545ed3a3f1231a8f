#include "sb/sfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace sb {

MultiIndex StructuredFunction::exponent(int p, int q) const {
  MultiIndex r(p + q, 0);
  if (m) {
    if (static_cast<int>(m->size()) != p + q) throw std::invalid_argument("StructuredFunction: multi-index length mismatch");
    r = *m;
  }
  return r;
}

StructuredFunction operator*(const StructuredFunction& f, const StructuredFunction& g) {
  StructuredFunction r;
  r.alpha = f.alpha + g.alpha;
  if (f.m && g.m) {
    if (f.m->size() != g.m->size()) throw std::invalid_argument("StructuredFunction: multi-index length mismatch");
    MultiIndex s(f.m->size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = (*f.m)[i] + (*g.m)[i];
    r.m = s;
  } else {
    r.m = f.m ? f.m : g.m;
  }
  if (f.poly.empty()) r.poly = g.poly;
  else if (g.poly.empty()) r.poly = f.poly;
  else
    for (const auto& a : f.poly)
      for (const auto& b : g.poly) {
        EntryMonomial t{a.coeff * b.coeff, a.entries};
        t.entries.insert(t.entries.end(), b.entries.begin(), b.entries.end());
        r.poly.push_back(std::move(t));
      }
  return r;
}

SElement<cplx> exp_neg_str(const SuperPoint& y, double alpha) {
  const SElement<cplx> s = supertrace(y) * cplx(-alpha, 0.0);
  const cplx b = s.body();
  return exp_nilpotent(s.soul()) * std::exp(b);
}

SElement<cplx> evaluate(const StructuredFunction& f, const SuperPoint& y) {
  SElement<cplx> r = exp_neg_str(y, f.alpha);
  if (f.m) r = r * delta_m(y, *f.m);
  if (!f.poly.empty()) {
    SElement<cplx> poly;
    for (const auto& mono : f.poly) {
      SElement<cplx> t(mono.coeff);
      for (const auto& [i, j] : mono.entries) {
        if (i < 0 || j < 0 || i >= y.rows() || j >= y.cols()) throw std::out_of_range("evaluate: entry index out of range");
        t = t * y(i, j);
      }
      poly += t;
    }
    r = r * poly;
  }
  return r;
}

Evaluator evaluator(const StructuredFunction& f) {
  return [f](const SuperPoint& y) { return evaluate(f, y); };
}

SuperPoint q_map(const Eigen::MatrixXcd& l0, int q) {
  const int p = static_cast<int>(l0.rows());
  const int n = static_cast<int>(l0.cols());
  const int gens = FlatLayout::generators(q, n);
  using E = SElement<cplx>;
  SuperPoint y = SuperPoint::square(p, q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      cplx s = 0.0;
      for (int a = 0; a < n; ++a) s += l0(i, a) * std::conj(l0(j, a));
      y(i, j) = E(s, gens);
    }
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < q; ++k) {
      E s(cplx(0.0), gens);
      for (int a = 0; a < n; ++a) s += l0(i, a) * E::generator(FlatLayout::lambda_prime(a, k, n), gens);
      y(i, p + k) = s;
    }
  for (int k = 0; k < q; ++k)
    for (int j = 0; j < p; ++j) {
      E s(cplx(0.0), gens);
      for (int a = 0; a < n; ++a) s += std::conj(l0(j, a)) * E::generator(FlatLayout::lambda(k, a, n), gens);
      y(p + k, j) = s;
    }
  for (int k = 0; k < q; ++k)
    for (int l = 0; l < q; ++l) {
      E s(cplx(0.0), gens);
      for (int a = 0; a < n; ++a)
        s += E::generator(FlatLayout::lambda(k, a, n), gens) * E::generator(FlatLayout::lambda_prime(a, l, n), gens);
      y(p + k, p + l) = s;
    }
  return y;
}

EvenGroupElement EvenGroupElement::identity(int p, int q) {
  return {Eigen::MatrixXcd::Identity(p + q, p + q), Eigen::MatrixXcd::Identity(p + q, p + q), p, q};
}

EvenGroupElement operator*(const EvenGroupElement& x, const EvenGroupElement& y) {
  if (x.p != y.p || x.q != y.q) throw std::invalid_argument("EvenGroupElement: type mismatch");
  return {x.A * y.A, x.D * y.D, x.p, x.q};
}

cplx numeric_berezinian(const Eigen::MatrixXcd& m, int p, int q) {
  if (m.rows() != p + q || m.cols() != p + q) throw std::invalid_argument("numeric_berezinian: shape mismatch");
  const cplx dz = p ? m.topLeftCorner(p, p).determinant() : cplx(1.0);
  const cplx dw = q ? m.bottomRightCorner(q, q).determinant() : cplx(1.0);
  if (dz == cplx(0.0) || dw == cplx(0.0)) throw std::domain_error("numeric_berezinian: singular block");
  return dz / dw;
}

Evaluator group_action(const EvenGroupElement& h, Evaluator f, int n, bool twisted) {
  const cplx ba = numeric_berezinian(h.A, h.p, h.q);
  const cplx bd = numeric_berezinian(h.D, h.p, h.q);
  const SuperPoint a = SuperPoint::from_body(h.A, h.p, h.q);
  const SuperPoint dinv = SuperPoint::from_body(Eigen::MatrixXcd(h.D.inverse()), h.p, h.q);
  const cplx pref = twisted ? std::pow(std::sqrt(ba) / std::sqrt(bd), n) : cplx(1.0);
  return [f = std::move(f), a, dinv, pref](const SuperPoint& y) { return f(dinv * y * a) * pref; };
}

}  // namespace sb
