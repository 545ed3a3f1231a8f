#include "sb/osc.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sb {

namespace {

using Key = Poly<Rational>::Key;
using Mask = SuperPolynomial::Mask;

int sign_of(int parity) { return (parity & 1) ? -1 : 1; }

// One oscillator factor: either multiplication by a coordinate or a derivation.
struct Factor {
  Rational coeff{1};
  OscVar var;
  bool deriv = false;
};

int var_parity(const OscVar& v) { return v.odd ? 1 : 0; }

bool same_var(const OscVar& a, const OscVar& b) { return a.odd == b.odd && a.index == b.index; }

// psi^dag_{I alpha}
Factor psi_dag(GIndex I, int alpha, const OscLayout& lay) {
  if (I.side == 0) return {Rational(-sign_of(lay.parity(I.a))), lay.u(I.a, alpha), true};
  return {Rational(1), lay.v(alpha, I.a), false};
}

// psi_{J alpha}
Factor psi(GIndex J, int alpha, const OscLayout& lay) {
  if (J.side == 0) return {Rational(1), lay.u(J.a, alpha), false};
  return {Rational(1), lay.v(alpha, J.a), true};
}

void check_index(GIndex g, const OscLayout& lay) {
  if (g.side < 0 || g.side > 1 || g.a < 0 || g.a >= lay.p + lay.q)
    throw std::out_of_range("oscillator: index out of range");
}

// Append X*Y in normal order to op.
void push_product(const Factor& x, const Factor& y, QuadOperator& op) {
  const Rational c = x.coeff * y.coeff;
  if (!x.deriv && !y.deriv) {
    op.terms.push_back({c, {x.var, y.var}, {}});
  } else if (!x.deriv && y.deriv) {
    op.terms.push_back({c, {x.var}, {y.var}});
  } else if (x.deriv && y.deriv) {
    op.terms.push_back({c, {}, {x.var, y.var}});
  } else {
    const int s = sign_of(var_parity(x.var) * var_parity(y.var));
    op.terms.push_back({c * Rational(s), {y.var}, {x.var}});
    if (same_var(x.var, y.var)) op.constant += c;
  }
}

SuperPolynomial multiply_by(const OscVar& v, const SuperPolynomial& f, int gens) {
  if (v.odd) return SuperPolynomial::generator(v.index, gens) * f;
  const Poly<Rational> x = Poly<Rational>::variable(v.index);
  std::vector<SuperPolynomial::Term> raw;
  raw.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) raw.emplace_back(m, x * c);
  return SuperPolynomial::from_terms(std::move(raw), gens);
}

SuperPolynomial differentiate(const OscVar& v, const SuperPolynomial& f, int gens) {
  if (v.odd) return odd_derivative(v.index, f);
  std::vector<SuperPolynomial::Term> raw;
  for (const auto& [m, c] : f.terms()) {
    Poly<Rational> d = c.derivative(v.index);
    if (!d.is_zero()) raw.emplace_back(m, std::move(d));
  }
  return SuperPolynomial::from_terms(std::move(raw), gens);
}

GIndex row_of(const BasisLabel& l) {
  const bool y = l.block == Block::C || l.block == Block::D;
  return {y ? 1 : 0, l.i};
}

GIndex col_of(const BasisLabel& l) {
  const bool y = l.block == Block::B || l.block == Block::D;
  return {y ? 1 : 0, l.j};
}

std::string index_name(GIndex g) {
  std::ostringstream os;
  os << (g.side == 0 ? "x" : "y") << g.a + 1;
  return os.str();
}

void enumerate_even(int vars, int total, int start, Key key, std::vector<Key>& out) {
  if (total == 0) {
    out.push_back(key);
    return;
  }
  for (int i = start; i < vars; ++i) enumerate_even(vars, total - 1, i, key + (Key{1} << (8 * i)), out);
}

void enumerate_odd(int gens, int count, int start, Mask mask, std::vector<Mask>& out) {
  if (count == 0) {
    out.push_back(mask);
    return;
  }
  for (int i = start; i < gens; ++i) enumerate_odd(gens, count - 1, i + 1, mask | (Mask{1} << i), out);
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rational>>& a, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < a.size(); ++c) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][c] == Rational(0)) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[row], a[piv]);
    const Rational inv = Rational(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == Rational(0)) continue;
      const Rational f = a[r][c];
      for (int k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

OscVar OscLayout::u(int a, int alpha) const {
  if (a < 0 || a >= p + q || alpha < 0 || alpha >= n) throw std::out_of_range("OscLayout::u: index out of range");
  if (a < p) return {false, a * n + alpha};
  const int k = a - p;
  return {true, 2 * (k * n + alpha)};
}

OscVar OscLayout::v(int alpha, int a) const {
  if (a < 0 || a >= p + q || alpha < 0 || alpha >= n) throw std::out_of_range("OscLayout::v: index out of range");
  if (a < p) return {false, p * n + a * n + alpha};
  const int k = a - p;
  return {true, 2 * (k * n + alpha) + 1};
}

std::string BasisLabel::name() const {
  static const char* tags[] = {"A", "B", "C", "D"};
  std::ostringstream os;
  os << "E^" << tags[static_cast<int>(block)] << "_" << i + 1 << j + 1;
  return os.str();
}

QuadOperator build_operator(GIndex row, GIndex col, const OscLayout& lay) {
  check_index(row, lay);
  check_index(col, lay);
  QuadOperator op;
  for (int alpha = 0; alpha < lay.n; ++alpha) push_product(psi_dag(row, alpha, lay), psi(col, alpha, lay), op);
  if (row.side == col.side && row.a == col.a) op.constant += Rational(lay.n * sign_of(lay.parity(row.a)), 2);
  op.parity = (lay.parity(row.a) + lay.parity(col.a)) & 1;
  if (row.side == col.side) op.degree_shift = 0;
  else op.degree_shift = row.side == 0 ? -2 : 2;
  return op;
}

QuadOperator build_operator(const BasisLabel& label, const OscLayout& lay) {
  return build_operator(row_of(label), col_of(label), lay);
}

QuadOperator gl_n_operator(int gamma, int delta, const OscLayout& lay) {
  if (gamma < 0 || gamma >= lay.n || delta < 0 || delta >= lay.n)
    throw std::out_of_range("gl_n_operator: index out of range");
  QuadOperator op;
  for (int a = 0; a < lay.p + lay.q; ++a) {
    op.terms.push_back({Rational(1), {lay.u(a, gamma)}, {lay.u(a, delta)}});
    op.terms.push_back({Rational(-1), {lay.v(delta, a)}, {lay.v(gamma, a)}});
  }
  return op;
}

SuperPolynomial one(const OscLayout& lay) { return SuperPolynomial(Poly<Rational>(Rational(1)), lay.odd_gens()); }

SuperPolynomial apply(const QuadOperator& op, const SuperPolynomial& f, const OscLayout& lay) {
  const int gens = lay.odd_gens();
  SuperPolynomial result = Poly<Rational>(op.constant) * f;
  for (const auto& t : op.terms) {
    SuperPolynomial g = f;
    for (auto it = t.deriv.rbegin(); it != t.deriv.rend() && !g.is_zero(); ++it) g = differentiate(*it, g, gens);
    for (auto it = t.mult.rbegin(); it != t.mult.rend() && !g.is_zero(); ++it) g = multiply_by(*it, g, gens);
    if (!g.is_zero()) result += Poly<Rational>(t.coeff) * g;
  }
  return result;
}

std::vector<SuperPolynomial> monomial_basis(const OscLayout& lay, int d) {
  std::vector<SuperPolynomial> out;
  if (d < 0) return out;
  const int gens = lay.odd_gens();
  for (int o = 0; o <= std::min(d, gens); ++o) {
    std::vector<Mask> masks;
    enumerate_odd(gens, o, 0, 0, masks);
    std::vector<Key> keys;
    if (lay.even_vars() > 0 || d == o) enumerate_even(lay.even_vars(), d - o, 0, 0, keys);
    for (Mask m : masks)
      for (Key k : keys)
        out.push_back(SuperPolynomial::monomial(m, Poly<Rational>::monomial(k, Rational(1)), gens));
  }
  return out;
}

void check_osc_guardrails(int p, int q, int n, int d) {
  if (p < 0 || q < 0 || n < 0) throw std::invalid_argument("oscillator: p, q, n must be nonnegative");
  if (p > 2 || q > 2 || n > 2) throw std::invalid_argument("oscillator: (p,q,n) must not exceed (2,2,2)");
  if (d > 4) throw std::invalid_argument("oscillator: degree cap must be at most 4");
}

CommutatorReport commutator_check(int p, int q, int n, int degree_cap) {
  check_osc_guardrails(p, q, n, degree_cap);
  const OscLayout lay{p, q, n};
  const int r = p + q;
  std::vector<GIndex> idx;
  for (int side = 0; side < 2; ++side)
    for (int a = 0; a < r; ++a) idx.push_back({side, a});
  const int dim = static_cast<int>(idx.size());

  std::vector<QuadOperator> T(dim * dim);
  for (int I = 0; I < dim; ++I)
    for (int J = 0; J < dim; ++J) T[I * dim + J] = build_operator(idx[I], idx[J], lay);
  auto par = [&](int I) { return lay.parity(idx[I].a); };

  std::vector<SuperPolynomial> vecs;
  for (int d = 0; d <= degree_cap; ++d) {
    auto b = monomial_basis(lay, d);
    vecs.insert(vecs.end(), b.begin(), b.end());
  }

  CommutatorReport rep;
  auto record = [&](const std::string& what, const SuperPolynomial& f) {
    if (rep.failure_samples.size() < 8) {
      std::ostringstream os;
      os << what << " on " << f;
      rep.failure_samples.push_back(os.str());
    }
  };

  // Images T_X f, cached per (X, f).
  std::vector<std::vector<SuperPolynomial>> img(dim * dim, std::vector<SuperPolynomial>(vecs.size()));
  for (int x = 0; x < dim * dim; ++x)
    for (std::size_t f = 0; f < vecs.size(); ++f) img[x][f] = apply(T[x], vecs[f], lay);

  for (int I = 0; I < dim; ++I)
    for (int J = 0; J < dim; ++J) {
      const int X = I * dim + J;
      const int px = (par(I) + par(J)) & 1;
      for (int K = 0; K < dim; ++K)
        for (int L = 0; L < dim; ++L) {
          const int Y = K * dim + L;
          const int py = (par(K) + par(L)) & 1;
          const Rational s(sign_of(px * py));
          ++rep.pairs_checked;
          bool ok = true;
          for (std::size_t f = 0; f < vecs.size(); ++f) {
            SuperPolynomial lhs = apply(T[X], img[Y][f], lay) - Poly<Rational>(s) * apply(T[Y], img[X][f], lay);
            SuperPolynomial rhs(Poly<Rational>(Rational(0)), lay.odd_gens());
            if (J == K) rhs += img[I * dim + L][f];
            if (L == I) rhs -= Poly<Rational>(s) * img[K * dim + J][f];
            ++rep.vectors_checked;
            if (!(lhs == rhs)) {
              ++rep.failures;
              if (ok) record("[E_" + index_name(idx[I]) + index_name(idx[J]) + ", E_" + index_name(idx[K]) +
                                 index_name(idx[L]) + "]",
                             vecs[f]);
              ok = false;
            }
          }
        }
    }

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const QuadOperator K = gl_n_operator(g, h, lay);
      for (int x = 0; x < dim * dim; ++x)
        for (std::size_t f = 0; f < vecs.size(); ++f) {
          ++rep.centralizer_checked;
          SuperPolynomial c = apply(T[x], apply(K, vecs[f], lay), lay) - apply(K, img[x][f], lay);
          if (!c.is_zero()) {
            ++rep.centralizer_failures;
            record("[T, K_" + std::to_string(g + 1) + std::to_string(h + 1) + "]", vecs[f]);
          }
        }
    }
  return rep;
}

std::vector<Rational> highest_weight(int p, int q, int n) {
  check_osc_guardrails(p, q, n, 0);
  const OscLayout lay{p, q, n};
  const SuperPolynomial vac = one(lay);
  auto eigen = [&](GIndex g) {
    SuperPolynomial img = apply(build_operator(g, g, lay), vac, lay);
    const Rational c = img.is_zero() ? Rational(0) : img.body().coeff(0);
    if (!(img == Poly<Rational>(c) * vac)) throw std::logic_error("highest_weight: constant is not a Cartan eigenvector");
    return c;
  };
  std::vector<Rational> w;
  for (int i = 0; i < p; ++i) w.push_back(eigen({0, i}));
  for (int i = 0; i < p; ++i) w.push_back(eigen({1, i}));
  for (int j = 0; j < q; ++j) w.push_back(eigen({0, p + j}));
  for (int j = 0; j < q; ++j) w.push_back(eigen({1, p + j}));
  return w;
}

InvariantSpace invariants_up_to_degree(int p, int q, int n, int d) {
  check_osc_guardrails(p, q, n, d);
  const OscLayout lay{p, q, n};
  std::vector<QuadOperator> ks;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) ks.push_back(gl_n_operator(g, h, lay));

  InvariantSpace out;
  for (int deg = 0; deg <= d; ++deg) {
    const auto basis = monomial_basis(lay, deg);
    const int cols = static_cast<int>(basis.size());
    std::map<std::pair<Mask, Key>, int> pos;
    for (int c = 0; c < cols; ++c) pos[{basis[c].terms()[0].first, basis[c].terms()[0].second.terms()[0].first}] = c;

    std::vector<std::vector<Rational>> rows;
    for (const auto& K : ks) {
      std::vector<std::vector<Rational>> block(cols, std::vector<Rational>(cols, Rational(0)));
      for (int c = 0; c < cols; ++c) {
        const SuperPolynomial image = apply(K, basis[c], lay);
        for (const auto& [m, poly] : image.terms())
          for (const auto& [k, coef] : poly.terms()) block[pos.at({m, k})][c] += coef;
      }
      for (auto& r : block)
        if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return x != Rational(0); })) rows.push_back(std::move(r));
    }
    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<SuperPolynomial> kernel;
    for (int f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      SuperPolynomial v = basis[f];
      for (std::size_t r = 0; r < pivots.size(); ++r)
        if (rows[r][f] != Rational(0)) v -= Poly<Rational>(rows[r][f]) * basis[pivots[r]];
      kernel.push_back(std::move(v));
    }
    out.dims.push_back(static_cast<int>(kernel.size()));
    out.basis.push_back(std::move(kernel));
  }
  return out;
}

}  // namespace sb
