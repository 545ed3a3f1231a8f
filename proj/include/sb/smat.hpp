#pragma once

#include "sb/galg.hpp"

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {
template <class S>
struct NumTraits<sb::SElement<S>> : GenericNumTraits<sb::SElement<S>> {
  using Real = sb::SElement<S>;
  using NonInteger = sb::SElement<S>;
  using Literal = sb::SElement<S>;
  using Nested = sb::SElement<S>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 16
  };
};
}  // namespace Eigen

namespace sb {

using MultiIndex = std::vector<int>;

// Block matrix over SElement. Rows 0..r_ev-1 are even, the rest odd; same for
// columns. An even supermatrix has even entries in the diagonal blocks and odd
// entries in the off-diagonal blocks.
template <class S>
class SuperMatrix {
 public:
  using Elem = SElement<S>;
  using Storage = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic>;

  SuperMatrix() = default;
  SuperMatrix(int r_ev, int r_od, int c_ev, int c_od)
      : r_ev_(r_ev), r_od_(r_od), c_ev_(c_ev), c_od_(c_od), e_(r_ev + r_od, c_ev + c_od) {
    if (r_ev < 0 || r_od < 0 || c_ev < 0 || c_od < 0) throw std::invalid_argument("SuperMatrix: negative block size");
    e_.fill(Elem());
  }

  static SuperMatrix square(int p, int q) { return SuperMatrix(p, q, p, q); }

  static SuperMatrix identity(int p, int q) {
    SuperMatrix m = square(p, q);
    for (int i = 0; i < p + q; ++i) m(i, i) = Elem(Ring<S>::one());
    return m;
  }

  // Numeric matrix placed in the bodies; nonzero odd-block entries are rejected.
  template <class Derived>
  static SuperMatrix from_body(const Eigen::MatrixBase<Derived>& body, int p, int q) {
    if (body.rows() != p + q || body.cols() != p + q) throw std::invalid_argument("SuperMatrix: body shape mismatch");
    SuperMatrix m = square(p, q);
    for (int i = 0; i < p + q; ++i)
      for (int j = 0; j < p + q; ++j) {
        const S v = static_cast<S>(body(i, j));
        if (((i >= p) != (j >= p)) && !Ring<S>::is_zero(v))
          throw std::invalid_argument("SuperMatrix: numeric entry in an odd block");
        m(i, j) = Elem(v);
      }
    return m;
  }

  int rows() const { return r_ev_ + r_od_; }
  int cols() const { return c_ev_ + c_od_; }
  int row_even() const { return r_ev_; }
  int row_odd() const { return r_od_; }
  int col_even() const { return c_ev_; }
  int col_odd() const { return c_od_; }
  bool is_square_type() const { return r_ev_ == c_ev_ && r_od_ == c_od_; }

  Elem& operator()(int i, int j) { return e_(i, j); }
  const Elem& operator()(int i, int j) const { return e_(i, j); }
  const Storage& entries() const { return e_; }

  int row_parity(int i) const { return i >= r_ev_ ? 1 : 0; }
  int col_parity(int j) const { return j >= c_ev_ ? 1 : 0; }

  bool is_even() const {
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j) {
        const int want = (row_parity(i) + col_parity(j)) & 1;
        const int got = e_(i, j).parity();
        if (got != want && !e_(i, j).is_zero()) return false;
      }
    return true;
  }

  // Rectangular sub-block with the grading inherited from the parent.
  SuperMatrix sub(int r0, int nr, int c0, int nc) const {
    const int re = std::max(0, std::min(r_ev_, r0 + nr) - r0);
    const int ce = std::max(0, std::min(c_ev_, c0 + nc) - c0);
    SuperMatrix m(re, nr - re, ce, nc - ce);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m(i, j) = e_(r0 + i, c0 + j);
    return m;
  }

  SuperMatrix block_A() const { return sub(0, r_ev_, 0, c_ev_); }
  SuperMatrix block_B() const { return sub(0, r_ev_, c_ev_, c_od_); }
  SuperMatrix block_C() const { return sub(r_ev_, r_od_, 0, c_ev_); }
  SuperMatrix block_D() const { return sub(r_ev_, r_od_, c_ev_, c_od_); }

  static SuperMatrix assemble(const SuperMatrix& a, const SuperMatrix& b, const SuperMatrix& c, const SuperMatrix& d) {
    SuperMatrix m(a.rows(), c.rows(), a.cols(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
      for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    for (int i = 0; i < c.rows(); ++i) {
      for (int j = 0; j < c.cols(); ++j) m(a.rows() + i, j) = c(i, j);
      for (int j = 0; j < d.cols(); ++j) m(a.rows() + i, c.cols() + j) = d(i, j);
    }
    return m;
  }

  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> body() const {
    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> b(rows(), cols());
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j) b(i, j) = e_(i, j).body();
    return b;
  }

  friend SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
    check_same_type(x, y);
    SuperMatrix m = x;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) m(i, j) = x(i, j) + y(i, j);
    return m;
  }

  friend SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) {
    check_same_type(x, y);
    SuperMatrix m = x;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) m(i, j) = x(i, j) - y(i, j);
    return m;
  }

  friend bool operator==(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.r_ev_ != y.r_ev_ || x.r_od_ != y.r_od_ || x.c_ev_ != y.c_ev_ || x.c_od_ != y.c_od_) return false;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j)
        if (!(x(i, j) == y(i, j))) return false;
    return true;
  }

  SuperMatrix operator-() const {
    SuperMatrix m = *this;
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols(); ++j) m(i, j) = -e_(i, j);
    return m;
  }

  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.c_ev_ != y.r_ev_ || x.c_od_ != y.r_od_) throw std::invalid_argument("SuperMatrix: product type mismatch");
    SuperMatrix m(x.r_ev_, x.r_od_, y.c_ev_, y.c_od_);
    for (int i = 0; i < x.rows(); ++i)
      for (int k = 0; k < y.cols(); ++k) {
        Elem acc;
        for (int j = 0; j < x.cols(); ++j) {
          if (x(i, j).is_zero() || y(j, k).is_zero()) continue;
          acc += x(i, j) * y(j, k);
        }
        m(i, k) = std::move(acc);
      }
    return m;
  }

  // Left multiplication by an even scalar element.
  friend SuperMatrix operator*(const Elem& s, const SuperMatrix& x) {
    SuperMatrix m = x;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) m(i, j) = s * x(i, j);
    return m;
  }

  friend SuperMatrix operator*(const S& s, const SuperMatrix& x) { return Elem(s) * x; }

 private:
  static void check_same_type(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.r_ev_ != y.r_ev_ || x.r_od_ != y.r_od_ || x.c_ev_ != y.c_ev_ || x.c_od_ != y.c_od_)
      throw std::invalid_argument("SuperMatrix: block type mismatch");
  }

  int r_ev_ = 0, r_od_ = 0, c_ev_ = 0, c_od_ = 0;
  Storage e_;
};

namespace detail {

// Gauss-Jordan inverse of a dense k x k matrix with partial pivoting on magnitude.
template <class S>
bool invert_dense(std::vector<S>& a, int k) {
  std::vector<S> inv(static_cast<std::size_t>(k) * k, Ring<S>::zero());
  for (int i = 0; i < k; ++i) inv[i * k + i] = Ring<S>::one();
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    double best = 0.0;
    for (int r = col; r < k; ++r) {
      const double mag = Ring<S>::magnitude(a[r * k + col]);
      if (!Ring<S>::is_zero(a[r * k + col]) && mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (piv < 0) return false;
    if (piv != col)
      for (int j = 0; j < k; ++j) {
        std::swap(a[piv * k + j], a[col * k + j]);
        std::swap(inv[piv * k + j], inv[col * k + j]);
      }
    const S d = a[col * k + col];
    for (int j = 0; j < k; ++j) {
      a[col * k + j] = Ring<S>::divide(a[col * k + j], d);
      inv[col * k + j] = Ring<S>::divide(inv[col * k + j], d);
    }
    for (int r = 0; r < k; ++r) {
      if (r == col || Ring<S>::is_zero(a[r * k + col])) continue;
      const S f = a[r * k + col];
      for (int j = 0; j < k; ++j) {
        a[r * k + j] -= f * a[col * k + j];
        inv[r * k + j] -= f * inv[col * k + j];
      }
    }
  }
  a.swap(inv);
  return true;
}

template <class S>
SElement<S> det_expand(const SuperMatrix<S>& m, std::vector<int>& rows_left, int col) {
  const int k = static_cast<int>(rows_left.size());
  if (k == 0) return SElement<S>(Ring<S>::one());
  SElement<S> acc;
  for (int idx = 0; idx < k; ++idx) {
    const int r = rows_left[idx];
    if (m(r, col).is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(k - 1);
    for (int t = 0; t < k; ++t)
      if (t != idx) rest.push_back(rows_left[t]);
    SElement<S> term = m(r, col) * det_expand(m, rest, col + 1);
    if (idx & 1) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace detail

// Determinant of a square matrix whose entries are all even (hence commute).
template <class S>
SElement<S> det_even(const SuperMatrix<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_even: non-square matrix");
  std::vector<int> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows[i] = i;
  return detail::det_expand(m, rows, 0);
}

// Inverse of the numeric body of the diagonal blocks; throws when singular.
template <class S>
SuperMatrix<S> body_inverse(const SuperMatrix<S>& z) {
  const int p = z.row_even(), q = z.row_odd();
  SuperMatrix<S> r = SuperMatrix<S>::square(p, q);
  for (int blk = 0; blk < 2; ++blk) {
    const int off = blk == 0 ? 0 : p;
    const int k = blk == 0 ? p : q;
    std::vector<S> a(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a[i * k + j] = z(off + i, off + j).body();
    if (!detail::invert_dense(a, k)) throw std::domain_error("SuperMatrix inverse: singular body");
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) r(off + i, off + j) = SElement<S>(a[i * k + j]);
  }
  return r;
}

template <class S>
bool body_invertible(const SuperMatrix<S>& z) {
  const int k = z.rows();
  std::vector<S> a(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i * k + j] = z(i, j).body();
  return detail::invert_dense(a, k);
}

template <class S>
SuperMatrix<S> inverse(const SuperMatrix<S>& z) {
  if (!z.is_square_type()) throw std::invalid_argument("SuperMatrix inverse: not square");
  const SuperMatrix<S> z0inv = body_inverse(z);
  SuperMatrix<S> soul = z;
  for (int i = 0; i < z.rows(); ++i)
    for (int j = 0; j < z.cols(); ++j) soul(i, j) = z(i, j).soul();
  const SuperMatrix<S> x = -(z0inv * soul);
  SuperMatrix<S> sum = SuperMatrix<S>::identity(z.row_even(), z.row_odd());
  SuperMatrix<S> power = sum;
  int gens = 0;
  for (int i = 0; i < z.rows(); ++i)
    for (int j = 0; j < z.cols(); ++j) gens = std::max(gens, z(i, j).generators());
  for (int k = 1; k <= gens + 1; ++k) {
    power = power * x;
    bool zero = true;
    for (int i = 0; i < z.rows() && zero; ++i)
      for (int j = 0; j < z.cols() && zero; ++j) zero = power(i, j).is_zero();
    if (zero) break;
    sum = sum + power;
  }
  return sum * z0inv;
}

template <class S>
SElement<S> supertrace(const SuperMatrix<S>& z) {
  if (!z.is_square_type()) throw std::invalid_argument("supertrace: not square");
  SElement<S> s;
  for (int i = 0; i < z.row_even(); ++i) s += z(i, i);
  for (int i = z.row_even(); i < z.rows(); ++i) s -= z(i, i);
  return s;
}

// det(A - B D^-1 C) det(D)^-1; needs an invertible D body.
template <class S>
SElement<S> berezinian_schur_d(const SuperMatrix<S>& z) {
  const SuperMatrix<S> a = z.block_A(), b = z.block_B(), c = z.block_C(), d = z.block_D();
  if (z.row_odd() == 0) return det_even(a);
  const SuperMatrix<S> dinv = inverse(d);
  return det_even(a - b * dinv * c) * inverse(det_even(d));
}

// det(A) det(D - C A^-1 B)^-1; needs an invertible A body.
template <class S>
SElement<S> berezinian_schur_a(const SuperMatrix<S>& z) {
  const SuperMatrix<S> a = z.block_A(), b = z.block_B(), c = z.block_C(), d = z.block_D();
  if (z.row_even() == 0) return inverse(det_even(d));
  const SuperMatrix<S> ainv = inverse(a);
  return det_even(a) * inverse(det_even(d - c * ainv * b));
}

// Ber(Z)^-1 = det(D - C A^-1 B) det(A)^-1. Defined whenever A is body-invertible,
// including points where D is nilpotent and Ber(Z) itself is not.
template <class S>
SElement<S> inverse_berezinian(const SuperMatrix<S>& z) {
  if (!z.is_square_type()) throw std::invalid_argument("inverse_berezinian: not square");
  const SuperMatrix<S> a = z.block_A(), b = z.block_B(), c = z.block_C(), d = z.block_D();
  if (z.row_even() == 0) return det_even(d);
  const SuperMatrix<S> ainv = inverse(a);
  if (z.row_odd() == 0) return inverse(det_even(a));
  return det_even(d - c * ainv * b) * inverse(det_even(a));
}

template <class S>
SElement<S> berezinian(const SuperMatrix<S>& z) {
  if (!z.is_square_type()) throw std::invalid_argument("berezinian: not square");
  if (body_invertible(z.block_D())) return berezinian_schur_d(z);
  if (body_invertible(z.block_A())) return berezinian_schur_a(z);
  throw std::domain_error("berezinian: neither diagonal block has an invertible body");
}

// Top-left k x k minor with grading (min(k,p) | max(0,k-p)).
template <class S>
SuperMatrix<S> principal_minor(const SuperMatrix<S>& z, int k) {
  if (k < 0 || k > z.rows()) throw std::out_of_range("principal_minor: k out of range");
  return z.sub(0, k, 0, k);
}

// Delta_m(Z) = prod_k Delta_k(Z)^(m_k - m_{k+1}) with Delta_k = Ber of the k-th
// principal minor. For k > p a negative exponent is evaluated through positive
// powers of inverse_berezinian, which exists at nilpotent-w points.
template <class S>
SElement<S> delta_m(const SuperMatrix<S>& z, const MultiIndex& m) {
  const int p = z.row_even(), q = z.row_odd();
  if (!z.is_square_type()) throw std::invalid_argument("delta_m: not square");
  if (static_cast<int>(m.size()) != p + q) throw std::invalid_argument("delta_m: multi-index length mismatch");
  SElement<S> r(Ring<S>::one());
  for (int k = 1; k <= p + q; ++k) {
    const int e = m[k - 1] - (k < p + q ? m[k] : 0);
    if (e == 0) continue;
    const SuperMatrix<S> minor = principal_minor(z, k);
    if (k <= p) {
      r = r * pow(det_even(minor), e);
    } else if (e > 0) {
      if (!body_invertible(minor.block_D()))
        throw std::domain_error("delta_m: positive odd-range exponent at a point with singular w-minor");
      r = r * pow(berezinian_schur_d(minor), e);
    } else {
      if (!body_invertible(minor.block_A()))
        throw std::domain_error("delta_m: negative odd-range exponent needs an invertible z-minor");
      r = r * pow(inverse_berezinian(minor), -e);
    }
  }
  return r;
}

// Element g = [[A, B], [C, D]] of GL(2(p|q)) acting by fractional linear maps.
template <class S>
struct MobiusElement {
  SuperMatrix<S> A, B, C, D;

  static MobiusElement identity(int p, int q) {
    return {SuperMatrix<S>::identity(p, q), SuperMatrix<S>::square(p, q), SuperMatrix<S>::square(p, q),
            SuperMatrix<S>::identity(p, q)};
  }

  friend MobiusElement operator*(const MobiusElement& x, const MobiusElement& y) {
    return {x.A * y.A + x.B * y.C, x.A * y.B + x.B * y.D, x.C * y.A + x.D * y.C, x.C * y.B + x.D * y.D};
  }
};

template <class S>
SuperMatrix<S> mobius(const MobiusElement<S>& g, const SuperMatrix<S>& z) {
  const SuperMatrix<S> den = g.C * z + g.D;
  if (!body_invertible(den.block_A()) || !body_invertible(den.block_D()))
    throw std::domain_error("mobius: CZ + D has a singular body");
  return (g.A * z + g.B) * inverse(den);
}

template <class S>
MobiusElement<S> cayley_element(int p, int q) {
  const SuperMatrix<S> one = SuperMatrix<S>::identity(p, q);
  return {one, one, -one, one};
}

template <class S>
SuperMatrix<S> cayley(const SuperMatrix<S>& z) {
  const SuperMatrix<S> one = SuperMatrix<S>::identity(z.row_even(), z.row_odd());
  const SuperMatrix<S> den = one - z;
  if (!body_invertible(den.block_A()) || !body_invertible(den.block_D()))
    throw std::domain_error("cayley: 1 - Z has a singular body");
  return (one + z) * inverse(den);
}

// Block-diagonal element diag(first, second) of K_C.
template <class S>
struct KElement {
  SuperMatrix<S> first, second;
};

// k(g, Z) = diag((A - B D^-1 C)(1 + Z D^-1 C)^-1, C Z + D).
template <class S>
KElement<S> isotropy_cocycle(const MobiusElement<S>& g, const SuperMatrix<S>& z) {
  const SuperMatrix<S> one = SuperMatrix<S>::identity(z.row_even(), z.row_odd());
  const SuperMatrix<S> dinv = inverse(g.D);
  return {(g.A - g.B * dinv * g.C) * inverse(one + z * dinv * g.C), g.C * z + g.D};
}

// chi_{2 lambda}(diag(A, D)) = Ber(D)^n Ber(A)^-n.
template <class S>
SElement<S> chi_2lambda(const KElement<S>& k, int n) {
  return pow(berezinian(k.second), n) * pow(berezinian(k.first), -n);
}

inline double max_abs_diff(const SuperMatrix<cplx>& a, const SuperMatrix<cplx>& b) {
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, max_abs_diff(a(i, j), b(i, j)));
  return d;
}

}  // namespace sb
