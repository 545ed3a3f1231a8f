#include "sb/properties.hpp"
#include "sb/smat.hpp"

#include <doctest.h>

using namespace sb;
using RM = SuperMatrix<Rational>;
using RE = SElement<Rational>;
using CM = SuperMatrix<cplx>;
using CE = SElement<cplx>;

namespace {

RE xi(int i, int n) { return RE::generator(i, n); }

// (1|1) matrix [[a, beta], [gamma, d]] over 2 generators.
RM one_one(Rational a, Rational d) {
  RM z = RM::square(1, 1);
  z(0, 0) = RE(a, 2);
  z(0, 1) = xi(0, 2);
  z(1, 0) = xi(1, 2);
  z(1, 1) = RE(d, 2);
  return z;
}

CM diag(std::vector<cplx> v, int p, int q) {
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(p + q, p + q);
  for (int i = 0; i < p + q; ++i) b(i, i) = v[i];
  return CM::from_body(b, p, q);
}

}  // namespace

TEST_CASE("construction and parity") {
  const RM z = one_one(Rational(2), Rational(3));
  CHECK(z.is_even());
  RM bad = z;
  bad(0, 1) = RE(Rational(1), 2);
  CHECK_FALSE(bad.is_even());
  Eigen::MatrixXd b = Eigen::MatrixXd::Identity(2, 2);
  b(0, 1) = 1.0;
  CHECK_THROWS_AS(CM::from_body(b, 1, 1), std::invalid_argument);
}

TEST_CASE("supertrace") {
  CHECK(supertrace(RM::identity(2, 1)) == RE(Rational(1)));
  CHECK(supertrace(RM::identity(1, 3)) == RE(Rational(-2)));
  CHECK(supertrace(diag({2.0, 3.0}, 1, 1)).body() == cplx(-1.0));
  RandomSuper rs(21);
  for (int t = 0; t < 50; ++t) {
    const auto x = rs.even_matrix(2, 1, 0.0, 1.0), y = rs.even_matrix(2, 1, 0.0, 1.0);
    CHECK(max_abs(supertrace(x * y) - supertrace(y * x)) < 1e-12);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(RM::identity(2, 2)) == RM::identity(2, 2));
  const CM d = inverse(diag({2.0, 4.0}, 1, 1));
  CHECK(d(0, 0).body() == cplx(0.5));
  CHECK(d(1, 1).body() == cplx(0.25));
  RandomSuper rs(4);
  for (int t = 0; t < 20; ++t) {
    const RM z = rs.even_matrix_exact(1 + t % 2, 1 + (t / 2) % 2, 3);
    const RM one = RM::identity(z.row_even(), z.row_odd());
    CHECK(z * inverse(z) == one);
    CHECK(inverse(z) * z == one);
  }
}

TEST_CASE("berezinian of a (1|1) matrix") {
  CHECK(berezinian(RM::identity(2, 2)) == RE(Rational(1)));
  const Rational a(2), d(3);
  const RM z = one_one(a, d);
  const RE beta_gamma = xi(0, 2) * xi(1, 2);
  CHECK(berezinian(z) == RE(a / d, 2) - Rational(1) / (d * d) * beta_gamma);
  CHECK(berezinian_schur_a(z) == berezinian_schur_d(z));
  CHECK(inverse_berezinian(z) * berezinian(z) == RE(Rational(1), 2));
}

TEST_CASE("berezinian multiplicativity and Schur forms") {
  RandomSuper rs(8);
  for (int t = 0; t < 100; ++t) {
    const int p = 1 + t % 2, q = 1 + (t / 2) % 2;
    const auto x = rs.even_matrix(p, q, 2.0, 0.5), y = rs.even_matrix(p, q, 2.0, 0.5);
    const CE lhs = berezinian(x * y), rhs = berezinian(x) * berezinian(y);
    CHECK(max_abs(lhs - rhs) <= 1e-10 * max_abs(rhs));
    CHECK(max_abs(berezinian_schur_a(x) - berezinian_schur_d(x)) <= 1e-10 * max_abs(berezinian(x)));
  }
  for (int t = 0; t < 20; ++t) {
    const RM x = rs.even_matrix_exact(2, 2, 3), y = rs.even_matrix_exact(2, 2, 3);
    CHECK(berezinian(x * y) == berezinian(x) * berezinian(y));
    CHECK(berezinian_schur_a(x) == berezinian_schur_d(x));
  }
}

TEST_CASE("delta_m") {
  RandomSuper rs(12);
  const RM z = rs.even_matrix_exact(1, 2, 3);
  CHECK(delta_m(z, {0, 0, 0}) == RE(Rational(1)));
  CHECK(delta_m(z, {2, 2, 2}) == pow(berezinian(z), 2));
  const RM s = RM::from_body(Eigen::Matrix<Rational, 1, 1>::Constant(Rational(3)), 1, 0);
  CHECK(delta_m(s, {4}) == RE(Rational(81)));
  // homomorphism in m
  const MultiIndex m1{2, -1, 1}, m2{1, 0, -2};
  CHECK(delta_m(z, m1) * delta_m(z, m2) == delta_m(z, {3, -1, -1}));
  CHECK_THROWS_AS(delta_m(z, {1, 0}), std::invalid_argument);
}

TEST_CASE("delta_m on diagonal matrices matches the det-power product") {
  const std::vector<cplx> x{2.0, 0.5, cplx(0.3, 0.4), cplx(-1.0, 0.2)};
  const CM z = diag(x, 2, 2);
  for (const MultiIndex& m : {MultiIndex{3, 1, 0, -2}, MultiIndex{1, 1, -1, 2}, MultiIndex{0, 2, 1, 1}}) {
    // Delta_k = x_1...x_k for k <= p, divided by x_{p+1}...x_k beyond p.
    cplx want = 1.0;
    for (int k = 0; k < 4; ++k) want *= k < 2 ? std::pow(x[k], m[k]) : std::pow(x[k], -m[k]);
    CHECK(std::abs(delta_m(z, m).body() - want) < 1e-12 * std::abs(want));
  }
}

TEST_CASE("delta_m at a nilpotent odd block uses the dual form") {
  // y = Q(v) for p = 1, q = 1, n = 1: w-block nilpotent.
  RM z = RM::square(1, 1);
  z(0, 0) = RE(Rational(2), 2);
  z(0, 1) = xi(0, 2);
  z(1, 0) = xi(1, 2);
  z(1, 1) = RE(Rational(0), 2);
  CHECK(delta_m(z, {1, 0}) == RE(Rational(2), 2));
  // Delta_1 Delta_2^{-1} = 2 det(0 - xi1 xi0 / 2) / 2
  CHECK(delta_m(z, {0, -1}) == Rational(1, 2) * xi(0, 2) * xi(1, 2));
  CHECK_THROWS_AS(delta_m(z, {0, 1}), std::domain_error);
}

TEST_CASE("mobius action") {
  RandomSuper rs(2);
  const CM z = rs.even_matrix(1, 1, 0.0, 0.3);
  CHECK(max_abs_diff(mobius(MobiusElement<cplx>::identity(1, 1), z), z) == 0.0);
  MobiusElement<cplx> u = MobiusElement<cplx>::identity(1, 1);
  u.B = rs.even_matrix(1, 1, 0.0, 0.5);
  CHECK(max_abs_diff(mobius(u, z), z + u.B) < 1e-14);
  for (int t = 0; t < 50; ++t) {
    const auto g1 = rs.mobius_element(2, 1, 0.2), g2 = rs.mobius_element(2, 1, 0.2);
    const auto w = rs.even_matrix(2, 1, 0.0, 0.3);
    CHECK(max_abs_diff(mobius(g1 * g2, w), mobius(g1, mobius(g2, w))) < 1e-10);
  }
}

TEST_CASE("cayley transform") {
  CHECK(cayley(RM::square(1, 1)) == RM::identity(1, 1));
  const RM third = RM::from_body(Eigen::Matrix<Rational, 1, 1>::Constant(Rational(1, 3)), 1, 0);
  CHECK(cayley(third)(0, 0) == RE(Rational(2)));
  RandomSuper rs(6);
  for (int t = 0; t < 10; ++t) {
    const CM z = rs.even_matrix(1, 2, 0.0, 0.3);
    CHECK(max_abs_diff(cayley(z), mobius(cayley_element<cplx>(1, 2), z)) < 1e-12);
  }
  CHECK_THROWS_AS(cayley(RM::identity(1, 0)), std::domain_error);
}

TEST_CASE("isotropy cocycle") {
  RandomSuper rs(14);
  const CM z = rs.even_matrix(1, 1, 0.0, 0.3);
  const auto k = isotropy_cocycle(MobiusElement<cplx>::identity(1, 1), z);
  CHECK(max_abs_diff(k.first, CM::identity(1, 1)) < 1e-15);
  CHECK(max_abs_diff(k.second, CM::identity(1, 1)) < 1e-15);
  MobiusElement<cplx> g = MobiusElement<cplx>::identity(1, 1);
  g.A = rs.even_matrix(1, 1, 2.0, 0.3);
  g.D = rs.even_matrix(1, 1, 2.0, 0.3);
  const auto k0 = isotropy_cocycle(g, CM::square(1, 1));
  CHECK(max_abs_diff(k0.first, g.A) < 1e-14);
  CHECK(max_abs_diff(k0.second, g.D) < 1e-14);
  for (int t = 0; t < 50; ++t) {
    const auto g1 = rs.mobius_element(1, 1, 0.2), g2 = rs.mobius_element(1, 1, 0.2);
    const auto w = rs.even_matrix(1, 1, 0.0, 0.3);
    const CE lhs = chi_2lambda(isotropy_cocycle(g1 * g2, w), 3);
    const CE rhs = chi_2lambda(isotropy_cocycle(g1, mobius(g2, w)), 3) * chi_2lambda(isotropy_cocycle(g2, w), 3);
    CHECK(max_abs(lhs - rhs) <= 1e-8 * max_abs(rhs));
  }
}
