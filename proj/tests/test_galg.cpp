#include "sb/galg.hpp"

#include <doctest.h>

#include <random>

using namespace sb;
using R = SElement<Rational>;
using C = SElement<cplx>;

namespace {

R xi(int i, int n) { return R::generator(i, n); }

R random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<R::Term> raw;
  for (std::uint32_t m = 0; m < (1u << n); ++m) raw.emplace_back(m, Rational(c(rng)));
  return R::from_terms(raw, n);
}

}  // namespace

TEST_CASE("product signs") {
  const R x1 = xi(0, 2), x2 = xi(1, 2);
  const R x12 = R::monomial(0b11, Rational(1), 2);
  CHECK(x1 * x2 == x12);
  CHECK(x2 * x1 == -x12);
  CHECK(x1 * x1 == R(Rational(0), 2));
  const R a = R(Rational(1), 2) + x12;
  CHECK(a * a == R(Rational(1), 2) + R(Rational(2), 2) * x12);
}

TEST_CASE("associativity and supercommutativity on random elements") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const R a = random_element(rng, 4), b = random_element(rng, 4), c = random_element(rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(xi(i, 4) * xi(j, 4) == -(xi(j, 4) * xi(i, 4)));
  const R even = xi(0, 4) * xi(1, 4) + R(Rational(2), 4);
  const R odd = xi(2, 4) + xi(3, 4);
  CHECK(even * odd == odd * even);
}

TEST_CASE("odd derivative") {
  CHECK(odd_derivative(0, xi(0, 3)) == R(Rational(1), 3));
  CHECK(odd_derivative(1, xi(0, 3) * xi(1, 3)) == -xi(0, 3));
  CHECK(odd_derivative(0, xi(1, 3) * xi(2, 3)).is_zero());
  CHECK_THROWS_AS(odd_derivative(3, xi(0, 3)), std::out_of_range);
}

TEST_CASE("odd derivative is a graded derivation") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const R a = xi(0, 4) * xi(2, 4) + xi(1, 4) * xi(3, 4) * Rational(t - 7);
    const R b = random_element(rng, 4);
    for (int i = 0; i < 4; ++i) CHECK(odd_derivative(i, a * b) == odd_derivative(i, a) * b + a * odd_derivative(i, b));
  }
}

TEST_CASE("berezin top coefficient") {
  const R a = R(Rational(3), 2) + R::monomial(0b11, Rational(5), 2);
  CHECK(berezin_top(a) == Rational(5));
  CHECK(berezin_top(R(Rational(7), 3)) == Rational(0));
  CHECK(berezin_top(exp_nilpotent(xi(0, 2) * xi(1, 2))) == Rational(1));
}

TEST_CASE("exp of nilpotent even elements") {
  CHECK(exp_nilpotent(R(Rational(0), 2)) == R(Rational(1), 2));
  const R x12 = xi(0, 4) * xi(1, 4), x34 = xi(2, 4) * xi(3, 4);
  CHECK(exp_nilpotent(x12) == R(Rational(1), 4) + x12);
  const Rational a(2, 3), b(-5);
  CHECK(exp_nilpotent(a * x12 + b * x34) == R(Rational(1), 4) + a * x12 + b * x34 + (a * b) * (x12 * x34));
  CHECK(exp_nilpotent(x12) * exp_nilpotent(x34) == exp_nilpotent(x12 + x34));
  CHECK_THROWS(exp_nilpotent(R(Rational(1), 2)));
  CHECK_THROWS(exp_nilpotent(xi(0, 2)));
}

TEST_CASE("body and soul") {
  const auto bs = body_soul(R(Rational(2), 2) + xi(0, 2));
  CHECK(bs.body == Rational(2));
  CHECK(bs.soul == xi(0, 2));
  const auto n = body_soul(xi(0, 2) * xi(1, 2));
  CHECK(n.body == Rational(0));
  CHECK(n.soul == xi(0, 2) * xi(1, 2));
  const auto one = body_soul(R(Rational(1)));
  CHECK(one.body == Rational(1));
  CHECK(one.soul.is_zero());
}

TEST_CASE("inverse and powers") {
  const R a = R(Rational(2), 4) + xi(0, 4) * xi(1, 4) + Rational(3) * xi(2, 4) * xi(3, 4);
  CHECK(a * inverse(a) == R(Rational(1), 4));
  CHECK(pow(a, 3) == a * a * a);
  CHECK(pow(a, -2) * pow(a, 2) == R(Rational(1), 4));
  CHECK_THROWS_AS(inverse(xi(0, 4)), std::domain_error);
}

TEST_CASE("parity and universes") {
  CHECK(xi(0, 2).parity() == 1);
  CHECK((xi(0, 2) * xi(1, 2)).parity() == 0);
  CHECK((xi(0, 2) + R(Rational(1), 2)).parity() == -1);
  CHECK_THROWS_AS(R::generator(0, 2) + R::generator(0, 3), std::invalid_argument);
  CHECK((R(Rational(2)) * xi(1, 3)) == Rational(2) * xi(1, 3));
  CHECK(xi(1, 2).widened(4) == xi(1, 4));
}

TEST_CASE("float ring agrees with the rational ring") {
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    const R a = random_element(rng, 5), b = random_element(rng, 5);
    auto to_c = [](const R& r) {
      std::vector<C::Term> raw;
      for (const auto& [m, c] : r.terms())
        raw.emplace_back(m, cplx(boost::rational_cast<double>(c)));
      return C::from_terms(raw, r.generators());
    };
    CHECK(max_abs_diff(to_c(a) * to_c(b), to_c(a * b)) == 0.0);
  }
}
