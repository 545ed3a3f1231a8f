#include "sb/osc.hpp"

#include <doctest.h>

#include <bit>
#include <set>

using namespace sb;

namespace {

// Set of total degrees over the terms of f.
std::set<int> degrees(const SuperPolynomial& f) {
  std::set<int> out;
  for (const auto& [mask, poly] : f.terms())
    for (const auto& [key, c] : poly.terms()) out.insert(std::popcount(mask) + Poly<Rational>::degree(key));
  return out;
}

SuperPolynomial constant(Rational c, const OscLayout& lay) { return SuperPolynomial(Poly<Rational>(c), lay.odd_gens()); }

}  // namespace

TEST_CASE("cartan operators on the constant") {
  for (auto [p, q, n] : {std::tuple{1, 0, 1}, std::tuple{1, 1, 2}, std::tuple{0, 1, 1}, std::tuple{2, 1, 1}}) {
    const OscLayout lay{p, q, n};
    const SuperPolynomial c = one(lay);
    for (int a = 0; a < p + q; ++a) {
      const Rational s(a < p ? 1 : -1);
      CHECK(apply(build_operator({Block::A, a, a}, lay), c, lay) == constant(Rational(-n, 2) * s, lay));
      CHECK(apply(build_operator({Block::D, a, a}, lay), c, lay) == constant(Rational(n, 2) * s, lay));
    }
  }
}

TEST_CASE("degree grading of the four blocks") {
  const OscLayout lay{1, 1, 2};
  const SuperPolynomial c = one(lay);
  CHECK(apply(build_operator({Block::B, 0, 0}, lay), c, lay).is_zero());
  const SuperPolynomial raised = apply(build_operator({Block::C, 0, 0}, lay), c, lay);
  CHECK(degrees(raised) == std::set<int>{2});
  for (const auto& f : monomial_basis(lay, 2)) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const SuperPolynomial a = apply(build_operator({Block::A, i, j}, lay), f, lay);
        const SuperPolynomial b = apply(build_operator({Block::B, i, j}, lay), f, lay);
        const SuperPolynomial cc = apply(build_operator({Block::C, i, j}, lay), f, lay);
        const SuperPolynomial d = apply(build_operator({Block::D, i, j}, lay), f, lay);
        if (!a.is_zero()) CHECK(degrees(a) == std::set<int>{2});
        if (!b.is_zero()) CHECK(degrees(b) == std::set<int>{0});
        if (!cc.is_zero()) CHECK(degrees(cc) == std::set<int>{4});
        if (!d.is_zero()) CHECK(degrees(d) == std::set<int>{2});
      }
  }
}

TEST_CASE("every lowering operator kills the constant") {
  const OscLayout lay{2, 1, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(apply(build_operator({Block::B, i, j}, lay), one(lay), lay).is_zero());
}

TEST_CASE("operator parity") {
  const OscLayout lay{1, 1, 1};
  CHECK(build_operator({Block::A, 0, 0}, lay).parity == 0);
  CHECK(build_operator({Block::A, 0, 1}, lay).parity == 1);
  CHECK(build_operator({Block::C, 1, 1}, lay).parity == 0);
  CHECK(build_operator({Block::B, 1, 0}, lay).parity == 1);
}

TEST_CASE("commutator relations") {
  for (auto [p, q, n, d] : {std::tuple{1, 0, 1, 2}, std::tuple{0, 1, 1, 2}, std::tuple{1, 1, 1, 2}}) {
    const CommutatorReport r = commutator_check(p, q, n, d);
    CHECK(r.pass());
    CHECK(r.pairs_checked == static_cast<long>(std::pow(2 * (p + q), 4)));
    CHECK(r.vectors_checked > 0);
  }
  const CommutatorReport c = commutator_check(1, 1, 2, 2);
  CHECK(c.centralizer_failures == 0);
  CHECK(c.centralizer_checked > 0);
}

TEST_CASE("a wrong operator is caught") {
  // Sanity check of the oracle itself: doubling one operator breaks [E^A_11, E^C_11].
  const OscLayout lay{1, 0, 1};
  QuadOperator x = build_operator({Block::A, 0, 0}, lay), y = build_operator({Block::C, 0, 0}, lay);
  QuadOperator y2 = y;
  for (auto& t : y2.terms) t.coeff *= 2;
  const SuperPolynomial f = monomial_basis(lay, 1).front();
  auto bracket = [&](const QuadOperator& a, const QuadOperator& b) {
    return apply(a, apply(b, f, lay), lay) - apply(b, apply(a, f, lay), lay);
  };
  // [E^A_11, E^C_11] = -E^C_11
  CHECK(bracket(x, y) == -apply(y, f, lay));
  CHECK_FALSE(bracket(x, y2) == -apply(y, f, lay));
}

TEST_CASE("highest weight") {
  CHECK(highest_weight(1, 0, 1) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK(highest_weight(0, 1, 1) == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  CHECK(highest_weight(1, 1, 2) ==
        std::vector<Rational>{Rational(-1), Rational(1), Rational(1), Rational(-1)});
}

TEST_CASE("gl(n) invariants") {
  const InvariantSpace s = invariants_up_to_degree(1, 1, 1, 2);
  REQUIRE(s.dims.size() == 3);
  CHECK(s.dims[0] == 1);
  CHECK(s.dims[1] == 0);
  CHECK(s.dims[2] == 4);
  const OscLayout lay{1, 1, 1};
  for (const auto& f : s.basis[2]) CHECK(apply(gl_n_operator(0, 0, lay), f, lay).is_zero());
  CHECK(invariants_up_to_degree(2, 0, 2, 2).dims[2] == 4);
  CHECK(invariants_up_to_degree(0, 1, 2, 1).dims[1] == 0);
}

TEST_CASE("guardrails") {
  CHECK_THROWS_AS(check_osc_guardrails(3, 0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_osc_guardrails(1, 1, 1, 5), std::invalid_argument);
  CHECK_NOTHROW(check_osc_guardrails(2, 2, 2, 4));
}
