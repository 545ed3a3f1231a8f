#pragma once

#include "sb/galg.hpp"
#include "sb/poly.hpp"

#include <string>
#include <vector>

namespace sb {

// Superpolynomials on V: even coordinates are Poly variables, odd coordinates
// are Grassmann generators, coefficients exact.
using SuperPolynomial = SElement<Poly<Rational>>;

struct OscVar {
  bool odd = false;
  int index = 0;  // Poly variable (even) or generator (odd)
};

// Coordinates u_{a alpha} (a < p+q, alpha < n) and v_{alpha a}; parity |a| = [a >= p].
struct OscLayout {
  int p = 0, q = 0, n = 1;

  OscVar u(int a, int alpha) const;
  OscVar v(int alpha, int a) const;
  int even_vars() const { return 2 * n * p; }
  int odd_gens() const { return 2 * n * q; }
  int parity(int a) const { return a >= p ? 1 : 0; }
};

// Index of gl(2p|2q): side 0 is the x-block (rows of E^A, E^B), side 1 the y-block.
struct GIndex {
  int side = 0;
  int a = 0;
};

enum class Block { A, B, C, D };

struct BasisLabel {
  Block block = Block::A;
  int i = 0, j = 0;
  std::string name() const;
};

// coeff * mult[0] * mult[1] * ... * deriv[0] * deriv[1] * ... (normal order).
struct OpTerm {
  Rational coeff{1};
  std::vector<OscVar> mult;
  std::vector<OscVar> deriv;
};

struct QuadOperator {
  std::vector<OpTerm> terms;
  Rational constant{0};
  int parity = 0;
  int degree_shift = 0;
};

QuadOperator build_operator(GIndex row, GIndex col, const OscLayout& lay);
QuadOperator build_operator(const BasisLabel& label, const OscLayout& lay);
// K_{gamma delta} = sum_a (u_{a gamma} d/du_{a delta} - v_{delta a} d/dv_{gamma a}).
QuadOperator gl_n_operator(int gamma, int delta, const OscLayout& lay);

SuperPolynomial apply(const QuadOperator& op, const SuperPolynomial& f, const OscLayout& lay);
SuperPolynomial one(const OscLayout& lay);

// Total-degree monomials (even exponents and odd generators) of degree exactly d.
std::vector<SuperPolynomial> monomial_basis(const OscLayout& lay, int d);

struct CommutatorReport {
  long pairs_checked = 0;
  long vectors_checked = 0;
  long failures = 0;
  long centralizer_checked = 0;
  long centralizer_failures = 0;
  std::vector<std::string> failure_samples;
  bool pass() const { return failures == 0 && centralizer_failures == 0; }
};

// [T_X, T_Y] = T_[X,Y] for all basis pairs of gl(2p|2q) and [T_X, K] = 0 for the
// gl(n) operators, on every monomial of degree <= degree_cap.
CommutatorReport commutator_check(int p, int q, int n, int degree_cap);

// Weight over delta_1..delta_2p, eps_1..eps_2q read off from the Cartan operators
// applied to the constant 1.
std::vector<Rational> highest_weight(int p, int q, int n);

struct InvariantSpace {
  std::vector<int> dims;  // per degree 0..d
  std::vector<std::vector<SuperPolynomial>> basis;
};

InvariantSpace invariants_up_to_degree(int p, int q, int n, int d);

void check_osc_guardrails(int p, int q, int n, int d);

}  // namespace sb
