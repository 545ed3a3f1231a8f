#pragma once

#include "sb/report.hpp"
#include "sb/sfunc.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sb {

// Random even (p|q) supermatrices over `gens` odd generators: bodies are
// body_shift * I + random, odd entries random linear forms, even souls random
// quadratic forms.
struct RandomSuper {
  std::mt19937_64 rng;
  int gens = 4;

  explicit RandomSuper(std::uint64_t seed, int gens = 4) : rng(seed), gens(gens) {}

  SuperMatrix<cplx> even_matrix(int p, int q, double body_shift, double scale);
  SuperMatrix<Rational> even_matrix_exact(int p, int q, long long body_shift);
  MobiusElement<cplx> mobius_element(int p, int q, double scale);
  EvenGroupElement even_group_element(int p, int q, double max_phase);
  double uniform(double lo, double hi);
};

struct PropertyOptions {
  int instances = 120;
  std::uint64_t seed = 7;
  double tolerance = 1e-10;
};

// Ber multiplicativity, str cyclicity (float and exact), Mobius composition and
// the character identity chi(k(g1 g2, Z)) = chi(k(g1, g2.Z)) chi(k(g2, Z)).
std::vector<VerificationReport> algebraic_properties(const PropertyOptions& opt = {});

struct InvarianceOptions {
  int samples = 20;
  std::uint64_t seed = 11;
  double tolerance = 1e-6;
  double max_phase = 0.3;
};

// int_Omega |Dy| f(D^-1 y A) = int_Omega |Dy| f(y) for A positive definite, D unitary.
VerificationReport dy_invariance(int p, int q, const MultiIndex& m, const InvarianceOptions& opt = {});

// int |Dv| f(D^-1 Q(v) A) = chi_{2 lambda}(A, D) int |Dv| f(Q(v)).
VerificationReport dv_relative_invariance(int p, int q, int n, const MultiIndex& m, const InvarianceOptions& opt = {});

}  // namespace sb
