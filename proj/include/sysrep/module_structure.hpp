#pragma once

// The state space as a k[x]-module with x acting by A: annihilators of
// states, the cyclic decomposition V = k[x]/(f_1) + ... + k[x]/(f_r) with
// f_1 | ... | f_r, and the rational canonical form.

#include <vector>

#include "sysrep/representation.hpp"

namespace sysrep {

/// Monic generator of {f : f(A) v = 0}; 1 for the zero vector.
Polynomial annihilator(const Representation& rep, const Vector& v);
Polynomial annihilator(const Matrix& a, const Vector& v);

struct InvariantFactorDecomposition {
  std::vector<Polynomial> factors;  // f_1 | ... | f_r, each of degree >= 1
  std::vector<Vector> generators;   // annihilator(generators[i]) == factors[i]
  Matrix basis_change;              // P: Krylov bases of the generators, in order
  Matrix canonical_form;            // C = diag(companion(f_1), ..., companion(f_r))
};

/// Generators are found from the largest factor down. For f_j, a vector u is
/// accepted once its conductor into the span W of the generators already
/// chosen has degree deg f_j; writing f_j(A) u = sum h_i(A) v_i, each h_i is
/// divisible by f_j and u - sum (h_i / f_j)(A) v_i generates a cyclic
/// summand complementary to W. Candidates are e_1, ..., e_n, then the
/// prefix sums e_1 + ... + e_k, then seeded random vectors.
/// A P = P C is checked exactly before returning.
InvariantFactorDecomposition invariant_factors(const Matrix& a, std::uint64_t seed = 0);

struct DivisibilityEntry {
  Polynomial factor;
  std::uint64_t order = 0;  // order of x modulo the factor
  bool divides = false;     // factor | x^T - 1
};

struct DivisibilityReport {
  std::uint64_t period = 0;
  std::vector<DivisibilityEntry> entries;
  std::uint64_t order_lcm = 1;
  bool passed = false;  // every factor divides and order_lcm == period
};

/// Checks f_i | x^T - 1 for every invariant factor (finite fields only).
DivisibilityReport verify_period_divisibility(const InvariantFactorDecomposition& dec, std::uint64_t T,
                                              std::uint64_t seed = 0);

}  // namespace sysrep
