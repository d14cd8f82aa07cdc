#pragma once

// Invariant subspaces of a single operator: the primary decomposition
// V = ker p_1(A)^{e_1} + ... + ker p_r(A)^{e_r} with its projectors,
// generalized eigenspaces (over a splitting field when needed) and planar
// blocks for irreducible quadratic factors.

#include <optional>
#include <variant>
#include <vector>

#include "sysrep/matrix.hpp"

namespace sysrep {

struct PrimaryComponent {
  Polynomial factor;  // irreducible, monic
  std::size_t multiplicity = 1;
  std::vector<Vector> basis;  // kernel basis of factor(A)^multiplicity
  Matrix projector;
};

/// Components sorted by factor. The projector onto component i is h_i(A)
/// with h_i = u_i * m / p_i^{e_i}, where u_i inverts m / p_i^{e_i} modulo
/// p_i^{e_i}; the h_i sum to 1 modulo m.
std::vector<PrimaryComponent> primary_decomposition(const Matrix& a, std::uint64_t seed = 0);

struct Eigenspace {
  Element eigenvalue;
  std::size_t multiplicity = 1;  // exponent of x - eigenvalue in m_A
  std::vector<Vector> basis;
};

/// The non-linear irreducible factors of m_A when it does not split.
struct NotSplit {
  std::vector<Polynomial> factors;
};

using EigenspaceResult = std::variant<std::vector<Eigenspace>, NotSplit>;

EigenspaceResult generalized_eigenspaces(const Matrix& a, std::uint64_t seed = 0);

/// The least monic irreducible polynomial of the given degree over F_p,
/// in the order of Polynomial::compare.
Polynomial least_irreducible(const Field& prime_field, int degree, std::uint64_t seed = 0);

struct SplittingLift {
  Field field;
  Matrix matrix;
  std::size_t degree = 1;  // [field : F_p]
};

/// F_{p^m} with m the lcm of the degrees of the irreducible factors of m_A,
/// and A embedded entrywise. Throws ExtensionTooLarge when p^m >= 2^31.
SplittingLift splitting_field_lift(const Matrix& a, std::uint64_t seed = 0);

/// Image of an F_p element or matrix in an extension of F_p.
Element embed(const Element& x, const Field& extension);
Matrix embed(const Matrix& a, const Field& extension);
Vector embed(const Vector& v, const Field& extension);

enum class BlockForm { Rotation, Companion };

/// A 2-dimensional invariant subspace for an irreducible quadratic factor
/// x^2 - c1 x + c0 of m_A. In rotation form A u = a u - b w and
/// A w = b u + a w. When c0 - a^2 has no square root the basis is (v, Av)
/// and b is absent.
struct PlanarBlock {
  Polynomial factor;
  Element a;
  std::optional<Element> b;
  Vector u;
  Vector w;
  BlockForm form = BlockForm::Rotation;

  /// Matrix of A on (u, w).
  Matrix restriction() const;
};

/// One block per irreducible quadratic factor of multiplicity 1. Throws
/// CharacteristicTwo, since a = c1 / 2 is undefined there.
std::vector<PlanarBlock> planar_blocks(const Matrix& a, std::uint64_t seed = 0);

}  // namespace sysrep
