#pragma once

// A linear system x_{t+1} = A x_t viewed as a representation of its time
// group on k^n: rho(t) = A^t for t in Z, N or Z/TZ.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "sysrep/matrix.hpp"

namespace sysrep {

struct TimeGroup {
  enum class Kind { Integers, Naturals, Cyclic };

  Kind kind = Kind::Integers;
  std::uint64_t period = 0;  // T, cyclic groups only

  static TimeGroup integers() { return {Kind::Integers, 0}; }
  static TimeGroup naturals() { return {Kind::Naturals, 0}; }
  static TimeGroup cyclic(std::uint64_t T);

  bool invertible() const { return kind != Kind::Naturals; }
  std::string name() const;

  friend bool operator==(const TimeGroup&, const TimeGroup&) = default;
};

class Representation {
 public:
  /// Validates the generator against the group: square, n <= 64, invertible
  /// for Z and Z/TZ, and A^T = I for Z/TZ.
  Representation(TimeGroup group, Matrix generator);

  const TimeGroup& group() const noexcept { return group_; }
  const Field& field() const noexcept { return generator_.field(); }
  std::size_t dim() const noexcept { return generator_.rows(); }
  const Matrix& generator() const noexcept { return generator_; }

  /// A^t; t is reduced mod T for cyclic groups.
  Matrix rho(std::int64_t t) const;
  Vector evolve(const Vector& x0, std::int64_t t) const;
  /// f(A) v.
  Vector poly_action(const Polynomial& f, const Vector& v) const;
  /// Action of the class of f in k[x]/(x^T - 1); cyclic groups only.
  Vector module_action(const Polynomial& f, const Vector& v) const;

 private:
  TimeGroup group_;
  Matrix generator_;
  std::optional<Matrix> inverse_;
};

struct HomomorphismReport {
  bool passed = true;
  std::size_t trials = 0;
  bool identity_ok = true;
  /// First (t1, t2) with rho(t1 + t2) != rho(t1) rho(t2).
  std::optional<std::pair<std::int64_t, std::int64_t>> counterexample;
};

inline constexpr std::int64_t kHomomorphismRange = 1 << 16;

using RhoFunction = std::function<Matrix(std::int64_t)>;

/// Samples (t1, t2) with |t| <= 2^16 (t >= 0 for semigroups) and checks the
/// composition law together with rho(0) = I.
HomomorphismReport check_homomorphism(const RhoFunction& rho, std::size_t dim, const Field& field, bool semigroup,
                                      std::size_t trials, std::uint64_t seed);
HomomorphismReport check_homomorphism(const Representation& rep, std::size_t trials = 256, std::uint64_t seed = 0);

/// The Z/TZ representation with minimal T through which rho factors.
/// Throws InfiniteOrder when A has infinite order (only possible over Q).
Representation induce_quotient(const Representation& rep, std::uint64_t seed = 0);

/// Reads an x-action on k^n as a Z/TZ system; throws NotPeriodic unless action^T = I.
Representation from_module_action(const Field& field, std::uint64_t T, const Matrix& action);

/// f reduced modulo x^T - 1 by folding exponents.
Polynomial reduce_mod_x_pow_minus_one(const Polynomial& f, std::uint64_t T);

}  // namespace sysrep
