#pragma once

// Periods and orbit censuses of invertible linear maps over finite fields.
//
// Every orbit of an invertible A on F_q^n is a cycle whose length divides the
// order T of A. The census is computed analytically from ranks of A^d - I for
// d | T with Moebius inversion, and independently by enumerating the state
// space. No split of the census along the prime-power factors of T is
// offered: the factorization of Z/TZ does not decompose the dynamics, since
// the single generator A still drives every component at once.

#include <cstdint>
#include <map>

#include <gmpxx.h>

#include "sysrep/representation.hpp"

namespace sysrep {

/// Least T >= 1 with A^T = I. Finite fields use the invariant factors and the
/// order of x modulo each; over Q the minimal polynomial must be a squarefree
/// product of cyclotomic factors, otherwise InfiniteOrder is thrown.
std::uint64_t order_of_matrix(const Matrix& a, std::uint64_t seed = 0);

/// Least t >= 1 with A^t x0 = x0 (1 for the origin).
std::uint64_t point_period(const Representation& rep, const Vector& x0, std::uint64_t seed = 0);

struct OrbitCensus {
  mpz_class states;                             // q^n
  std::uint64_t period = 1;                     // T
  std::map<std::uint64_t, mpz_class> cycles;    // exact length -> number of orbits
  std::map<std::uint64_t, mpz_class> fixed_points;  // d | T -> |ker(A^d - I)|

  friend bool operator==(const OrbitCensus&, const OrbitCensus&) = default;
};

OrbitCensus orbit_census_analytic(const Matrix& a, std::uint64_t seed = 0);

inline constexpr std::uint64_t kDefaultMaxStates = 1'000'000;
inline constexpr std::uint64_t kHardMaxStates = 10'000'000;

struct EnumerationOptions {
  std::uint64_t max_states = kDefaultMaxStates;
  unsigned workers = 1;
};

/// Walks every orbit of F_q^n. Orbits are counted by their least state in
/// odometer order, so any worker count gives the same census.
OrbitCensus orbit_census_enumerate(const Matrix& a, const EnumerationOptions& options = {});

/// q^n, or std::nullopt beyond 64 bits.
std::optional<std::uint64_t> state_count(const Matrix& a);

}  // namespace sysrep
