#pragma once

// 64-bit number theory used by period and census computations.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sysrep {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
/// Trial division by small primes, Pollard rho (Brent) for the rest.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Moebius function.
int moebius(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// lcm(a, b), or std::nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
/// base^e, or std::nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned e);

}  // namespace sysrep
