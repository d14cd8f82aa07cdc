#pragma once

// Independent checks used to validate library results in tests.

#include <cmath>
#include <complex>
#include <vector>

#include "sysrep/integer.hpp"
#include "sysrep/polynomial.hpp"

namespace sysrep::testing {

/// Irreducibility over F_q by gcd(g, x^(q^i) - x) = 1 for 1 <= i <= deg/2.
inline bool finite_irreducible_oracle(const Polynomial& g) {
  const int d = g.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Field& f = g.field();
  const Polynomial x = Polynomial::x(f);
  Polynomial frob = x;
  for (int i = 1; i <= d / 2; ++i) {
    frob = pow_mod(frob, f.order(), g);
    if (!gcd(g, frob - x).is_one()) return false;
  }
  return true;
}

/// Irreducibility over Q from numerical roots: g has a factor of degree k
/// exactly when some k roots r_i make lc(g) * prod (x - r_i) integral.
/// Intended for small degree and small integer coefficients.
inline bool rational_irreducible_oracle(const Polynomial& g) {
  using cplx = std::complex<long double>;
  const int d = g.degree();
  if (d < 1) return false;
  if (d == 1) return true;

  // Scale to integer coefficients.
  mpz_class den = 1;
  for (const auto& c : g.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<long double> coeff;
  for (const auto& c : g.coefficients()) {
    mpq_class scaled = c.rational() * den;
    coeff.push_back(static_cast<long double>(scaled.get_d()));
  }
  const long double lc = coeff.back();

  // Durand-Kerner on the monic polynomial.
  std::vector<cplx> roots(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = std::pow(cplx(0.4L, 0.9L), i);
  auto eval = [&](cplx z) {
    cplx acc = 0;
    for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * z + coeff[i] / lc;
    return acc;
  };
  for (int iter = 0; iter < 5000; ++iter) {
    long double delta = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      cplx denom = 1;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j != i) denom *= roots[i] - roots[j];
      }
      const cplx step = eval(roots[i]) / denom;
      roots[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-16L) break;
  }

  for (int k = 1; k <= d / 2; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<cplx> prod = {cplx(lc)};
      for (int idx : pick) {
        std::vector<cplx> next(prod.size() + 1, 0);
        for (std::size_t i = 0; i < prod.size(); ++i) {
          next[i + 1] += prod[i];
          next[i] -= prod[i] * roots[static_cast<std::size_t>(idx)];
        }
        prod = std::move(next);
      }
      bool integral = true;
      for (const auto& c : prod) {
        if (std::abs(c.imag()) > 1e-6L || std::abs(c.real() - std::round(c.real())) > 1e-6L) {
          integral = false;
          break;
        }
      }
      if (integral) return false;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == d - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return true;
}

inline bool irreducible_oracle(const Polynomial& g) {
  return g.field().is_finite() ? finite_irreducible_oracle(g) : rational_irreducible_oracle(g);
}

}  // namespace sysrep::testing
