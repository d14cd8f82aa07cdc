#pragma once

// Dense univariate polynomials over an exact field, with gcd/Bezout,
// squarefree decomposition, irreducible factorization and the multiplicative
// order of x modulo a polynomial.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "sysrep/field.hpp"

namespace sysrep {

class Polynomial {
 public:
  Polynomial() = default;
  /// The zero polynomial over `field`.
  explicit Polynomial(Field field) : field_(field) {}
  /// Coefficients low-degree-first; trailing zeros are trimmed.
  Polynomial(Field field, std::vector<Element> coeffs);

  static Polynomial constant(const Element& c);
  static Polynomial monomial(const Element& c, std::size_t degree);
  static Polynomial x(Field field) { return monomial(field.one(), 1); }
  /// Integer coefficients mapped into `field`, low-degree-first.
  static Polynomial from_ints(Field field, std::initializer_list<std::int64_t> coeffs);
  static Polynomial from_ints(Field field, const std::vector<std::int64_t>& coeffs);

  const Field& field() const noexcept { return field_; }
  /// Degree, with -1 standing in for the degree of the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
  Element coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  Element leading() const;

  Element operator()(const Element& at) const;

  Polynomial monic() const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Element& c, const Polynomial& a);
  /// Quotient and remainder of Euclidean division.
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Order by degree, then lexicographically on the low-degree-first
  /// coefficient list using Element::compare.
  int compare(const Polynomial& other) const;
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.compare(b) < 0; }

  /// Human-readable, e.g. "x^2 + 2*x + 1"; extension coefficients print as lists.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();

  Field field_;
  std::vector<Element> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// f = q*g + r with deg r < deg g. Throws DivisionByZero for g = 0.
DivMod divmod(const Polynomial& f, const Polynomial& g);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
/// Monic lcm.
Polynomial lcm(const Polynomial& f, const Polynomial& g);

struct Bezout {
  Polynomial gcd;  // monic
  Polynomial u;
  Polynomial v;  // u*f + v*g = gcd
};

/// Extended Euclid with minimal-degree cofactors:
/// deg u < deg g - deg d and deg v < deg f - deg d.
Bezout extended_gcd(const Polynomial& f, const Polynomial& g);

Polynomial pow(const Polynomial& base, std::uint64_t e);
Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);
Polynomial pow_mod(const Polynomial& base, const mpz_class& e, const Polynomial& modulus);

/// x^T - 1 over `field`.
Polynomial x_pow_minus_one(Field field, std::uint64_t T);

struct Factor {
  Polynomial factor;
  std::size_t multiplicity = 1;
};

struct Factorization {
  Element unit;
  std::vector<Factor> factors;  // monic, irreducible, sorted by Polynomial::compare

  /// unit * prod factor^multiplicity.
  Polynomial expand() const;
};

/// Squarefree parts of monic(f), sorted by (multiplicity, polynomial order).
std::vector<Factor> squarefree_decomposition(const Polynomial& f);

/// Complete factorization into monic irreducibles. Over finite fields the
/// equal-degree split is randomized from `seed`; over Q the degree must be
/// at most kMaxRationalFactorDegree.
Factorization factor(const Polynomial& f, std::uint64_t seed = 0);

inline constexpr int kMaxRationalFactorDegree = 16;

bool is_irreducible(const Polynomial& f, std::uint64_t seed = 0);

/// Least T >= 1 with x^T = 1 (mod f) over a finite field.
std::uint64_t order_of_x_mod(const Polynomial& f, std::uint64_t seed = 0);

namespace detail {
/// Squarefree factorization over Q (implemented in rational_factor.cpp).
Factorization factor_rational(const Polynomial& f, std::uint64_t seed);
/// Distinct/equal-degree factorization of a monic squarefree polynomial over F_q.
std::vector<Polynomial> factor_squarefree_finite(const Polynomial& f, std::uint64_t seed);
}  // namespace detail

}  // namespace sysrep
