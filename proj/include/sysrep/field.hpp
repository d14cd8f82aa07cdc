#pragma once

// Exact scalar fields: prime fields F_p, extension fields F_p[y]/(g(y)) and
// the rationals. Field descriptors are interned, so a Field is a cheap handle
// and two handles compare equal exactly when they describe the same field.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "sysrep/error.hpp"

namespace sysrep {

enum class FieldKind { Prime, Extension, Rational };

namespace detail {
struct FieldData;
}

class Element;

class Field {
 public:
  Field() = default;

  /// F_p for a prime p < 2^31. Primality is checked by trial division.
  static Field prime(std::uint32_t p);
  /// F_p[y]/(g) where `modulus` lists the coefficients of g low-degree-first.
  /// g must be monic and irreducible over F_p.
  static Field extension(std::uint32_t p, const std::vector<std::uint32_t>& modulus);
  static Field rational();

  bool valid() const noexcept { return data_ != nullptr; }
  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::Rational; }
  /// p for finite fields, 0 for Q.
  std::uint32_t characteristic() const;
  /// Extension degree m over the prime field (1 for F_p and Q).
  std::size_t degree() const;
  /// Number of elements q = p^m; 0 for Q.
  std::uint64_t order() const;
  /// Coefficients of the defining polynomial, low-degree-first (extension only).
  const std::vector<std::uint32_t>& modulus() const;
  /// The prime subfield F_p of a finite field.
  Field prime_subfield() const;

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t value) const;
  Element from_mpz(const mpz_class& value) const;
  /// Q only; canonicalizes the fraction.
  Element from_rational(const mpq_class& value) const;
  /// Extension only; coefficients low-degree-first, reduced mod p, length <= m.
  Element from_coefficients(std::span<const std::uint32_t> coeffs) const;

  /// Canonical enumeration of a finite field: index sum c_i p^i, c_0 fastest.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& e) const;

  /// Uniform over a finite field; small fractions (|num| <= 9, den <= 4) over Q.
  Element random(std::mt19937_64& rng) const;

  /// Human-readable name, e.g. "F_5", "F_2[y]/(y^2+y+1)", "Q".
  std::string name() const;

  const detail::FieldData* data() const noexcept { return data_; }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_ = nullptr;
};

/// An exact field element. Immutable value type.
class Element {
 public:
  Element() = default;

  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p) for prime-field elements.
  std::uint32_t residue() const;
  /// Coefficient vector of length m, low-degree-first (finite fields).
  std::vector<std::uint32_t> coefficients() const;
  const mpq_class& rational() const;
  /// Packed representation for finite fields (equals Field::index_of).
  std::uint32_t packed() const;

  Element operator-() const;
  Element inverse() const;
  Element pow(std::uint64_t e) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }
  Element& operator/=(const Element& b) { return *this = *this / b; }

  friend bool operator==(const Element& a, const Element& b);

  /// Total order used for deterministic output: residues for F_p,
  /// lexicographic on the low-degree-first coefficient list for extensions,
  /// numeric value for Q.
  int compare(const Element& other) const;

  /// Canonical text: "3" for F_p, "[1,0,2]" for extensions, "7/2" or "-3" for Q.
  std::string to_string() const;

 private:
  friend class Field;
  Element(Field f, std::uint32_t v) : field_(f), value_(v) {}
  Element(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

/// Square root in the element's field, choosing the representative with the
/// smaller canonical encoding. std::nullopt when none exists in the field.
std::optional<Element> sqrt(const Element& a);

/// Trial-division primality test for 32-bit values.
bool is_prime_u32(std::uint32_t n);

}  // namespace sysrep
