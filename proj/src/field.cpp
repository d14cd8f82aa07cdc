#include "sysrep/field.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "sysrep/polynomial.hpp"

namespace sysrep {

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::Rational;
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, size m + 1 (extension only)
  std::vector<std::uint64_t> p_pow;    // p^i for i < m
};

}  // namespace detail

namespace {

using detail::FieldData;

constexpr std::size_t kMaxDegree = 31;
using Digits = std::array<std::uint32_t, kMaxDegree>;

struct Registry {
  std::mutex mutex;
  std::map<std::tuple<int, std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldData>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

const FieldData* intern(FieldData data) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto key = std::make_tuple(static_cast<int>(data.kind), data.p, data.modulus);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return it->second.get();
  auto owned = std::make_unique<FieldData>(std::move(data));
  const FieldData* ptr = owned.get();
  reg.fields.emplace(std::move(key), std::move(owned));
  return ptr;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - quotient * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - quotient * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void decode(const FieldData& f, std::uint32_t v, Digits& out) {
  for (std::uint32_t i = 0; i < f.m; ++i) {
    out[i] = v % f.p;
    v /= f.p;
  }
}

std::uint32_t encode(const FieldData& f, const std::uint32_t* digits) {
  std::uint64_t v = 0;
  for (std::uint32_t i = f.m; i-- > 0;) v = v * f.p + digits[i];
  return static_cast<std::uint32_t>(v);
}

std::uint32_t ext_add(const FieldData& f, std::uint32_t a, std::uint32_t b, bool subtract) {
  Digits da{}, db{};
  decode(f, a, da);
  decode(f, b, db);
  for (std::uint32_t i = 0; i < f.m; ++i) {
    da[i] = subtract ? (da[i] + f.p - db[i]) % f.p : (da[i] + db[i]) % f.p;
  }
  return encode(f, da.data());
}

std::uint32_t ext_mul(const FieldData& f, std::uint32_t a, std::uint32_t b) {
  Digits da{}, db{};
  decode(f, a, da);
  decode(f, b, db);
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (std::uint32_t i = 0; i < f.m; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < f.m; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % f.p;
    }
  }
  // Reduce by the monic modulus from the top.
  for (std::uint32_t k = 2 * f.m - 1; k-- > f.m;) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < f.m; ++i) {
      std::uint64_t sub = c * f.modulus[i] % f.p;
      prod[k - f.m + i] = (prod[k - f.m + i] + f.p - sub) % f.p;
    }
  }
  Digits out{};
  for (std::uint32_t i = 0; i < f.m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return encode(f, out.data());
}

std::uint32_t ext_neg(const FieldData& f, std::uint32_t a) {
  Digits da{};
  decode(f, a, da);
  for (std::uint32_t i = 0; i < f.m; ++i) da[i] = (f.p - da[i]) % f.p;
  return encode(f, da.data());
}

std::uint32_t ext_pow(const FieldData& f, std::uint32_t a, std::uint64_t e) {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1U) result = ext_mul(f, result, a);
    a = ext_mul(f, a, a);
    e >>= 1U;
  }
  return result;
}

void require_same(const Element& a, const Element& b) {
  if (!a.field().valid() || !(a.field() == b.field())) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
  }
}

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime_u32(p)) {
    throw Error(ErrorCode::InvalidField, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  FieldData data;
  data.kind = FieldKind::Prime;
  data.p = p;
  data.m = 1;
  data.q = p;
  data.p_pow = {1};
  return Field(intern(std::move(data)));
}

Field Field::extension(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  Field base = prime(p);
  if (modulus.size() < 2) throw Error(ErrorCode::InvalidField, "extension modulus must have degree >= 1");
  if (modulus.back() % p != 1) throw Error(ErrorCode::InvalidField, "extension modulus must be monic");
  const std::size_t m = modulus.size() - 1;
  if (m > kMaxDegree) throw Error(ErrorCode::ExtensionTooLarge, "extension degree exceeds 31");
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < m; ++i) {
    q *= p;
    if (q >= (1ULL << 31)) throw Error(ErrorCode::ExtensionTooLarge, "field size p^m must stay below 2^31");
  }
  std::vector<std::uint32_t> reduced(modulus.size());
  for (std::size_t i = 0; i < modulus.size(); ++i) reduced[i] = modulus[i] % p;

  std::vector<Element> coeffs;
  coeffs.reserve(reduced.size());
  for (auto c : reduced) coeffs.push_back(base.from_int(c));
  if (!is_irreducible(Polynomial(base, std::move(coeffs)))) {
    throw Error(ErrorCode::InvalidField, "extension modulus is not irreducible over F_" + std::to_string(p));
  }

  FieldData data;
  data.kind = FieldKind::Extension;
  data.p = p;
  data.m = static_cast<std::uint32_t>(m);
  data.q = q;
  data.modulus = std::move(reduced);
  std::uint64_t pw = 1;
  for (std::size_t i = 0; i < m; ++i) {
    data.p_pow.push_back(pw);
    pw *= p;
  }
  return Field(intern(std::move(data)));
}

Field Field::rational() {
  FieldData data;
  data.kind = FieldKind::Rational;
  return Field(intern(std::move(data)));
}

FieldKind Field::kind() const { return data_->kind; }
std::uint32_t Field::characteristic() const { return data_->p; }
std::size_t Field::degree() const { return data_->m; }
std::uint64_t Field::order() const { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }

Field Field::prime_subfield() const {
  if (!is_finite()) throw Error(ErrorCode::RationalFieldUnsupported, "Q has no finite prime subfield");
  return prime(data_->p);
}

Element Field::zero() const {
  if (data_->kind == FieldKind::Rational) return Element(*this, mpq_class(0));
  return Element(*this, 0U);
}

Element Field::one() const {
  if (data_->kind == FieldKind::Rational) return Element(*this, mpq_class(1));
  return Element(*this, 1U);
}

Element Field::from_int(std::int64_t value) const {
  if (data_->kind == FieldKind::Rational) return Element(*this, mpq_class(mpz_class(std::to_string(value))));
  std::int64_t r = value % static_cast<std::int64_t>(data_->p);
  if (r < 0) r += data_->p;
  return Element(*this, static_cast<std::uint32_t>(r));
}

Element Field::from_mpz(const mpz_class& value) const {
  if (data_->kind == FieldKind::Rational) return Element(*this, mpq_class(value));
  mpz_class r = value % data_->p;
  if (r < 0) r += data_->p;
  return Element(*this, static_cast<std::uint32_t>(r.get_ui()));
}

Element Field::from_rational(const mpq_class& value) const {
  if (data_->kind != FieldKind::Rational) {
    Element num = from_mpz(value.get_num());
    Element den = from_mpz(value.get_den());
    return num / den;
  }
  mpq_class q = value;
  q.canonicalize();
  return Element(*this, std::move(q));
}

Element Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (data_->kind == FieldKind::Rational) throw Error(ErrorCode::FieldMismatch, "coefficient vectors need a finite field");
  if (coeffs.size() > data_->m) {
    throw Error(ErrorCode::ParseError, "extension element has more than " + std::to_string(data_->m) + " coefficients");
  }
  Digits d{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % data_->p;
  return Element(*this, encode(*data_, d.data()));
}

Element Field::element_at(std::uint64_t index) const {
  if (!is_finite() || index >= data_->q) throw Error(ErrorCode::Internal, "element index out of range");
  return Element(*this, static_cast<std::uint32_t>(index));
}

std::uint64_t Field::index_of(const Element& e) const {
  if (!(e.field() == *this)) throw Error(ErrorCode::FieldMismatch, "element from another field");
  return e.packed();
}

Element Field::random(std::mt19937_64& rng) const {
  if (data_->kind == FieldKind::Rational) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return from_rational(mpq_class(num(rng), den(rng)));
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, data_->q - 1);
  return Element(*this, static_cast<std::uint32_t>(dist(rng)));
}

std::string Field::name() const {
  switch (data_->kind) {
    case FieldKind::Prime:
      return "F_" + std::to_string(data_->p);
    case FieldKind::Rational:
      return "Q";
    case FieldKind::Extension: {
      std::ostringstream os;
      os << "F_" << data_->p << "[y]/(";
      bool first = true;
      for (std::size_t i = data_->modulus.size(); i-- > 0;) {
        std::uint32_t c = data_->modulus[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << "y";
        if (i >= 2) os << "^" << i;
      }
      os << ")";
      return os.str();
    }
  }
  return {};
}

bool Element::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool Element::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

std::uint32_t Element::residue() const {
  if (!field_.valid() || field_.kind() != FieldKind::Prime) {
    throw Error(ErrorCode::FieldMismatch, "residue() requires a prime-field element");
  }
  return std::get<std::uint32_t>(value_);
}

std::uint32_t Element::packed() const {
  if (!field_.valid() || !field_.is_finite()) throw Error(ErrorCode::FieldMismatch, "packed() requires a finite field");
  return std::get<std::uint32_t>(value_);
}

std::vector<std::uint32_t> Element::coefficients() const {
  const auto& f = *field_.data();
  Digits d{};
  decode(f, packed(), d);
  return {d.begin(), d.begin() + f.m};
}

const mpq_class& Element::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::FieldMismatch, "rational() requires an element of Q");
}

Element Element::operator-() const {
  const auto& f = *field_.data();
  switch (f.kind) {
    case FieldKind::Rational:
      return Element(field_, mpq_class(-std::get<mpq_class>(value_)));
    case FieldKind::Prime: {
      std::uint32_t v = std::get<std::uint32_t>(value_);
      return Element(field_, v == 0 ? 0U : f.p - v);
    }
    case FieldKind::Extension:
      return Element(field_, ext_neg(f, std::get<std::uint32_t>(value_)));
  }
  return {};
}

Element Element::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const auto& f = *field_.data();
  switch (f.kind) {
    case FieldKind::Rational:
      return Element(field_, mpq_class(1 / std::get<mpq_class>(value_)));
    case FieldKind::Prime:
      return Element(field_, inv_mod(std::get<std::uint32_t>(value_), f.p));
    case FieldKind::Extension:
      return Element(field_, ext_pow(f, std::get<std::uint32_t>(value_), f.q - 2));
  }
  return {};
}

Element Element::pow(std::uint64_t e) const {
  Element result = field_.one();
  Element base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  const auto& f = *a.field_.data();
  switch (f.kind) {
    case FieldKind::Rational:
      return Element(a.field_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
    case FieldKind::Prime: {
      std::uint32_t s = std::get<std::uint32_t>(a.value_) + std::get<std::uint32_t>(b.value_);
      if (s >= f.p) s -= f.p;
      return Element(a.field_, s);
    }
    case FieldKind::Extension:
      return Element(a.field_, ext_add(f, std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_), false));
  }
  return {};
}

Element operator-(const Element& a, const Element& b) {
  require_same(a, b);
  const auto& f = *a.field_.data();
  switch (f.kind) {
    case FieldKind::Rational:
      return Element(a.field_, mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
    case FieldKind::Prime: {
      std::uint32_t x = std::get<std::uint32_t>(a.value_);
      std::uint32_t y = std::get<std::uint32_t>(b.value_);
      return Element(a.field_, x >= y ? x - y : x + f.p - y);
    }
    case FieldKind::Extension:
      return Element(a.field_, ext_add(f, std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_), true));
  }
  return {};
}

Element operator*(const Element& a, const Element& b) {
  require_same(a, b);
  const auto& f = *a.field_.data();
  switch (f.kind) {
    case FieldKind::Rational:
      return Element(a.field_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
    case FieldKind::Prime:
      return Element(a.field_, mul_mod(std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_), f.p));
    case FieldKind::Extension:
      return Element(a.field_, ext_mul(f, std::get<std::uint32_t>(a.value_), std::get<std::uint32_t>(b.value_)));
  }
  return {};
}

Element operator/(const Element& a, const Element& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in " + a.field_.name());
  if (a.field_.kind() == FieldKind::Rational) {
    return Element(a.field_, mpq_class(std::get<mpq_class>(a.value_) / std::get<mpq_class>(b.value_)));
  }
  return a * b.inverse();
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

int Element::compare(const Element& other) const {
  require_same(*this, other);
  const auto& f = *field_.data();
  switch (f.kind) {
    case FieldKind::Rational:
      return cmp(std::get<mpq_class>(value_), std::get<mpq_class>(other.value_)) < 0   ? -1
             : cmp(std::get<mpq_class>(value_), std::get<mpq_class>(other.value_)) > 0 ? 1
                                                                                        : 0;
    case FieldKind::Prime: {
      auto x = std::get<std::uint32_t>(value_), y = std::get<std::uint32_t>(other.value_);
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    case FieldKind::Extension: {
      Digits dx{}, dy{};
      decode(f, std::get<std::uint32_t>(value_), dx);
      decode(f, std::get<std::uint32_t>(other.value_), dy);
      for (std::uint32_t i = 0; i < f.m; ++i) {
        if (dx[i] != dy[i]) return dx[i] < dy[i] ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

std::string Element::to_string() const {
  if (!field_.valid()) return "<null>";
  const auto& f = *field_.data();
  switch (f.kind) {
    case FieldKind::Rational:
      return std::get<mpq_class>(value_).get_str();
    case FieldKind::Prime:
      return std::to_string(std::get<std::uint32_t>(value_));
    case FieldKind::Extension: {
      std::string s = "[";
      auto c = coefficients();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
      }
      return s + "]";
    }
  }
  return {};
}

namespace {

// Tonelli-Shanks in the multiplicative group of a finite field of odd order q.
std::optional<Element> tonelli_shanks(const Element& a) {
  const Field& f = a.field();
  const std::uint64_t q = f.order();
  const Element one = f.one();
  const Element minus_one = -one;
  if (!(a.pow((q - 1) / 2) == one)) return std::nullopt;

  std::uint64_t s = 0, odd = q - 1;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  Element z;
  for (std::uint64_t k = 2; k < q; ++k) {
    Element cand = f.element_at(k);
    if (cand.pow((q - 1) / 2) == minus_one) {
      z = cand;
      break;
    }
  }
  Element c = z.pow(odd);
  Element r = a.pow((odd + 1) / 2);
  Element t = a.pow(odd);
  std::uint64_t m = s;
  while (!(t == one)) {
    std::uint64_t i = 0;
    Element t2 = t;
    while (!(t2 == one)) {
      t2 *= t2;
      ++i;
    }
    Element b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b *= b;
    r *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return r;
}

}  // namespace

std::optional<Element> sqrt(const Element& a) {
  const Field& f = a.field();
  if (a.is_zero()) return f.zero();

  if (f.kind() == FieldKind::Rational) {
    const mpq_class& v = a.rational();
    if (sgn(v) < 0) return std::nullopt;
    if (mpz_perfect_square_p(v.get_num_mpz_t()) == 0 || mpz_perfect_square_p(v.get_den_mpz_t()) == 0) {
      return std::nullopt;
    }
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), v.get_den_mpz_t());
    return f.from_rational(mpq_class(num, den));
  }

  const std::uint64_t q = f.order();
  if (f.characteristic() == 2) {
    // Frobenius is a bijection: sqrt(a) = a^(q/2).
    return a.pow(q / 2);
  }

  std::optional<Element> root;
  if (q <= 1000) {
    for (std::uint64_t k = 1; k < q; ++k) {
      Element cand = f.element_at(k);
      if (cand * cand == a) {
        root = cand;
        break;
      }
    }
  } else {
    root = tonelli_shanks(a);
  }
  if (!root) return std::nullopt;
  Element other = -*root;
  return other.compare(*root) < 0 ? other : *root;
}

}  // namespace sysrep
