#include "sysrep/polynomial.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "sysrep/integer.hpp"

namespace sysrep {

namespace {

void require_same(const Polynomial& a, const Polynomial& b) {
  if (!a.field().valid() || !(a.field() == b.field())) {
    throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  }
}

}  // namespace

Polynomial::Polynomial(Field field, std::vector<Element> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw Error(ErrorCode::FieldMismatch, "coefficient outside the polynomial's field");
  }
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Element& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const Element& c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1, c.field().zero());
  coeffs[degree] = c;
  return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::from_ints(Field field, std::initializer_list<std::int64_t> coeffs) {
  return from_ints(field, std::vector<std::int64_t>(coeffs));
}

Polynomial Polynomial::from_ints(Field field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Element> out;
  out.reserve(coeffs.size());
  for (auto c : coeffs) out.push_back(field.from_int(c));
  return Polynomial(field, std::move(out));
}

Element Polynomial::leading() const {
  if (coeffs_.empty()) return field_.zero();
  return coeffs_.back();
}

Element Polynomial::operator()(const Element& at) const {
  Element acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return leading().inverse() * *this;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<Element> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(field_.from_int(static_cast<std::int64_t>(i)) * coeffs_[i]);
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  const Polynomial& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const Polynomial& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  Polynomial r = longer;
  for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i) r.coeffs_[i] += shorter.coeffs_[i];
  r.trim();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Element& c, const Polynomial& a) {
  if (!(c.field() == a.field_)) throw Error(ErrorCode::FieldMismatch, "scalar from another field");
  if (c.is_zero()) return Polynomial(a.field_);
  Polynomial r = a;
  for (auto& x : r.coeffs_) x = c * x;
  return r;
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

int Polynomial::compare(const Polynomial& other) const {
  if (degree() != other.degree()) return degree() < other.degree() ? -1 : 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    int c = coeffs_[i].compare(other.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Element& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string coeff = c.to_string();
    bool negative = field_.kind() == FieldKind::Rational && sgn(c.rational()) < 0;
    if (negative) coeff = (-c).to_string();
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

DivMod divmod(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& field = f.field();
  if (f.degree() < g.degree()) return {Polynomial(field), f};
  std::vector<Element> rem = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  const Element lead_inv = gc.back().inverse();
  std::vector<Element> quot(rem.size() - dg, field.zero());
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k].is_zero()) continue;
    Element c = rem[k] * lead_inv;
    quot[k - dg] = c;
    for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= c * gc[i];
  }
  rem.resize(dg);
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field());
  return ((f / gcd(f, g)) * g).monic();
}

Bezout extended_gcd(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  const Field& field = f.field();
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "extended_gcd(0, 0) is undefined");
  Polynomial r0 = f, r1 = g;
  Polynomial s0 = Polynomial::constant(field.one()), s1(field);
  Polynomial t0(field), t1 = Polynomial::constant(field.one());
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  Element inv = r0.leading().inverse();
  Bezout out{inv * r0, inv * s0, inv * t0};
  // Normalize to the minimal-degree cofactor pair.
  if (!g.is_zero()) {
    Polynomial g_red = g / out.gcd;
    out.u = out.u % g_red;
    out.v = (out.gcd - out.u * f) / g;
  }
  return out;
}

Polynomial pow(const Polynomial& base, std::uint64_t e) {
  Polynomial result = Polynomial::constant(base.field().one());
  Polynomial b = base;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field().one()) % modulus;
  Polynomial b = base % modulus;
  while (e > 0) {
    if (e & 1U) result = (result * b) % modulus;
    e >>= 1U;
    if (e > 0) b = (b * b) % modulus;
  }
  return result;
}

Polynomial pow_mod(const Polynomial& base, const mpz_class& e, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field().one()) % modulus;
  Polynomial b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = (result * b) % modulus;
  }
  return result;
}

Polynomial x_pow_minus_one(Field field, std::uint64_t T) {
  return Polynomial::monomial(field.one(), T) - Polynomial::constant(field.one());
}

Polynomial Factorization::expand() const {
  Polynomial out = Polynomial::constant(unit);
  for (const auto& f : factors) out *= pow(f.factor, f.multiplicity);
  return out;
}

namespace {

// a^(1/p) in F_q, q = p^m: the inverse Frobenius a^(p^(m-1)).
Element pth_root(const Element& a) {
  const Field& f = a.field();
  std::uint64_t e = 1;
  for (std::size_t i = 1; i < f.degree(); ++i) e *= f.characteristic();
  return a.pow(e);
}

void squarefree_finite(const Polynomial& f, std::size_t scale, std::map<std::size_t, Polynomial>& out) {
  const Field& field = f.field();
  const std::uint32_t p = field.characteristic();
  Polynomial c = gcd(f, f.derivative());
  Polynomial w = f / c;
  std::size_t i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial part = w / y;
    if (part.degree() > 0) {
      auto [it, inserted] = out.try_emplace(i * scale, part);
      if (!inserted) it->second *= part;
    }
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    std::vector<Element> root;
    const auto& cc = c.coefficients();
    for (std::size_t k = 0; k < cc.size(); k += p) root.push_back(pth_root(cc[k]));
    squarefree_finite(Polynomial(field, std::move(root)).monic(), scale * p, out);
  }
}

void squarefree_char0(const Polynomial& f, std::map<std::size_t, Polynomial>& out) {
  // Yun's algorithm.
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = f / a;
  Polynomial c = fp / a;
  Polynomial d = c - b.derivative();
  std::size_t i = 1;
  while (b.degree() > 0) {
    Polynomial part = gcd(b, d);
    if (part.degree() > 0) out.emplace(i, part);
    b = b / part;
    c = d / part;
    d = c - b.derivative();
    ++i;
  }
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of 0");
  Polynomial g = f.monic();
  std::map<std::size_t, Polynomial> parts;
  if (g.degree() > 0) {
    if (g.field().is_finite()) {
      squarefree_finite(g, 1, parts);
    } else {
      squarefree_char0(g, parts);
    }
  }
  std::vector<Factor> out;
  for (auto& [mult, part] : parts) out.push_back({part.monic(), mult});
  return out;
}

namespace detail {

namespace {

Polynomial random_below(const Field& field, int degree, std::mt19937_64& rng) {
  std::vector<Element> coeffs;
  for (int i = 0; i < degree; ++i) coeffs.push_back(field.random(rng));
  return Polynomial(field, std::move(coeffs));
}

void equal_degree_split(const Polynomial& f, int d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Field& field = f.field();
  const std::uint64_t q = field.order();
  const Polynomial one = Polynomial::constant(field.one());
  mpz_class half_exponent;
  if (field.characteristic() != 2) {
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), q, static_cast<unsigned long>(d));
    half_exponent = (qd - 1) / 2;
  }
  for (;;) {
    Polynomial a = random_below(field, f.degree(), rng);
    if (a.degree() < 1) continue;
    Polynomial b;
    if (field.characteristic() == 2) {
      // Absolute trace to F_2: a + a^2 + ... + a^(2^(m d - 1)).
      const std::size_t steps = field.degree() * static_cast<std::size_t>(d);
      Polynomial t = a % f;
      b = t;
      for (std::size_t i = 1; i < steps; ++i) {
        t = (t * t) % f;
        b += t;
      }
    } else {
      b = pow_mod(a, half_exponent, f) - one;
    }
    Polynomial g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Polynomial> factor_squarefree_finite(const Polynomial& f, std::uint64_t seed) {
  const Field& field = f.field();
  const std::uint64_t q = field.order();
  const Polynomial x = Polynomial::x(field);
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> out;

  // Distinct-degree factorization.
  Polynomial rest = f.monic();
  Polynomial h = x % rest;
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = pow_mod(h, q, rest);
    Polynomial g = gcd(h - x, rest);
    if (g.degree() > 0) {
      equal_degree_split(g, i, rng, out);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

}  // namespace detail

Factorization factor(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  const Field& field = f.field();
  if (!field.is_finite()) return detail::factor_rational(f, seed);

  Factorization out{f.leading(), {}};
  std::uint64_t part_seed = seed;
  for (const auto& part : squarefree_decomposition(f)) {
    for (auto& irr : detail::factor_squarefree_finite(part.factor, part_seed++)) {
      out.factors.push_back({irr.monic(), part.multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return a.factor.compare(b.factor) < 0; });
  return out;
}

bool is_irreducible(const Polynomial& f, std::uint64_t seed) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Field& field = f.field();
  if (!field.is_finite()) {
    Factorization fac = factor(f, seed);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
  }
  // Ben-Or: no irreducible factor of degree <= n/2.
  const Polynomial g = f.monic();
  const Polynomial x = Polynomial::x(field);
  Polynomial h = x;
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    h = pow_mod(h, field.order(), g);
    if (gcd(h - x, g).degree() > 0) return false;
  }
  return true;
}

std::uint64_t order_of_x_mod(const Polynomial& f, std::uint64_t seed) {
  const Field& field = f.field();
  if (!field.is_finite()) throw Error(ErrorCode::RationalFieldUnsupported, "order of x is only computed over finite fields");
  if (f.degree() < 1) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "order of x modulo 0");
    return 1;  // everything is 0 modulo a unit
  }
  if (f.coefficient(0).is_zero()) throw Error(ErrorCode::NotPeriodic, "x divides " + f.to_string() + "; x has no order");

  const Polynomial one = Polynomial::constant(field.one());
  const Polynomial x = Polynomial::x(field);
  const std::uint64_t q = field.order();
  const std::uint32_t p = field.characteristic();
  std::uint64_t total = 1;
  for (const auto& [g, e] : factor(f, seed).factors) {
    auto group_order = checked_pow(q, static_cast<unsigned>(g.degree()));
    if (!group_order || *group_order >= (1ULL << 63)) {
      throw Error(ErrorCode::DegreeTooLarge, "q^d exceeds 2^63 for factor " + g.to_string());
    }
    std::uint64_t t = *group_order - 1;
    for (auto [ell, mult] : factor_u64(t)) {
      (void)mult;
      while (t % ell == 0 && pow_mod(x, t / ell, g) == one) t /= ell;
    }
    // A repeated factor g^e multiplies the order by the least p^k >= e.
    std::uint64_t pk = 1;
    while (pk < e) pk *= p;
    auto with_power = checked_mul(t, pk);
    auto next = with_power ? checked_lcm(total, *with_power) : std::nullopt;
    if (!next) throw Error(ErrorCode::DegreeTooLarge, "order of x overflows 64 bits");
    total = *next;
  }
  return total;
}

}  // namespace sysrep
