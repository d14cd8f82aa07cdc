// Factorization over Q: clear denominators, factor the primitive integer
// polynomial modulo a good prime, Hensel-lift the modular factors and
// recombine them by exhaustive subset search.

#include <algorithm>
#include <utility>

#include "sysrep/polynomial.hpp"

namespace sysrep::detail {

namespace {

using ZPoly = std::vector<mpz_class>;  // low-degree-first, trimmed

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

ZPoly sub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void reduce_mod(ZPoly& a, const mpz_class& m, bool symmetric) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (symmetric && c > half) c -= m;
  }
  trim(a);
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(ZPoly a) {
  mpz_class g = content(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

// Exact division over Z; std::nullopt if b does not divide a.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (deg(a) < deg(b)) return std::nullopt;
  if (b.front() != 0 && a.front() != 0 && !mpz_divisible_p(a.front().get_mpz_t(), b.front().get_mpz_t())) {
    return std::nullopt;
  }
  ZPoly rem = a;
  ZPoly quot(a.size() - b.size() + 1, 0);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), rem[k].get_mpz_t(), b.back().get_mpz_t());
    quot[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= c * b[i];
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(quot);
  return quot;
}

Polynomial to_fp(const ZPoly& a, const Field& fp) {
  std::vector<Element> coeffs;
  coeffs.reserve(a.size());
  for (const auto& c : a) coeffs.push_back(fp.from_mpz(c));
  return Polynomial(fp, std::move(coeffs));
}

ZPoly from_fp(const Polynomial& a) {
  ZPoly out;
  for (const auto& c : a.coefficients()) out.emplace_back(static_cast<unsigned long>(c.residue()));
  return out;
}

void add_scaled(ZPoly& a, const Polynomial& delta, const mpz_class& scale) {
  const auto& dc = delta.coefficients();
  if (a.size() < dc.size()) a.resize(dc.size(), 0);
  for (std::size_t i = 0; i < dc.size(); ++i) a[i] += scale * static_cast<unsigned long>(dc[i].residue());
}

// Lift F = g0*h0 (mod p), F monic, to F = G*H (mod p^k) with G, H monic.
std::pair<ZPoly, ZPoly> lift_pair(const ZPoly& F, const Polynomial& g0, const Polynomial& h0, unsigned long p,
                                  unsigned k) {
  const Field& fp = g0.field();
  Bezout b = extended_gcd(g0, h0);
  if (!b.gcd.is_one()) throw Error(ErrorCode::Internal, "Hensel lifting needs coprime modular factors");
  ZPoly G = from_fp(g0), H = from_fp(h0);
  mpz_class pj = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly E = sub(F, mul(G, H));
    for (auto& c : E) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    Polynomial e = to_fp(E, fp);
    Polynomial tau = (e * b.v) % g0;
    Polynomial sigma = (e - tau * h0) / g0;
    add_scaled(G, tau, pj);
    add_scaled(H, sigma, pj);
    pj *= p;
  }
  reduce_mod(G, pj, false);
  reduce_mod(H, pj, false);
  return {G, H};
}

std::vector<ZPoly> lift_all(const ZPoly& F, const std::vector<Polynomial>& factors, unsigned long p, unsigned k) {
  if (factors.size() == 1) return {F};
  const std::size_t half = factors.size() / 2;
  const Field& fp = factors.front().field();
  Polynomial left = Polynomial::constant(fp.one()), right = Polynomial::constant(fp.one());
  std::vector<Polynomial> lf(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<Polynomial> rf(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  for (const auto& f : lf) left *= f;
  for (const auto& f : rf) right *= f;
  auto [G, H] = lift_pair(F, left, right, p, k);
  auto out = lift_all(G, lf, p, k);
  auto rest = lift_all(H, rf, p, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// Irreducible factors of a primitive squarefree integer polynomial with positive leading coefficient.
std::vector<ZPoly> factor_primitive(const ZPoly& Z, std::uint64_t seed) {
  const int n = deg(Z);
  if (n <= 1) return {Z};

  // Pick the good prime with the fewest modular factors among the first few.
  unsigned long best_p = 0;
  std::vector<Polynomial> best_factors;
  int good = 0;
  for (unsigned long p = 2; good < 3 && p < 100000; ++p) {
    if (!is_prime_u32(static_cast<std::uint32_t>(p))) continue;
    if (mpz_divisible_ui_p(Z.back().get_mpz_t(), p) != 0) continue;
    Field fp = Field::prime(static_cast<std::uint32_t>(p));
    Polynomial zbar = to_fp(Z, fp);
    if (gcd(zbar, zbar.derivative()).degree() > 0) continue;
    ++good;
    auto facs = factor_squarefree_finite(zbar.monic(), seed);
    if (best_p == 0 || facs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1) break;
  }
  if (best_p == 0) throw Error(ErrorCode::Internal, "no good reduction prime found");
  if (best_factors.size() == 1) return {Z};
  std::sort(best_factors.begin(), best_factors.end());

  // Coefficients of lc * (any factor) are bounded by |lc| 2^n ||Z||_2.
  mpz_class norm_sq = 0;
  for (const auto& c : Z) norm_sq += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  mpz_class bound = abs(Z.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
  unsigned k = 1;
  mpz_class modulus = best_p;
  while (modulus <= bound) {
    modulus *= best_p;
    ++k;
  }

  ZPoly monic_target = Z;
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), Z.back().get_mpz_t(), modulus.get_mpz_t());
  for (auto& c : monic_target) c *= lc_inv;
  reduce_mod(monic_target, modulus, false);
  std::vector<ZPoly> lifted = lift_all(monic_target, best_factors, best_p, k);

  std::vector<ZPoly> found;
  ZPoly current = Z;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool split = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      ZPoly cand{current.back()};
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (!pick[i]) continue;
        cand = mul(cand, lifted[remaining[i]]);
        reduce_mod(cand, modulus, false);
      }
      reduce_mod(cand, modulus, true);
      cand = primitive_part(cand);
      if (auto quotient = divide_exact(current, cand)) {
        found.push_back(cand);
        current = primitive_part(*quotient);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          if (!pick[i]) keep.push_back(remaining[i]);
        }
        remaining = std::move(keep);
        split = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!split) ++s;
  }
  found.push_back(current);
  return found;
}

}  // namespace

Factorization factor_rational(const Polynomial& f, std::uint64_t seed) {
  if (f.degree() > kMaxRationalFactorDegree) {
    throw Error(ErrorCode::DegreeTooLarge,
                "factorization over Q is capped at degree " + std::to_string(kMaxRationalFactorDegree));
  }
  const Field& field = f.field();
  Factorization out{f.leading(), {}};
  for (const auto& part : squarefree_decomposition(f)) {
    mpz_class den = 1;
    for (const auto& c : part.factor.coefficients()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    }
    ZPoly z;
    for (const auto& c : part.factor.coefficients()) z.push_back(mpz_class(c.rational() * den));
    z = primitive_part(z);
    for (const auto& h : factor_primitive(z, seed)) {
      std::vector<Element> coeffs;
      for (const auto& c : h) coeffs.push_back(field.from_rational(mpq_class(c, h.back())));
      out.factors.push_back({Polynomial(field, std::move(coeffs)), part.multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return a.factor.compare(b.factor) < 0; });
  return out;
}

}  // namespace sysrep::detail
