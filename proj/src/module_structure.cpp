#include "sysrep/module_structure.hpp"

#include <random>

#include "sysrep/integer.hpp"

namespace sysrep {

Polynomial annihilator(const Matrix& a, const Vector& v) { return krylov(a, v).annihilator; }

Polynomial annihilator(const Representation& rep, const Vector& v) { return annihilator(rep.generator(), v); }

namespace {

constexpr int kRandomCandidates = 1000;

struct Summand {
  Polynomial factor;
  Vector generator;
  std::vector<Vector> basis;
};

// e_1..e_n, then e_1 + ... + e_k for k >= 2, then seeded random vectors.
class CandidateScan {
 public:
  CandidateScan(Field field, std::size_t n, std::uint64_t seed) : field_(field), n_(n), rng_(seed) {}

  std::optional<Vector> next() {
    const std::size_t step = step_++;
    if (step < n_) return unit_vector(field_, n_, step);
    if (step < 2 * n_ - 1) {
      Vector v = zero_vector(field_, n_);
      for (std::size_t i = 0; i <= step - n_ + 1; ++i) v[i] = field_.one();
      return v;
    }
    if (step >= 2 * n_ - 1 + kRandomCandidates) return std::nullopt;
    Vector v(n_);
    for (auto& e : v) e = field_.random(rng_);
    return v;
  }

 private:
  Field field_;
  std::size_t n_;
  std::mt19937_64 rng_;
  std::size_t step_ = 0;
};

std::vector<Vector> krylov_vectors(const Matrix& a, Vector v, std::size_t count) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(v);
    v = a * v;
  }
  return out;
}

std::optional<Summand> try_split(const Matrix& a, const Polynomial& target, const std::vector<Summand>& chosen,
                                 const Vector& u) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  const auto d = static_cast<std::size_t>(target.degree());

  std::vector<Vector> columns;
  for (const auto& s : chosen) columns.insert(columns.end(), s.basis.begin(), s.basis.end());
  const std::size_t wdim = columns.size();
  const auto powers = krylov_vectors(a, u, d + 1);
  columns.insert(columns.end(), powers.begin(), powers.end() - 1);

  // The conductor of u into W divides target, so it reaches degree d exactly
  // when u, ..., A^{d-1} u stay independent modulo W.
  const Matrix m = Matrix::from_columns(f, n, columns);
  if (rank(m) < wdim + d) return std::nullopt;
  const auto coords = solve(m, powers.back());
  if (!coords) throw Error(ErrorCode::Internal, "conductor exceeds the invariant factor degree");

  std::vector<Element> sc(d + 1, f.zero());
  sc[d] = f.one();
  for (std::size_t k = 0; k < d; ++k) sc[k] = -(*coords)[wdim + k];
  const Polynomial conductor(f, std::move(sc));
  if (!(conductor == target)) throw Error(ErrorCode::Internal, "conductor differs from the invariant factor");

  // target(A) u = sum_i h_i(A) v_i; shift u by sum_i (h_i / target)(A) v_i.
  Vector shifted = u;
  std::size_t offset = 0;
  for (const auto& s : chosen) {
    const std::size_t len = s.basis.size();
    Polynomial h(f, std::vector<Element>(coords->begin() + static_cast<std::ptrdiff_t>(offset),
                                         coords->begin() + static_cast<std::ptrdiff_t>(offset + len)));
    offset += len;
    const DivMod qr = divmod(h, target);
    if (!qr.remainder.is_zero()) throw Error(ErrorCode::Internal, "conductor does not divide the W-coordinates");
    shifted = shifted - apply(qr.quotient, a, s.generator);
  }
  KrylovResult kr = krylov(a, shifted);
  if (!(kr.annihilator == target)) throw Error(ErrorCode::Internal, "shifted generator has the wrong annihilator");
  return Summand{target, std::move(shifted), std::move(kr.basis)};
}

}  // namespace

InvariantFactorDecomposition invariant_factors(const Matrix& a, std::uint64_t seed) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "invariant factors need a square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();

  std::vector<Polynomial> factors;
  for (auto& d : smith_invariant_factors(a)) {
    if (d.degree() >= 1) factors.push_back(std::move(d));
  }

  std::vector<Summand> chosen;
  for (std::size_t j = factors.size(); j-- > 0;) {
    CandidateScan scan(f, n, seed + j);
    std::optional<Summand> found;
    while (!found) {
      auto u = scan.next();
      if (!u) throw Error(ErrorCode::Internal, "no generator found for " + factors[j].to_string());
      found = try_split(a, factors[j], chosen, *u);
    }
    chosen.push_back(std::move(*found));
  }

  InvariantFactorDecomposition dec;
  std::vector<Vector> columns;
  std::vector<Matrix> blocks;
  for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
    dec.factors.push_back(it->factor);
    dec.generators.push_back(it->generator);
    columns.insert(columns.end(), it->basis.begin(), it->basis.end());
    blocks.push_back(companion(it->factor));
  }
  dec.basis_change = Matrix::from_columns(f, n, columns);
  dec.canonical_form = Matrix::block_diagonal(f, blocks);
  if (rank(dec.basis_change) != n || !(a * dec.basis_change == dec.basis_change * dec.canonical_form)) {
    throw Error(ErrorCode::Internal, "rational canonical form failed verification");
  }
  return dec;
}

DivisibilityReport verify_period_divisibility(const InvariantFactorDecomposition& dec, std::uint64_t T,
                                              std::uint64_t seed) {
  DivisibilityReport report;
  report.period = T;
  bool all_divide = true;
  for (const auto& f : dec.factors) {
    if (!f.field().is_finite()) throw Error(ErrorCode::RationalFieldUnsupported, "period divisibility needs a finite field");
    DivisibilityEntry entry{f, order_of_x_mod(f, seed), false};
    const Polynomial one = Polynomial::constant(f.field().one());
    entry.divides = ((pow_mod(Polynomial::x(f.field()), T, f) - one) % f).is_zero();
    all_divide = all_divide && entry.divides;
    report.order_lcm = checked_lcm(report.order_lcm, entry.order).value_or(0);
    report.entries.push_back(std::move(entry));
  }
  report.passed = all_divide && report.order_lcm == T;
  return report;
}

}  // namespace sysrep
