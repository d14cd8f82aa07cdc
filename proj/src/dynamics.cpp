#include "sysrep/dynamics.hpp"

#include <thread>

#include "sysrep/integer.hpp"

namespace sysrep {

namespace {

void require_invertible(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "square matrix required");
  if (rank(a) < a.rows()) throw Error(ErrorCode::SingularMatrix, "A is not invertible; it generates no group");
}

std::uint64_t rational_order(const Matrix& a, std::uint64_t seed) {
  const Polynomial m = minimal_polynomial(a);
  const Field& f = a.field();
  const Polynomial one = Polynomial::constant(f.one());
  const Polynomial x = Polynomial::x(f);
  std::uint64_t total = 1;
  for (const auto& [g, e] : factor(m, seed).factors) {
    if (e > 1) throw Error(ErrorCode::InfiniteOrder, "minimal polynomial has a repeated factor " + g.to_string());
    // A root of unity of order k has degree phi(k) >= sqrt(k / 2) over Q.
    const std::uint64_t d = static_cast<std::uint64_t>(g.degree());
    const std::uint64_t bound = 2 * d * d + 2;
    Polynomial h = one;
    std::uint64_t order = 0;
    for (std::uint64_t k = 1; k <= bound; ++k) {
      h = (h * x) % g;
      if (h == one) {
        order = k;
        break;
      }
    }
    if (order == 0) throw Error(ErrorCode::InfiniteOrder, "factor " + g.to_string() + " is not cyclotomic");
    total = *checked_lcm(total, order);
  }
  return total;
}

}  // namespace

std::uint64_t order_of_matrix(const Matrix& a, std::uint64_t seed) {
  require_invertible(a);
  if (!a.field().is_finite()) return rational_order(a, seed);

  std::uint64_t T = 1;
  for (const auto& f : smith_invariant_factors(a)) {
    if (f.degree() < 1) continue;
    auto next = checked_lcm(T, order_of_x_mod(f, seed));
    if (!next || *next >= (1ULL << 63)) throw Error(ErrorCode::DegreeTooLarge, "order of A overflows 63 bits");
    T = *next;
  }
  if (!pow(a, static_cast<std::int64_t>(T)).is_identity()) throw Error(ErrorCode::Internal, "A^T != I");
  for (auto [ell, e] : factor_u64(T)) {
    (void)e;
    if (pow(a, static_cast<std::int64_t>(T / ell)).is_identity()) {
      throw Error(ErrorCode::Internal, "order of A is not minimal");
    }
  }
  return T;
}

std::uint64_t point_period(const Representation& rep, const Vector& x0, std::uint64_t seed) {
  if (x0.size() != rep.dim()) throw Error(ErrorCode::DimensionMismatch, "state has the wrong length");
  if (!rep.field().is_finite()) throw Error(ErrorCode::RationalFieldUnsupported, "point periods need a finite field");
  require_invertible(rep.generator());
  if (is_zero(x0)) return 1;
  return order_of_x_mod(krylov(rep.generator(), x0).annihilator, seed);
}

std::optional<std::uint64_t> state_count(const Matrix& a) {
  if (!a.field().is_finite()) return std::nullopt;
  return checked_pow(a.field().order(), static_cast<unsigned>(a.rows()));
}

OrbitCensus orbit_census_analytic(const Matrix& a, std::uint64_t seed) {
  require_invertible(a);
  if (!a.field().is_finite()) throw Error(ErrorCode::RationalFieldUnsupported, "orbit census needs a finite field");
  const std::uint64_t q = a.field().order();
  const std::size_t n = a.rows();
  OrbitCensus census;
  mpz_ui_pow_ui(census.states.get_mpz_t(), q, n);
  census.period = order_of_matrix(a, seed);

  const Matrix id = Matrix::identity(a.field(), n);
  const auto divs = divisors(census.period);
  for (std::uint64_t d : divs) {
    const std::size_t r = rank(pow(a, static_cast<std::int64_t>(d)) - id);
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), q, n - r);
    census.fixed_points[d] = count;
  }
  for (std::uint64_t t : divs) {
    mpz_class exact = 0;
    for (std::uint64_t d : divisors(t)) {
      const int mu = moebius(t / d);
      if (mu == 1) exact += census.fixed_points[d];
      if (mu == -1) exact -= census.fixed_points[d];
    }
    if (exact == 0) continue;
    if (!mpz_divisible_ui_p(exact.get_mpz_t(), t)) {
      throw Error(ErrorCode::Internal, "points of exact period " + std::to_string(t) + " do not form whole cycles");
    }
    census.cycles[t] = exact / t;
  }
  return census;
}

namespace {

// Maps state indices (odometer order, first coordinate fastest) to the index
// of their image under A.
class Stepper {
 public:
  explicit Stepper(const Matrix& a) : a_(a), q_(a.field().order()), n_(a.rows()) {
    if (a.field().kind() == FieldKind::Prime) {
      residues_.resize(n_ * n_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) residues_[i * n_ + j] = a(i, j).residue();
      }
    }
  }

  std::uint64_t operator()(std::uint64_t state, std::vector<std::uint64_t>& digits) const {
    digits.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      digits[i] = state % q_;
      state /= q_;
    }
    std::uint64_t out = 0;
    if (!residues_.empty()) {
      for (std::size_t i = n_; i-- > 0;) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < n_; ++j) acc = (acc + residues_[i * n_ + j] * digits[j]) % q_;
        out = out * q_ + acc;
      }
      return out;
    }
    const Field& f = a_.field();
    for (std::size_t i = n_; i-- > 0;) {
      Element acc = f.zero();
      for (std::size_t j = 0; j < n_; ++j) acc += a_(i, j) * f.element_at(digits[j]);
      out = out * q_ + f.index_of(acc);
    }
    return out;
  }

 private:
  const Matrix& a_;
  std::uint64_t q_;
  std::size_t n_;
  std::vector<std::uint64_t> residues_;
};

std::map<std::uint64_t, std::uint64_t> enumerate_range(const Stepper& step, std::uint64_t total, std::uint64_t lo,
                                                       std::uint64_t hi) {
  std::map<std::uint64_t, std::uint64_t> cycles;
  std::vector<bool> visited(total, false);
  std::vector<std::uint64_t> digits;
  for (std::uint64_t s = lo; s < hi; ++s) {
    if (visited[s]) continue;
    std::uint64_t len = 0, least = s, cur = s;
    do {
      visited[cur] = true;
      least = std::min(least, cur);
      cur = step(cur, digits);
      ++len;
    } while (cur != s);
    if (least == s) ++cycles[len];
  }
  return cycles;
}

}  // namespace

OrbitCensus orbit_census_enumerate(const Matrix& a, const EnumerationOptions& options) {
  require_invertible(a);
  if (!a.field().is_finite()) throw Error(ErrorCode::RationalFieldUnsupported, "orbit census needs a finite field");
  const std::uint64_t cap = std::min(options.max_states, kHardMaxStates);
  const auto total = state_count(a);
  if (!total || *total > cap) {
    throw Error(ErrorCode::StateSpaceTooLarge, "q^n exceeds the enumeration limit of " + std::to_string(cap) + " states");
  }
  const Stepper step(a);
  const unsigned workers = std::max(1U, options.workers);

  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(workers);
  if (workers == 1) {
    partial[0] = enumerate_range(step, *total, 0, *total);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = *total * w / workers;
      const std::uint64_t hi = *total * (w + 1) / workers;
      threads.emplace_back([&, w, lo, hi] { partial[w] = enumerate_range(step, *total, lo, hi); });
    }
    for (auto& t : threads) t.join();
  }

  OrbitCensus census;
  census.states = mpz_class(std::to_string(*total));
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& part : partial) {
    for (auto [len, count] : part) merged[len] += count;
  }
  std::uint64_t period = 1;
  for (auto [len, count] : merged) {
    census.cycles[len] = mpz_class(std::to_string(count));
    period = *checked_lcm(period, len);
  }
  census.period = period;
  for (std::uint64_t d : divisors(period)) {
    mpz_class fixed = 0;
    for (auto [len, count] : merged) {
      if (d % len == 0) fixed += mpz_class(std::to_string(len)) * mpz_class(std::to_string(count));
    }
    census.fixed_points[d] = fixed;
  }
  return census;
}

}  // namespace sysrep
