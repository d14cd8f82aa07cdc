// Acceptance run: one PASS/FAIL line per criterion, with the measured runtime
// against its budget. Exit status is the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "oracles.hpp"
#include "support.hpp"
#include "sysrep/decomposition.hpp"
#include "sysrep/dynamics.hpp"
#include "sysrep/module_structure.hpp"

using namespace sysrep;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

// Runtime budgets in seconds.
constexpr double kHomomorphismBudget = 10;
constexpr double kDecompositionBudget = 30;
constexpr double kInvariantBudget = 30;
constexpr double kPeriodBudget = 10;
constexpr double kCensusBudget = 60;
constexpr double kAlgebraBudget = 10;
constexpr double kPlanarBudget = 10;
constexpr double kFactorBudget = 30;
constexpr double kCliBudget = 60;

// Largest state space enumerated for the census comparison: 3^10.
constexpr std::uint64_t kCensusStates = 59049;

const std::vector<Field>& small_primes() {
  static const std::vector<Field> fields{Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(13)};
  return fields;
}

/// The shared random corpus: 200 matrices over small prime fields and 50 over Q.
const std::vector<Matrix>& corpus() {
  static const std::vector<Matrix> matrices = [] {
    std::vector<Matrix> out;
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 200; ++i) {
      const Field& f = small_primes()[static_cast<std::size_t>(i) % small_primes().size()];
      out.push_back(testing::random_structured_matrix(f, 1 + rng() % 6, rng));
    }
    for (int i = 0; i < 50; ++i) out.push_back(testing::random_structured_matrix(Field::rational(), 1 + rng() % 6, rng));
    return out;
  }();
  return matrices;
}

std::string show(const Matrix& a) { return a.field().name() + " " + a.to_string(); }

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Outcome homomorphism_law() {
  Outcome o;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> time(-kHomomorphismRange, kHomomorphismRange);
  for (int i = 0; i < 100; ++i) {
    const Field& f = small_primes()[static_cast<std::size_t>(i) % 4];
    const Representation rep(TimeGroup::integers(), testing::random_invertible(f, 1 + rng() % 6, rng));
    for (int k = 0; k < 256; ++k) {
      const std::int64_t t1 = time(rng), t2 = time(rng);
      o.require(rep.rho(t1 + t2) == rep.rho(t1) * rep.rho(t2),
                "rho(" + std::to_string(t1) + " + " + std::to_string(t2) + ") on " + show(rep.generator()));
    }
    o.require(rep.rho(0).is_identity(), "rho(0) != I");
  }
  return o;
}

Outcome primary_decomposition_check() {
  Outcome o;
  std::uint64_t seed = 0;
  for (const Matrix& a : corpus()) {
    const Field& f = a.field();
    const std::size_t n = a.rows();
    const auto comps = primary_decomposition(a, ++seed);
    Matrix sum(f, n, n);
    std::size_t dims = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Matrix& p = comps[i].projector;
      sum = sum + p;
      dims += comps[i].basis.size();
      o.require(p * p == p, "projector not idempotent for " + show(a));
      o.require(a * p == p * a, "projector does not commute for " + show(a));
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j != i) o.require((p * comps[j].projector).is_zero(), "projectors not orthogonal for " + show(a));
      }
      const Matrix basis = Matrix::from_columns(f, n, comps[i].basis);
      for (const auto& v : comps[i].basis) o.require(solve(basis, a * v).has_value(), "V_i not invariant for " + show(a));
    }
    o.require(dims == n, "dimensions do not sum to n for " + show(a));
    o.require(sum.is_identity(), "projectors do not sum to I for " + show(a));
  }
  return o;
}

Outcome invariant_factor_check() {
  Outcome o;
  std::uint64_t seed = 0;
  for (const Matrix& a : corpus()) {
    const auto dec = invariant_factors(a, ++seed);
    const Field& f = a.field();
    Polynomial product = Polynomial::constant(f.one());
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
      product *= dec.factors[i];
      if (i + 1 < dec.factors.size()) {
        o.require((dec.factors[i + 1] % dec.factors[i]).is_zero(), "f_i does not divide f_i+1 for " + show(a));
      }
    }
    o.require(product == characteristic_polynomial(a), "product of factors != char poly for " + show(a));
    o.require(dec.factors.back() == minimal_polynomial(a), "largest factor != minimal poly for " + show(a));
    o.require(inverse(dec.basis_change) * a * dec.basis_change == dec.canonical_form, "P^-1 A P != C for " + show(a));
  }
  return o;
}

Outcome period_check() {
  Outcome o;
  std::mt19937_64 rng(4);
  auto check = [&](const Matrix& a, std::uint64_t seed) {
    const std::uint64_t T = order_of_matrix(a, seed);
    o.require(pow(a, static_cast<std::int64_t>(T)).is_identity(), "A^T != I for " + show(a));
    for (std::uint64_t l : prime_divisors(T)) {
      o.require(!pow(a, static_cast<std::int64_t>(T / l)).is_identity(), "T not minimal for " + show(a));
    }
    const Polynomial target = x_pow_minus_one(a.field(), T);
    for (const auto& fi : invariant_factors(a, seed).factors) {
      o.require((target % fi).is_zero(), "f_i does not divide x^T - 1 for " + show(a));
    }
    return T;
  };
  const Field fields[] = {Field::prime(2), Field::prime(3), Field::prime(5)};
  for (int i = 0; i < 100; ++i) check(testing::random_invertible(fields[i % 3], 1 + rng() % 5, rng), rng());
  o.require(check(testing::fibonacci(fields[0]), 0) == 3, "Fibonacci over F_2 does not have T = 3");
  o.require(check(companion(testing::poly(fields[1], {1, 0, 1})), 0) == 4, "companion(x^2+1) over F_3 does not have T = 4");
  return o;
}

Outcome census_check() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::size_t compared = 0;
  auto check = [&](const Matrix& a) {
    const OrbitCensus analytic = orbit_census_analytic(a, rng());
    const OrbitCensus walked = orbit_census_enumerate(a, {kCensusStates, 1});
    o.require(analytic == walked, "analytic and enumerated census differ for " + show(a));
    mpz_class total = 0;
    for (const auto& [t, count] : walked.cycles) total += count * t;
    o.require(total == walked.states, "sum of t * cycles[t] != q^n for " + show(a));
    ++compared;
    return walked;
  };
  for (const Matrix& a : corpus()) {
    const auto states = a.field().is_finite() ? state_count(a) : std::nullopt;
    if (states && *states <= kCensusStates && rank(a) == a.rows()) check(a);
  }
  const Field f3 = Field::prime(3);
  const OrbitCensus named = check(companion(testing::poly(f3, {1, 0, 1})));
  o.require(named.cycles == std::map<std::uint64_t, mpz_class>{{1, 1}, {4, 2}}, "companion(x^2+1)/F_3 census != {1:1, 4:2}");
  o.require(compared > 100, "corpus too small: " + std::to_string(compared) + " systems");
  if (o.passed) o.detail = std::to_string(compared) + " systems compared";
  return o;
}

Outcome algebra_check() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> degree(0, 6);
  for (int i = 0; i < 60; ++i) {
    const Field& f = small_primes()[static_cast<std::size_t>(i) % 4];
    const Matrix a = testing::random_invertible(f, 1 + rng() % 5, rng);
    const std::uint64_t T = order_of_matrix(a, rng());
    const Representation rep(TimeGroup::cyclic(T), a);
    for (int k = 0; k < 20; ++k) {
      const Polynomial p = testing::random_poly(f, degree(rng), rng);
      const Polynomial g = testing::random_poly(f, degree(rng), rng);
      Vector v(a.rows());
      for (auto& e : v) e = f.random(rng);
      o.require(rep.poly_action(p + g, v) == rep.poly_action(p, v) + rep.poly_action(g, v), "Phi(f+g) for " + show(a));
      o.require(rep.poly_action(p * g, v) == rep.poly_action(p, rep.poly_action(g, v)), "Phi(fg) for " + show(a));
      o.require(rep.module_action(p, v) == rep.module_action(reduce_mod_x_pow_minus_one(p, T), v),
                "module action depends on the representative for " + show(a));
      // Independent evaluation: Horner's rule with plain matrix products.
      Vector horner = zero_vector(f, a.rows());
      for (std::size_t d = p.coefficients().size(); d-- > 0;) horner = a * horner + p.coefficient(d) * v;
      o.require(rep.poly_action(p, v) == horner, "Phi(f) v differs from Horner evaluation for " + show(a));
    }
    o.require(from_module_action(f, T, a).rho(1) == a, "module round trip does not recover A for " + show(a));
  }
  return o;
}

Outcome planar_check() {
  Outcome o;
  const Field q = Field::rational();
  const Matrix quarter = Matrix::from_ints(q, {{0, 1}, {-1, 0}});
  const auto qb = planar_blocks(quarter);
  o.require(qb.size() == 1 && qb[0].form == BlockForm::Rotation && qb[0].a.is_zero() && qb[0].b && qb[0].b->is_one(),
            "Q quarter turn is not a = 0, b = 1");
  if (qb.size() == 1) o.require(qb[0].restriction() == quarter, "Q restriction differs from the block");

  // Literal sub-claims for companion(x^2+1) over F_5 and F_3.
  const Field f5 = Field::prime(5);
  const auto b5 = planar_blocks(companion(testing::poly(f5, {1, 0, 1})));
  const bool f5_rotation = b5.size() == 1 && b5[0].form == BlockForm::Rotation && b5[0].b &&
                           (*b5[0].b) * (*b5[0].b) == f5.from_int(-1);
  o.require(f5_rotation, "F_5: x^2+1 = (x-2)(x-3) splits, so no planar block exists (found " +
                             std::to_string(b5.size()) + "); a block with b^2 = -1 has char poly x^2 - 1, not x^2 + 1");
  const Field f3 = Field::prime(3);
  const auto b3 = planar_blocks(companion(testing::poly(f3, {1, 0, 1})));
  const bool f3_fallback = b3.size() == 1 && b3[0].form == BlockForm::Companion;
  o.require(f3_fallback, "F_3: c0 - a^2 = 1 is a square, so x^2+1 gives a rotation block with b = 1, not a fallback");
  return o;
}

Outcome factor_check() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> finite_degree(1, 10);
  const Field fields[] = {Field::prime(2), Field::prime(3), Field::prime(5)};
  std::size_t inputs = 0, checked = 0;
  auto round_trip = [&](const Polynomial& p) {
    ++inputs;
    const Factorization fac = factor(p, rng());
    o.require(fac.expand() == p, "factor-multiply round trip failed for " + p.to_string());
    for (const auto& [g, e] : fac.factors) {
      (void)e;
      ++checked;
      o.require(g.is_monic() && testing::irreducible_oracle(g), "reported factor " + g.to_string() + " is reducible");
    }
  };
  for (int i = 0; i < 1000; ++i) {
    Polynomial p = testing::random_poly(fields[i % 3], finite_degree(rng), rng);
    if (!p.is_zero()) round_trip(p);
  }
  const Field q = Field::rational();
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  std::uniform_int_distribution<int> degree(1, 4);
  for (int i = 0; i < 100; ++i) {
    // Half of the inputs are products of two small factors so that nontrivial
    // factorizations occur.
    auto small = [&](int d) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1);
      for (auto& x : c) x = coeff(rng);
      if (c.back() == 0) c.back() = 1;
      return Polynomial::from_ints(q, c);
    };
    const Polynomial p = i % 2 ? small(degree(rng)) * small(degree(rng)) : small(degree(rng) * 2);
    if (!p.is_zero()) round_trip(p);
  }
  if (o.passed) o.detail = std::to_string(inputs) + " polynomials, " + std::to_string(checked) + " factors";
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(SYSREP_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

Outcome cli_check() {
  Outcome o;
  const std::string fixtures = FIXTURE_DIR, golden = GOLDEN_DIR;
  for (const char* name : {"fibonacci_f2", "quarter_turn_f3", "identity_f3", "extension_f4", "mixed_f5"}) {
    const std::string doc = fixtures + "/" + name + ".json";
    const std::pair<const char*, std::string> runs[] = {
        {"analyze", "analyze " + doc + " --json"},
        {"orbits", "orbits " + doc + " --method both --json"},
        {"decompose", "decompose " + doc + " --json"},
    };
    for (const auto& [command, args] : runs) {
      const std::string want = read_file(golden + "/" + name + "." + command + ".json");
      const std::string first = capture(args), second = capture(args);
      o.require(!want.empty() && first == want && second == want, std::string(command) + " differs from golden for " + name);
    }
    const std::string one = capture("orbits " + doc + " --method enumerate --json --workers 1");
    for (int w : {2, 4}) {
      o.require(!one.empty() && capture("orbits " + doc + " --method enumerate --json --workers " + std::to_string(w)) == one,
                std::string("enumeration depends on the worker count for ") + name);
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 homomorphism law", kHomomorphismBudget, homomorphism_law},
      {"2 primary decomposition", kDecompositionBudget, primary_decomposition_check},
      {"3 invariant factors", kInvariantBudget, invariant_factor_check},
      {"4 period and divisibility", kPeriodBudget, period_check},
      {"5 orbit census equivalence", kCensusBudget, census_check},
      {"6 algebra homomorphism and module action", kAlgebraBudget, algebra_check},
      {"7 planar blocks", kPlanarBudget, planar_check},
      {"8 factorization round trip", kFactorBudget, factor_check},
      {"9 CLI determinism", kCliBudget, cli_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.budget) o.require(false, "over the time budget");
    failed += o.passed ? 0 : 1;
    std::printf("%s  criterion %s  (%.2f s, budget %.0f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.name, seconds, c.budget,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  return failed;
}
