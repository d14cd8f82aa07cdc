#include <doctest.h>

#include <set>

#include "support.hpp"
#include "sysrep/dynamics.hpp"
#include "sysrep/integer.hpp"

using namespace sysrep;
using testing::fibonacci;
using testing::poly;
using testing::vec;

namespace {

std::map<std::uint64_t, mpz_class> cycles(std::initializer_list<std::pair<std::uint64_t, long>> entries) {
  std::map<std::uint64_t, mpz_class> out;
  for (auto [t, c] : entries) out[t] = c;
  return out;
}

// Orbit lengths by walking every state as an explicit vector.
std::map<std::uint64_t, mpz_class> walk_orbits(const Matrix& a) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= f.order();
  std::set<std::vector<std::uint64_t>> seen;
  std::map<std::uint64_t, mpz_class> out;
  for (std::uint64_t s = 0; s < total; ++s) {
    Vector x(n);
    std::uint64_t rest = s;
    for (auto& e : x) {
      e = f.element_at(rest % f.order());
      rest /= f.order();
    }
    auto key = [&](const Vector& v) {
      std::vector<std::uint64_t> k;
      for (const auto& e : v) k.push_back(f.index_of(e));
      return k;
    };
    if (seen.count(key(x))) continue;
    std::uint64_t len = 0;
    Vector y = x;
    do {
      seen.insert(key(y));
      y = a * y;
      ++len;
    } while (!(y == x));
    out[len] += 1;
  }
  return out;
}

}  // namespace

TEST_CASE("order of a matrix") {
  CHECK(order_of_matrix(Matrix::identity(Field::prime(7), 3)) == 1);
  CHECK(order_of_matrix(fibonacci(Field::prime(2))) == 3);
  CHECK(order_of_matrix(companion(poly(Field::prime(3), {1, 0, 1}))) == 4);
  try {
    (void)order_of_matrix(Matrix::from_ints(Field::prime(3), {{1, 1}, {1, 1}}));
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
  // Jordan block over F_3: order 3.
  CHECK(order_of_matrix(Matrix::from_ints(Field::prime(3), {{1, 1}, {0, 1}})) == 3);

  std::mt19937_64 rng(12);
  for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(5), Field::extension(2, {1, 1, 1})}) {
    for (int i = 0; i < 25; ++i) {
      const Matrix a = testing::random_invertible(f, 1 + rng() % 4, rng);
      CHECK(order_of_matrix(a, rng()) == testing::naive_order(a));
    }
  }
}

TEST_CASE("rational matrices of finite order") {
  const Field q = Field::rational();
  CHECK(order_of_matrix(Matrix::from_ints(q, {{0, -1}, {1, -1}})) == 3);
  CHECK(order_of_matrix(testing::diagonal(q, {-1, 1, -1})) == 2);
  CHECK(order_of_matrix(companion(poly(q, {1, -1, 1}))) == 6);
  CHECK(order_of_matrix(companion(poly(q, {1, 1, 1, 1, 1}))) == 5);
  try {
    (void)order_of_matrix(Matrix::from_ints(q, {{-1, 1}, {0, -1}}));
    FAIL("expected InfiniteOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteOrder);
  }
}

TEST_CASE("point periods") {
  const Field f2 = Field::prime(2);
  const Representation fib(TimeGroup::integers(), fibonacci(f2));
  CHECK(point_period(fib, zero_vector(f2, 2)) == 1);
  CHECK(point_period(fib, vec(f2, {1, 0})) == 3);
  // Orbit (1,0) -> (1,1) -> (0,1) -> (1,0).
  CHECK(fib.evolve(vec(f2, {1, 0}), 1) == vec(f2, {1, 1}));
  CHECK(fib.evolve(vec(f2, {1, 0}), 2) == vec(f2, {0, 1}));

  const Field f3 = Field::prime(3);
  const Representation rot(TimeGroup::integers(), companion(poly(f3, {1, 0, 1})));
  CHECK(point_period(rot, vec(f3, {1, 0})) == 4);
  CHECK_THROWS_AS(point_period(rot, vec(f3, {1})), Error);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const Matrix a = testing::random_invertible(Field::prime(3), 1 + rng() % 4, rng);
    const Representation rep(TimeGroup::integers(), a);
    const std::uint64_t T = order_of_matrix(a);
    std::uint64_t best = 1;
    for (int k = 0; k < 10; ++k) {
      Vector x(a.rows());
      for (auto& e : x) e = a.field().random(rng);
      const std::uint64_t t = point_period(rep, x);
      CHECK(T % t == 0);
      CHECK(rep.evolve(x, static_cast<std::int64_t>(t)) == x);
      best = std::max(best, t);
    }
    // Unit vectors: the lcm of their periods is T.
    std::uint64_t l = 1;
    for (std::size_t j = 0; j < a.rows(); ++j) {
      l = *checked_lcm(l, point_period(rep, unit_vector(a.field(), a.rows(), j)));
    }
    CHECK(l == T);
  }
}

TEST_CASE("orbit census examples") {
  const Field f3 = Field::prime(3);
  const OrbitCensus id = orbit_census_analytic(Matrix::identity(f3, 1));
  CHECK(id.cycles == cycles({{1, 3}}));
  CHECK(id.states == 3);

  const Matrix rot = companion(poly(f3, {1, 0, 1}));
  const OrbitCensus r = orbit_census_analytic(rot);
  CHECK(r.cycles == cycles({{1, 1}, {4, 2}}));
  CHECK(r.fixed_points.at(1) == 1);
  CHECK(r.fixed_points.at(2) == 1);
  CHECK(r.fixed_points.at(4) == 9);
  CHECK(r.period == 4);
  CHECK(orbit_census_enumerate(rot) == r);

  const OrbitCensus fib = orbit_census_analytic(fibonacci(Field::prime(2)));
  CHECK(fib.cycles == cycles({{1, 1}, {3, 1}}));
  CHECK(fib.fixed_points.at(3) == 4);
  CHECK(orbit_census_enumerate(fibonacci(Field::prime(2))) == fib);

  CHECK(orbit_census_enumerate(Matrix::identity(Field::prime(2), 2)).cycles == cycles({{1, 4}}));
}

TEST_CASE("census paths agree with each other and with a naive walk") {
  std::mt19937_64 rng(77);
  for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(5), Field::extension(2, {1, 1, 1})}) {
    for (int i = 0; i < 15; ++i) {
      const std::size_t n = 1 + rng() % (f.order() <= 3 ? 5 : 3);
      const Matrix a = testing::random_invertible(f, n, rng);
      const OrbitCensus analytic = orbit_census_analytic(a);
      const OrbitCensus enumerated = orbit_census_enumerate(a);
      REQUIRE(analytic == enumerated);
      CHECK(enumerated.cycles == walk_orbits(a));
      mpz_class total = 0;
      for (const auto& [t, c] : analytic.cycles) {
        total += c * t;
        CHECK(analytic.period % t == 0);
      }
      CHECK(total == analytic.states);
      CHECK(analytic.cycles.at(1) >= 1);
      for (const auto& [d1, f1] : analytic.fixed_points) {
        for (const auto& [d2, f2] : analytic.fixed_points) {
          if (d2 % d1 == 0) CHECK(f1 <= f2);
        }
      }
    }
  }
}

TEST_CASE("enumeration is independent of the worker count") {
  std::mt19937_64 rng(5);
  const Matrix a = testing::random_invertible(Field::prime(3), 8, rng);
  const OrbitCensus one = orbit_census_enumerate(a, {kDefaultMaxStates, 1});
  for (unsigned w : {2U, 3U, 7U}) CHECK(orbit_census_enumerate(a, {kDefaultMaxStates, w}) == one);
}

TEST_CASE("enumeration guard") {
  const Matrix big = Matrix::identity(Field::prime(3), 13);  // 3^13 > 10^6
  try {
    (void)orbit_census_enumerate(big);
    FAIL("expected StateSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateSpaceTooLarge);
  }
  // Raising max_states past the hard cap does not lift the cap.
  try {
    (void)orbit_census_enumerate(Matrix::identity(Field::prime(2), 24), {1ULL << 40, 1});
    FAIL("expected StateSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateSpaceTooLarge);
  }
  // The analytic census has no such limit.
  const OrbitCensus c = orbit_census_analytic(Matrix::identity(Field::prime(3), 40));
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 3, 40);
  CHECK(c.cycles.at(1) == expected);
  CHECK_FALSE(state_count(Matrix::identity(Field::prime(3), 41)).has_value());
}
