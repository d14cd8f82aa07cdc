#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace sysrep;
using testing::fibonacci;
using testing::poly;

TEST_CASE("powers and inverses") {
  const Field f2 = Field::prime(2);
  const Matrix fib = fibonacci(f2);
  CHECK(pow(fib, 0).is_identity());
  CHECK(pow(fib, 3).is_identity());
  CHECK_FALSE(pow(fib, 2).is_identity());
  // Hand-computed: A^2 = [[0,1],[1,1]] mod 2.
  CHECK(pow(fib, 2) == Matrix::from_ints(f2, {{0, 1}, {1, 1}}));

  std::mt19937_64 rng(3);
  for (const Field& f : {Field::prime(7), Field::rational(), Field::extension(3, {1, 0, 1})}) {
    for (int i = 0; i < 20; ++i) {
      const Matrix a = testing::random_invertible(f, 1 + rng() % 5, rng);
      CHECK((pow(a, -1) * a).is_identity());
      CHECK(pow(a, -3) * pow(a, 5) == pow(a, 2));
    }
  }

  const Matrix singular = Matrix::from_ints(Field::prime(5), {{1, 2}, {2, 4}});
  try {
    (void)pow(singular, -1);
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
  CHECK_THROWS_AS(Matrix::from_ints(f2, {{1, 0}}) * Matrix::from_ints(f2, {{1, 0}}), Error);
}

TEST_CASE("rank and kernels") {
  const Field f3 = Field::prime(3);
  CHECK(kernel_basis(Matrix::identity(f3, 3)).empty());
  const auto ker = kernel_basis(Matrix(f3, 2, 2));
  REQUIRE(ker.size() == 2);
  CHECK(ker[0] == unit_vector(f3, 2, 0));
  CHECK(ker[1] == unit_vector(f3, 2, 1));
  // det [[1,2],[2,1]] = -3 = 0 mod 3.
  const Matrix m = Matrix::from_ints(f3, {{1, 2}, {2, 1}});
  CHECK(determinant(m).is_zero());
  CHECK(rank(m) == 1);
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero(m * k[0]));
  CHECK(k[0] == testing::vec(f3, {1, 1}));

  std::mt19937_64 rng(17);
  for (const Field& f : {Field::prime(2), Field::prime(5), Field::rational()}) {
    for (int i = 0; i < 100; ++i) {
      const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
      Matrix a(f, rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = rng() % 3 == 0 ? f.zero() : f.random(rng);
      }
      const auto basis = kernel_basis(a);
      CHECK(rank(a) + basis.size() == cols);
      for (const auto& v : basis) CHECK(is_zero(a * v));
      if (!basis.empty()) CHECK(rank(Matrix::from_columns(f, cols, basis)) == basis.size());
    }
  }
}

TEST_CASE("minimal and characteristic polynomials") {
  const Field q = Field::rational();
  CHECK(minimal_polynomial(Matrix::identity(q, 3)) == poly(q, {-1, 1}));
  const Field f2 = Field::prime(2);
  CHECK(minimal_polynomial(fibonacci(f2)) == poly(f2, {1, 1, 1}));
  const Polynomial g = poly(Field::prime(7), {3, 0, 5, 1, 1});
  CHECK(minimal_polynomial(companion(g)) == g);
  CHECK(characteristic_polynomial(companion(g)) == g);
  CHECK(characteristic_polynomial(Matrix::identity(q, 2)) == pow(poly(q, {-1, 1}), 2));
  const Field f5 = Field::prime(5);
  CHECK(characteristic_polynomial(testing::diagonal(f5, {1, 2})) == poly(f5, {2, 2, 1}));

  std::mt19937_64 rng(8);
  for (const Field& f : {Field::prime(2), Field::prime(3), Field::extension(2, {1, 1, 1}), Field::rational()}) {
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = 1 + rng() % 8;
      const Matrix a = f.is_finite() ? testing::random_structured_matrix(f, n, rng)
                                     : testing::random_structured_matrix(f, std::min<std::size_t>(n, 5), rng);
      const Polynomial m = minimal_polynomial(a);
      const Polynomial ch = characteristic_polynomial(a);
      CHECK(evaluate(m, a).is_zero());
      CHECK(ch.degree() == static_cast<int>(a.rows()));
      CHECK(ch.is_monic());
      CHECK((ch % m).is_zero());
      CHECK(evaluate(ch, a).is_zero());
      // No proper divisor annihilates A; the same primes divide m and ch.
      for (const auto& [p, e] : factor(m).factors) {
        (void)e;
        CHECK_FALSE(evaluate(m / p, a).is_zero());
      }
      CHECK(factor(ch).factors.size() == factor(m).factors.size());
    }
  }
}

TEST_CASE("Smith normal form") {
  const Field f2 = Field::prime(2);
  const auto id = smith_invariant_factors(Matrix::identity(f2, 2));
  REQUIRE(id.size() == 2);
  CHECK(id[0] == poly(f2, {1, 1}));
  CHECK(id[1] == poly(f2, {1, 1}));

  const auto fib = smith_invariant_factors(fibonacci(f2));
  REQUIRE(fib.size() == 2);
  CHECK(fib[0].is_one());
  CHECK(fib[1] == poly(f2, {1, 1, 1}));

  const Polynomial g = poly(Field::prime(5), {1, 2, 3, 4, 1});
  const auto comp = smith_invariant_factors(companion(g));
  REQUIRE(comp.size() == 4);
  CHECK(comp[0].is_one());
  CHECK(comp[2].is_one());
  CHECK(comp[3] == g);

  std::mt19937_64 rng(21);
  for (const Field& f : {Field::prime(3), Field::rational()}) {
    for (int i = 0; i < 30; ++i) {
      const Matrix a = testing::random_structured_matrix(f, 1 + rng() % 5, rng);
      const SmithForm s = smith_normal_form(a);
      for (std::size_t k = 0; k + 1 < s.invariant_factors.size(); ++k) {
        CHECK((s.invariant_factors[k + 1] % s.invariant_factors[k]).is_zero());
      }
      CHECK(s.invariant_factors.back() == minimal_polynomial(a));
      // Unimodular: the determinant at two points agrees with a nonzero constant.
      const Element d0 = determinant(s.left.evaluate_at(f.zero()));
      const Element d1 = determinant(s.left.evaluate_at(f.one()));
      CHECK_FALSE(d0.is_zero());
      CHECK(d0 == d1);
      CHECK_FALSE(determinant(s.right.evaluate_at(f.from_int(2))).is_zero());
    }
  }
}

TEST_CASE("matrices are capped and shape-checked") {
  const Field f = Field::prime(3);
  CHECK_THROWS_AS(Matrix(f, 2, 2, {f.one()}), Error);
  CHECK_THROWS_AS(minimal_polynomial(Matrix(f, 2, 3)), Error);
  CHECK_THROWS_AS(Matrix::from_ints(f, {{1, 2}, {3}}), Error);
  CHECK(companion(poly(f, {1, 0, 1})) == Matrix::from_ints(f, {{0, -1}, {1, 0}}));
}
