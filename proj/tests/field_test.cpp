#include <doctest.h>

#include "sysrep/field.hpp"

using namespace sysrep;

TEST_CASE("prime field arithmetic") {
  const Field f5 = Field::prime(5);
  CHECK((f5.from_int(1) / f5.from_int(2)) == f5.from_int(3));
  CHECK((f5.from_int(4) + f5.from_int(3)).residue() == 2);
  CHECK((f5.from_int(-1)).residue() == 4);
  CHECK(f5.from_int(2).inverse() * f5.from_int(2) == f5.one());
  CHECK_THROWS_AS(f5.one() / f5.zero(), Error);
  try {
    (void)(f5.one() / f5.zero());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
}

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Field q = Field::rational();
  const Element third = q.from_rational(mpq_class(1, 3));
  const Element sixth = q.from_rational(mpq_class(1, 6));
  CHECK((third + sixth).to_string() == "1/2");
  CHECK(q.from_rational(mpq_class(4, -6)).to_string() == "-2/3");
  CHECK(q.from_int(-3).to_string() == "-3");
  CHECK((third * q.from_int(3)).is_one());
}

TEST_CASE("extension field F_4") {
  const Field f4 = Field::extension(2, {1, 1, 1});
  const Element y = f4.from_coefficients(std::vector<std::uint32_t>{0, 1});
  const Element y2 = y * y;
  CHECK(y2 == f4.from_coefficients(std::vector<std::uint32_t>{1, 1}));
  CHECK(y2.to_string() == "[1,1]");
  CHECK(f4.order() == 4);
  CHECK(f4.characteristic() == 2);
  CHECK(y.pow(3).is_one());
}

TEST_CASE("field descriptors are validated") {
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_NOTHROW(Field::prime(2147483647U));
  // y^2 + 1 = (y + 1)^2 over F_2
  CHECK_THROWS_AS(Field::extension(2, {1, 0, 1}), Error);
  CHECK_THROWS_AS(Field::extension(3, {1, 0, 2}), Error);  // not monic
  CHECK(Field::prime(7) == Field::prime(7));
  CHECK_FALSE(Field::prime(7) == Field::prime(11));
}

TEST_CASE("mixing fields is rejected") {
  const Element a = Field::prime(5).one();
  const Element b = Field::prime(7).one();
  try {
    (void)(a + b);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("square roots") {
  const Field f13 = Field::prime(13);
  CHECK(sqrt(f13.from_int(4)) == f13.from_int(2));
  CHECK_FALSE(sqrt(Field::prime(3).from_int(2)).has_value());
  const Field q = Field::rational();
  CHECK(sqrt(q.from_rational(mpq_class(9, 4)))->to_string() == "3/2");
  CHECK_FALSE(sqrt(q.from_int(2)).has_value());
  CHECK_FALSE(sqrt(q.from_int(-4)).has_value());
  CHECK(sqrt(f13.zero())->is_zero());

  // Large prime takes the Tonelli-Shanks path.
  const Field big = Field::prime(1000003);
  for (std::int64_t r : {2, 17, 123456, 999999}) {
    const Element sq = big.from_int(r) * big.from_int(r);
    const auto root = sqrt(sq);
    REQUIRE(root.has_value());
    CHECK(*root * *root == sq);
    CHECK(root->residue() <= 1000003 / 2);
  }

  const Field f8 = Field::extension(2, {1, 1, 0, 1});
  for (std::uint64_t i = 0; i < 8; ++i) {
    const Element a = f8.element_at(i);
    const auto root = sqrt(a);
    REQUIRE(root.has_value());
    CHECK(*root * *root == a);
  }

  const Field f9 = Field::extension(3, {1, 0, 1});
  int squares = 0;
  for (std::uint64_t i = 1; i < 9; ++i) {
    const auto root = sqrt(f9.element_at(i));
    if (root) {
      ++squares;
      CHECK(*root * *root == f9.element_at(i));
    }
  }
  CHECK(squares == 4);
}

TEST_CASE("sqrt of a square squares back") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::prime(3), Field::prime(101), Field::prime(65537), Field::extension(5, {2, 0, 1})}) {
    for (int i = 0; i < 200; ++i) {
      const Element r = f.random(rng);
      const auto root = sqrt(r * r);
      REQUIRE(root.has_value());
      CHECK(*root * *root == r * r);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(2024);
  const std::vector<Field> fields = {Field::prime(2), Field::prime(13), Field::prime(2147483629U),
                                     Field::extension(2, {1, 1, 0, 1}), Field::extension(3, {1, 0, 1}),
                                     Field::rational()};
  for (const Field& f : fields) {
    for (int i = 0; i < 10000; ++i) {
      const Element a = f.random(rng), b = f.random(rng), c = f.random(rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == f.zero());
      if (!a.is_zero()) REQUIRE(a * a.inverse() == f.one());
    }
  }
}

TEST_CASE("Fermat: a^p = a on F_p") {
  for (std::uint32_t p = 2; p <= 97; ++p) {
    if (!is_prime_u32(p)) continue;
    const Field f = Field::prime(p);
    for (std::uint32_t a = 0; a < p; ++a) REQUIRE(f.from_int(a).pow(p) == f.from_int(a));
  }
}

TEST_CASE("enumeration and ordering") {
  const Field f9 = Field::extension(3, {1, 0, 1});
  for (std::uint64_t i = 0; i < 9; ++i) CHECK(f9.index_of(f9.element_at(i)) == i);
  CHECK(f9.element_at(1).to_string() == "[1,0]");
  CHECK(f9.element_at(3).to_string() == "[0,1]");
  CHECK(f9.element_at(1).compare(f9.element_at(3)) > 0);
  const Field q = Field::rational();
  CHECK(q.from_int(-1).compare(q.from_rational(mpq_class(1, 2))) < 0);
  CHECK(Field::prime(5).name() == "F_5");
  CHECK(q.name() == "Q");
}
