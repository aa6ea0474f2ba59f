#include <doctest.h>

#include "vlh/error.hpp"
#include "vlh/field.hpp"

using namespace vlh;

TEST_SUITE("field") {
  TEST_CASE("field names parse and print") {
    CHECK(Field::parse("q").is_rational());
    CHECK(Field::parse("f2").characteristic() == 2);
    CHECK(Field::parse("fp:7").characteristic() == 7);
    CHECK(Field::parse("fp:7").name() == "fp:7");
    CHECK_THROWS_AS(Field::parse("fp:9"), Error);
    CHECK_THROWS_AS(Field::parse("reals"), Error);
  }

  TEST_CASE("rationals stay in lowest terms with a positive denominator") {
    const Field Q = Field::rationals();
    const Scalar a = Scalar::parse(Q, "-6/4");
    CHECK(a.to_string() == "-3/2");
    CHECK(a.rational().get_den() == 2);
    CHECK((Scalar::parse(Q, "1/3") + Scalar::parse(Q, "1/6")).to_string() == "1/2");
    CHECK((Scalar::parse(Q, "2/3") * Scalar::parse(Q, "3/2")).is_one());
  }

  TEST_CASE("residues live in [0, p)") {
    const Field F = Field::prime(5);
    CHECK(Scalar(F, -1).residue() == 4);
    CHECK(Scalar(F, 12).residue() == 2);
    CHECK((Scalar(F, 2) * Scalar(F, 3)).residue() == 1);
    CHECK(Scalar(F, 3).inverse().residue() == 2);
    CHECK(Scalar::parse(F, "1/2").residue() == 3);
    CHECK(Scalar(Field::prime(2), 2).is_zero());
  }

  TEST_CASE("field axioms on a grid of small elements") {
    for (const Field F : {Field::rationals(), Field::prime(2), Field::prime(7)}) {
      for (int i = -3; i <= 3; ++i) {
        for (int j = -3; j <= 3; ++j) {
          const Scalar a(F, i), b(F, j), c(F, i * j + 1);
          CHECK(a + b == b + a);
          CHECK(a * b == b * a);
          CHECK(a * (b + c) == a * b + a * c);
          CHECK((a - b) + b == a);
          if (!b.is_zero()) CHECK((a / b) * b == a);
        }
      }
    }
  }

  TEST_CASE("errors") {
    const Field Q = Field::rationals();
    CHECK_THROWS_AS(Scalar::zero(Q).inverse(), Error);
    CHECK_THROWS_AS(Scalar::parse(Field::prime(2), "1/2"), Error);
    CHECK_THROWS_AS(Scalar::parse(Q, "abc"), Error);
    try {
      (void)(Scalar(Q, 1) + Scalar(Field::prime(2), 1));
      FAIL("mixing fields must throw");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::field_mismatch);
    }
  }
}
