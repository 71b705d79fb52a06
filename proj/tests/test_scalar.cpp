#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cybe/scalar.hpp"
#include "oracle.hpp"

using namespace cybe;

namespace {

const FieldSpec Q = FieldSpec::rational();

Scalar q(const char* text) { return Scalar::parse(text, Q); }

} // namespace

TEST_CASE("parse reduces to canonical form") {
  CHECK(q("2/4").to_string() == "1/2");
  CHECK(q("7/3").to_string() == "7/3");
  CHECK(q("-6/4").to_string() == "-3/2");
  CHECK(q("0/5").to_string() == "0");
  CHECK(q("-0").to_string() == "0");
  CHECK(q("4/2").to_string() == "2");
  CHECK(Scalar::parse("-1", FieldSpec::prime(5)).to_string() == "4");
  CHECK(Scalar::parse("12", FieldSpec::prime(5)).residue() == 2);
  CHECK(Scalar::parse("123456789012345678901234567890", Q).to_string() == "123456789012345678901234567890");
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "-", "1/", "/2", "--1", "1.5", " 1", "1 ", "+1", "1/2/3", "a", "1e3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Scalar::parse(bad, Q), InputError);
  }
  CHECK_THROWS_AS(q("1/0"), InputError);
  CHECK_THROWS_AS(Scalar::parse("1/2", FieldSpec::prime(5)), InputError);
}

TEST_CASE("prime field specs") {
  CHECK_THROWS_AS(FieldSpec::prime(2), InputError);
  CHECK_THROWS_AS(FieldSpec::prime(9), InputError);
  CHECK_THROWS_AS(FieldSpec::prime(1), InputError);
  CHECK_THROWS_AS(FieldSpec::prime(0), InputError);
  CHECK_THROWS_AS(FieldSpec::prime(2147483659ULL), InputError);
  CHECK(FieldSpec::prime(2147483647ULL).modulus() == 2147483647U);
  CHECK(FieldSpec::prime(5).to_string() == "F_5");
  CHECK(Q.to_string() == "Q");
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(7919));
  CHECK_FALSE(is_odd_prime(7917));
  CHECK_FALSE(is_odd_prime(2));
}

TEST_CASE("arithmetic examples") {
  const FieldSpec F5 = FieldSpec::prime(5);
  CHECK((q("1/2") + q("1/3")) == q("5/6"));
  CHECK((Scalar::from_int(3, F5) * Scalar::from_int(4, F5)).residue() == 2);
  CHECK((Scalar::one(F5) / Scalar::from_int(2, F5)).residue() == 3);
  CHECK((-Scalar::from_int(2, F5)).residue() == 3);
  CHECK((q("1/2") - q("1/2")).is_zero());
  CHECK(Scalar::from_int(-7, F5).residue() == 3);
  CHECK(q("-2/3").inverse() == q("-3/2"));
}

TEST_CASE("arithmetic errors") {
  const FieldSpec F5 = FieldSpec::prime(5);
  CHECK_THROWS_AS(q("1") / q("0"), Error);
  CHECK_THROWS_AS(Scalar::zero(F5).inverse(), Error);
  CHECK_THROWS_AS(q("1") + Scalar::one(F5), Error);
  CHECK_THROWS_AS((void)(Scalar::one(FieldSpec::prime(3)) == Scalar::one(F5)), Error);
  CHECK_THROWS_AS(q("1").residue(), Error);
  CHECK_THROWS_AS(Scalar::one(F5).rational(), Error);
}

TEST_CASE("field axioms on random triples") {
  for (FieldSpec f : {Q, FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::prime(101)}) {
    CAPTURE(f.to_string());
    oracle::Rng rng(0x5ca1a5 + f.modulus());
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    for (int trial = 0; trial < 1000; ++trial) {
      const Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
      REQUIRE(((a + b) + c) == (a + (b + c)));
      REQUIRE(((a * b) * c) == (a * (b * c)));
      REQUIRE((a + b) == (b + a));
      REQUIRE((a * b) == (b * a));
      REQUIRE((a * (b + c)) == (a * b + a * c));
      REQUIRE((a + zero) == a);
      REQUIRE((a * one) == a);
      REQUIRE((a + (-a)).is_zero());
      REQUIRE((a - b) == (a + (-b)));
      if (!b.is_zero()) {
        REQUIRE((b * b.inverse()) == one);
        REQUIRE(((a / b) * b) == a);
      }
      // Canonical text is unique.
      REQUIRE((a == b) == (a.to_string() == b.to_string()));
      REQUIRE(Scalar::parse(a.to_string(), f) == a);
    }
  }
}

TEST_CASE("rationals carry no fixed-width limit") {
  Scalar big = Scalar::from_int(3, Q);
  for (int i = 0; i < 8; ++i) big *= big; // 3^256
  const Scalar tiny = big.inverse();
  CHECK((big * tiny) == Scalar::one(Q));
  CHECK(big.to_string().size() > 100);
}
