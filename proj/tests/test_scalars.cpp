#include <catch2/catch_amalgamated.hpp>

#include <cellalg/field_spec.hpp>
#include <cellalg/prime_field.hpp>
#include <cellalg/rational.hpp>

using namespace cellalg;

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational::parse("2/4").str() == "1/2");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("0/7").str() == "0");
  CHECK(Rational::parse("42").str() == "42");
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK((Rational(7, 3) / Rational(7, 3)).is_one());
  CHECK(Rational(-5).str() == "-5");
  CHECK((-Rational(1, 2)).str() == "-1/2");
  CHECK(Rational(3, 4).inverse().str() == "4/3");
}

TEST_CASE("rational parse rejects malformed literals") {
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1, 2).zero().inverse());
}

TEST_CASE("rational arithmetic never overflows") {
  // 100! / 99! = 100 exactly
  Rational f(1);
  for (long i = 1; i <= 100; ++i) f *= Rational(i);
  Rational g(1);
  for (long i = 1; i <= 99; ++i) g *= Rational(i);
  CHECK((f / g) == Rational(100));
}

TEST_CASE("prime field canonical residues") {
  const Fp z = Fp::zero_of(7);
  CHECK(z.from_int(10).residue() == 3);
  CHECK(z.from_int(-1).residue() == 6);
  CHECK(z.from_int(-14).residue() == 0);
  CHECK((z.from_int(3) + z.from_int(5)).residue() == 1);
  CHECK((z.from_int(3) - z.from_int(5)).residue() == 5);
  CHECK((z.from_int(3) * z.from_int(5)).residue() == 1);
  CHECK((-z.from_int(2)).residue() == 5);
  CHECK(z.one().is_one());
}

TEST_CASE("prime field inverses") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 101ull, 65537ull}) {
    const Fp z = Fp::zero_of(p);
    for (std::uint64_t v = 1; v < std::min<std::uint64_t>(p, 50); ++v) {
      const Fp x(v, p);
      CHECK((x * x.inverse()).is_one());
    }
  }
  CHECK_THROWS(Fp::zero_of(5).inverse());
}

TEST_CASE("prime field large modulus multiplication") {
  const std::uint64_t p = 2305843009213693951ull;  // 2^61 - 1
  const Fp z = Fp::zero_of(p);
  const Fp a(p - 1, p), b(p - 2, p);
  CHECK((a * b) == z.from_int(2));  // (-1)(-2) = 2
  CHECK((a * a.inverse()).is_one());
}

TEST_CASE("mixing moduli is a field mismatch") {
  CHECK_THROWS_AS(Fp(1, 3) + Fp(1, 5), FieldMismatch);
  CHECK_THROWS_AS(Fp(1, 3) == Fp(1, 5), FieldMismatch);
}

TEST_CASE("field spec validates primality") {
  CHECK(FieldSpec::gf(2).modulus() == 2);
  CHECK(FieldSpec::gf(2305843009213693951ull).modulus() ==
        2305843009213693951ull);
  CHECK_THROWS_AS(FieldSpec::gf(1), UnsupportedField);
  CHECK_THROWS_AS(FieldSpec::gf(4), UnsupportedField);
  CHECK_THROWS_AS(FieldSpec::gf(561), UnsupportedField);  // Carmichael
  CHECK_THROWS_AS(FieldSpec::gf(0), UnsupportedField);
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("Q").is_rationals());
  CHECK(FieldSpec::parse("rationals").is_rationals());
  CHECK(FieldSpec::parse("gf:3").modulus() == 3);
  CHECK(FieldSpec::parse("7").modulus() == 7);
  CHECK_THROWS_AS(FieldSpec::parse("gf:abc"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse(""), ParseError);
  CHECK(FieldSpec::parse("Q").str() == "Q");
  CHECK(FieldSpec::parse("gf:11").str() == "gf:11");
}

TEST_CASE("gf literal parsing") {
  CHECK(Fp::parse("5", 3).residue() == 2);
  CHECK(Fp::parse("-1", 3).residue() == 2);
  CHECK_THROWS_AS(Fp::parse("x", 3), ParseError);
  CHECK_THROWS_AS(Fp::parse("", 3), ParseError);
}
