#include <doctest.h>

#include <stdexcept>

#include "nacx/scalars.hpp"

using namespace nacx;

namespace {
struct Rng {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int64_t small() { return static_cast<int64_t>(next() % 2001) - 1000; }
  BigRat rat() {
    int64_t den = 0;
    while (den == 0) den = small();
    return BigRat(BigInt(small()), BigInt(den));
  }
};
}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(BigRat(1, 3) + BigRat(1, 6) == BigRat(1, 2));
  CHECK(BigInt(-2) * BigInt(-3) == BigInt(6));
  BigRat r(7, -14);
  CHECK(r == BigRat(-1, 2));
  CHECK(r.num() == BigInt(-1));
  CHECK(r.den() == BigInt(2));  // positive denominator after normalization
}

TEST_CASE("canonical representation") {
  BigRat a(2, 4), b(1, 2);
  CHECK(a.num() == b.num());
  CHECK(a.den() == b.den());
  CHECK(BigRat(0, 7).den() == BigInt(1));
  CHECK(BigRat(-6, -8) == BigRat(3, 4));
}

TEST_CASE("division by zero signals a domain error") {
  CHECK_THROWS_AS(BigRat(1) / BigRat(0), std::domain_error);
  CHECK_THROWS_AS(BigRat(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(BigInt(5) / BigInt(0), std::domain_error);
  CHECK_THROWS_AS(BigRat(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("decimal parsing and printing") {
  CHECK(BigInt::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK(BigInt::parse("-42").to_string() == "-42");
  CHECK(BigInt::parse("0").to_string() == "0");
  CHECK(BigRat::parse("-3/9").to_string() == "-1/3");
  CHECK(BigRat::parse("17").to_string() == "17");
  CHECK_THROWS_AS(BigInt::parse("12x"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::parse(""), std::invalid_argument);
}

TEST_CASE("big multiplication and division round trips") {
  BigInt a = BigInt::parse("987654321987654321987654321");
  BigInt b = BigInt::parse("123456789123456789");
  BigInt q, r;
  BigInt::divmod(a * b + BigInt(12345), b, q, r);
  CHECK(q == a);
  CHECK(r == BigInt(12345));
  CHECK(BigInt(2).pow(100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("truncated divmod identities on random pairs") {
  Rng rng{7};
  for (int i = 0; i < 500; ++i) {
    BigInt a(rng.small() * rng.small());
    BigInt b(rng.small());
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("field axioms hold on randomized rational triples") {
  Rng rng{42};
  for (int i = 0; i < 300; ++i) {
    BigRat a = rng.rat(), b = rng.rat(), c = rng.rat();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == BigRat(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == BigRat(1));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("gcd and comparisons") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
  CHECK(BigRat(1, 3) < BigRat(1, 2));
  CHECK(BigRat(-1, 2) < BigRat(1, 3));
  CHECK(BigInt(-5) < BigInt(3));
}
