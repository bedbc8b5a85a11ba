#include "doctest.h"

#include "sfill/continued_fraction.hpp"
#include "sfill/errors.hpp"
#include "sfill/rational.hpp"
#include "support/oracles.hpp"

using namespace sfill;

namespace {

Rational q(const char* s) { return Rational::parse(s); }
NegCF cf(const char* s) { return NegCF::parse(s); }

}  // namespace

TEST_SUITE("rationals") {

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(BigInt(6), BigInt(-4)) == q("-3/2"));
    CHECK(Rational(BigInt(0), BigInt(-5)) == Rational(0));
    CHECK(q("-3/2").den() == 2);
    CHECK(q("1/2") + q("1/3") == q("5/6"));
    CHECK(q("1/2") - q("1/3") == q("1/6"));
    CHECK(q("2/3") * q("-9/4") == q("-3/2"));
    CHECK(q("2/3") / q("-4/9") == q("-3/2"));
    CHECK(q("-7/5").reciprocal() == q("-5/7"));
    CHECK(q("-7/5") < q("-4/3"));
    CHECK(q("3") > q("29/10"));
    CHECK(q(" - 7 / 5 ") == q("-7/5"));
    CHECK(q("+4/8").to_string() == "1/2");
    CHECK(q("-6/3").to_string() == "-2");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
    CHECK_THROWS_AS(Rational(0).reciprocal(), DomainError);
    CHECK_THROWS_AS(q("1/2") / Rational(0), DomainError);
}

TEST_CASE("rational parse errors carry positions") {
    try {
        (void)q("1/x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    try {
        (void)q("3/0");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(q(""), ParseError);
    CHECK_THROWS_AS(q("1/2x"), ParseError);
    CHECK_THROWS_AS(q("--1"), ParseError);
}

TEST_CASE("big integers do not overflow") {
    Rational big = q("123456789012345678901234567890/7");
    CHECK(big == q("17636684144620811271604938270"));
    CHECK((big * big).num() == BigInt("311052627617119117357047991072167322193916432650510592900"));
    CHECK(neg_cf_eval(neg_cf_expand(-big)) == -big);
}

TEST_CASE("floor_decompose") {
    auto a = floor_decompose(q("-7/5"));
    CHECK(a.whole == -2);
    CHECK(a.frac == q("3/5"));
    auto b = floor_decompose(Rational(3));
    CHECK(b.whole == 3);
    CHECK(b.frac == Rational(0));
    auto c = floor_decompose(Rational(-3));
    CHECK(c.whole == -3);
    CHECK(c.frac == Rational(0));
    CHECK(sfill::floor(q("7/5")) == 1);
    CHECK(sfill::ceil(q("-7/5")) == -1);
    CHECK(sfill::ceil(q("7/5")) == 2);
}

TEST_CASE("extended rationals") {
    auto inf = ExtendedRational::infinity();
    CHECK(inf.is_infinite());
    CHECK(inf.to_string() == "inf");
    CHECK(inf.to_farey_string() == "-1/0");
    CHECK(ExtendedRational::from_homogeneous(3, 0) == inf);
    CHECK(ExtendedRational::from_homogeneous(-6, -4) == ExtendedRational(q("3/2")));
    CHECK(ExtendedRational::parse("inf") == inf);
    CHECK(ExtendedRational::parse("-1/0") == inf);
    CHECK(ExtendedRational::parse("-4/6").value() == q("-2/3"));
    CHECK_THROWS_AS(inf.value(), DomainError);
    CHECK_THROWS(ExtendedRational::from_homogeneous(0, 0));
}

TEST_CASE("neg_cf_expand examples") {
    CHECK(neg_cf_expand(q("-7/5")) == cf("-2,-2,-3"));
    CHECK(neg_cf_expand(q("-7/2")) == cf("-4,-2"));
    CHECK(neg_cf_expand(Rational(-2)) == cf("-2"));
    CHECK(neg_cf_expand(q("-7/5")).to_string() == "-2,-2,-3");
    CHECK_THROWS_AS(neg_cf_expand(Rational(-1)), DomainError);
    CHECK_THROWS_AS(neg_cf_expand(q("-1/2")), DomainError);
    CHECK_THROWS_AS(neg_cf_expand(Rational(3)), DomainError);
}

TEST_CASE("neg_cf_eval examples") {
    CHECK(neg_cf_eval(cf("-2,-2,-3")) == q("-7/5"));
    CHECK(neg_cf_eval(cf("-4,-2")) == q("-7/2"));
    CHECK(neg_cf_eval(cf("-2")) == Rational(-2));
}

TEST_CASE("NegCF rejects entries above -2") {
    CHECK_THROWS_AS(NegCF({}), DomainError);
    CHECK_THROWS_AS(NegCF({BigInt(-2), BigInt(-1)}), DomainError);
    CHECK_THROWS(cf("-2,,-3"));
    CHECK(cf(" -2 , -3 ") == cf("-2,-3"));
    CHECK(cf("-2,-2,-3").weight() == 7);
    CHECK(cf("-2,-2,-3").prefix(2) == cf("-2,-2"));
}

TEST_CASE("riemenschneider_dual examples") {
    CHECK(riemenschneider_dual(cf("-2,-2,-3")) == cf("-4,-2"));
    CHECK(riemenschneider_dual(cf("-4,-2")) == cf("-2,-2,-3"));
    CHECK(riemenschneider_dual(cf("-2")) == cf("-2"));
    CHECK(riemenschneider_dual(cf("-3")) == cf("-2,-2"));
    CHECK(riemenschneider_dual(cf("-3")) == neg_cf_expand(q("-3/2")));
}

TEST_CASE("complementary_truncation examples") {
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(complementary_truncation(cf("-2,-2,-3"), cf("-2,-2,-2")) == P{1, 1});
    CHECK(complementary_truncation(cf("-2,-2,-3"), cf("-4,-2,-2")) == P{3, 2});
    CHECK(complementary_truncation(cf("-2"), cf("-2,-2")) == P{1, 1});
    // prefixes of the example: 5/7 + 2/7 = 1
    CHECK(-neg_cf_eval(cf("-2,-2,-3")).reciprocal() + -neg_cf_eval(cf("-4,-2")).reciprocal() == Rational(1));
    // r + s <= 1 violates the precondition
    CHECK_THROWS_AS(complementary_truncation(cf("-3"), cf("-3")), PreconditionError);
}

TEST_CASE("expansion properties on random rationals") {
    oracle::Rng rng(20261016);
    for (int i = 0; i < 2000; ++i) {
        Rational x = oracle::random_below_minus_one(rng, 60, 12);
        NegCF a = neg_cf_expand(x);
        for (const auto& c : a.coeffs()) REQUIRE(c <= -2);
        REQUIRE(neg_cf_eval(a) == x);
        REQUIRE(oracle::to_digits(a) == oracle::cf_digits(x));
        REQUIRE(oracle::cf_value(oracle::to_digits(a)) == x);
    }
}

TEST_CASE("dual properties on random strings") {
    oracle::Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        Rational x = oracle::random_below_minus_one(rng, 80, 9);
        NegCF a = neg_cf_expand(x);
        NegCF b = riemenschneider_dual(a);
        REQUIRE(oracle::to_digits(b) == oracle::arithmetic_dual(oracle::to_digits(a)));
        REQUIRE(riemenschneider_dual(b) == a);
        // trace identity
        BigInt n = a.size(), m = b.size();
        REQUIRE(a.weight() + b.weight() == 3 * (n + m) - 2);
        // eval-duals: -1/eval(a) + -1/eval(b) = 1
        REQUIRE(-neg_cf_eval(a).reciprocal() + -neg_cf_eval(b).reciprocal() == Rational(1));
    }
}

TEST_CASE("complementary_truncation agrees with prefix brute force") {
    oracle::Rng rng(99);
    int checked = 0;
    while (checked < 3000) {
        Rational r = oracle::random_unit_rational(rng, 40);
        Rational s = oracle::random_unit_rational(rng, 40);
        if (r + s <= Rational(1)) continue;
        NegCF a = neg_cf_expand(-r.reciprocal());
        NegCF b = neg_cf_expand(-s.reciprocal());
        auto pairs = oracle::truncation_pairs(oracle::to_digits(a), oracle::to_digits(b));
        REQUIRE(pairs.size() == 1);
        auto got = complementary_truncation(a, b);
        REQUIRE(got == pairs.front());
        // the prefixes are duals of each other
        REQUIRE(riemenschneider_dual(a.prefix(got.first)) == b.prefix(got.second));
        ++checked;
    }
}

}  // TEST_SUITE
