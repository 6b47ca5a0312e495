#include "recimap/scalar.hpp"

#include "doctest.h"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

using namespace recimap;

namespace {

Scalar sqrt2(long long num, long long den) { return Scalar(0, Rational(num, den), 2); }

std::mt19937 rng(20240811);

Scalar random_rational() {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 20);
    return Scalar(num(rng), den(rng));
}

Scalar random_quadratic(std::int64_t d) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 20);
    return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
}

// 128-bit float evaluation, the independent comparison oracle.
using quad = boost::multiprecision::cpp_bin_float_quad;

quad to_quad(const Scalar& x) {
    quad a = quad(numerator(x.rational_part())) / quad(denominator(x.rational_part()));
    if (x.is_rational()) return a;
    quad b = quad(numerator(x.radical_part())) / quad(denominator(x.radical_part()));
    return a + b * sqrt(quad(x.field_d()));
}

}  // namespace

TEST_CASE("rational arithmetic identities") {
    CHECK(Scalar(1, 3) + Scalar(2, 3) == Scalar(1));
    CHECK(Scalar(2, 6) == Scalar(1, 3));
    CHECK(Scalar(1, 3) * Scalar(2) == Scalar(2, 3));
}

TEST_CASE("conjugate product in Q(sqrt(2))") {
    const Scalar x = Scalar(1) + sqrt2(1, 1);
    const Scalar y = Scalar(1) - sqrt2(1, 1);
    CHECK(x * y == Scalar(-1));
}

TEST_CASE("comparisons are exact") {
    CHECK(compare(Scalar(1, 3), Scalar(1, 2)) == Ordering::LT);
    CHECK(compare(Scalar(1) - sqrt2(1, 1), Scalar(0)) == Ordering::LT);
    // Cross-multiplication oracle: 7/5 < sqrt(2) iff 49/25 < 2 iff 49 < 50.
    REQUIRE(49 < 50);
    CHECK(compare(Scalar(7, 5), sqrt2(1, 1)) == Ordering::LT);
}

TEST_CASE("is_rational tracks canonical form") {
    CHECK(Scalar(3, 7).is_rational());
    CHECK(!sqrt2(1, 2).is_rational());
    CHECK((sqrt2(1, 1) * sqrt2(1, 1) / Scalar(2)).is_rational());
    CHECK(sqrt2(1, 1) * sqrt2(1, 1) / Scalar(2) == Scalar(1));
}

TEST_CASE("parse and format round-trip") {
    CHECK(parse_scalar("1/3") == Scalar(1, 3));
    CHECK(parse_scalar("1/4+1/4*sqrt(5)") == Scalar(Rational(1, 4), Rational(1, 4), 5));
    CHECK(format_scalar(parse_scalar("2/6")) == "1/3");
    CHECK(format_scalar(parse_scalar("-1/4+1/4*sqrt(2)")) == "-1/4+1/4*sqrt(2)");
    CHECK(format_scalar(parse_scalar("0+1/2*sqrt(2)")) == "0+1/2*sqrt(2)");
    CHECK(format_scalar(parse_scalar("1-2/3*sqrt(3)")) == "1-2/3*sqrt(3)");

    for (int i = 0; i < 200; ++i) {
        const Scalar x = random_quadratic(5);
        CHECK(parse_scalar(format_scalar(x)) == x);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("1+2*sqrt(4)"), std::invalid_argument);   // not square-free
    CHECK_THROWS_AS(parse_scalar("1+2*sqrt(12)"), std::invalid_argument);  // 12 = 4*3
    CHECK_THROWS_AS(parse_scalar("1+2*sqrt(2)x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("sqrt(2)"), std::invalid_argument);
}

TEST_CASE("field errors") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    const Scalar a = random_quadratic(2);
    const Scalar b = random_quadratic(3);
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK_THROWS_AS(Scalar(Rational(1), Rational(1), 8), std::invalid_argument);
    CHECK_THROWS_AS(Scalar(Rational(1), Rational(1), 1), std::invalid_argument);
}

TEST_CASE("field axioms on random scalars") {
    for (int i = 0; i < 300; ++i) {
        const Scalar x = random_quadratic(2), y = random_quadratic(2), z = random_quadratic(2);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Scalar(0));
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
    }
}

TEST_CASE("order is total, transitive, translation-invariant") {
    for (int i = 0; i < 300; ++i) {
        const Scalar x = random_quadratic(3), y = random_quadratic(3), z = random_quadratic(3);
        const bool lt = x < y, gt = x > y, eq = x == y;
        CHECK((lt + gt + eq) == 1);
        if (lt) CHECK(x + z < y + z);
        if (x < y && y < z) CHECK(x < z);
    }
}

TEST_CASE("compare agrees with 128-bit float evaluation") {
    int checked = 0;
    for (int i = 0; i < 10'000; ++i) {
        const Scalar x = (i % 2 == 0) ? random_quadratic(2) : random_rational();
        const Scalar y = (i % 3 == 0) ? random_quadratic(2) : random_rational();
        const quad fx = to_quad(x), fy = to_quad(y);
        if (x == y) continue;  // float ties are uninformative
        CHECK((x < y) == (fx < fy));
        ++checked;
    }
    CHECK(checked > 9'000);
}

TEST_CASE("integer powers") {
    CHECK(Scalar(2).pow(10) == Scalar(1024));
    CHECK(Scalar(2).pow(-2) == Scalar(1, 4));
    CHECK(Scalar(2).pow(0) == Scalar(1));
    CHECK(sqrt2(1, 1).pow(2) == Scalar(2));
}
