#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nests/errors.hpp"
#include "nests/exact.hpp"

using namespace nests;

namespace {

FieldElement random_element(std::mt19937_64& rng) {
    auto small = [&] { return static_cast<std::int64_t>(rng() % 41) - 20; };
    auto den = [&] { return static_cast<std::int64_t>(rng() % 12) + 1; };
    return {make_rational(small(), den()), make_rational(small(), den())};
}

long double value(const FieldElement& x) {
    auto ld = [](const Rational& q) {
        return static_cast<long double>(numerator(q).convert_to<long long>()) /
               static_cast<long double>(denominator(q).convert_to<long long>());
    };
    return ld(x.a()) + ld(x.b()) * std::sqrt(2.0L);
}

}  // namespace

TEST(Rational, LowestTermsAndZeroDenominator) {
    EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
    EXPECT_EQ(to_string(make_rational(-4, 2)), "-2");
    EXPECT_THROW(make_rational(1, 0), InvalidInstance);
}

TEST(FieldElement, Sqrt2SquaresToTwo) {
    const FieldElement r = FieldElement::sqrt2();
    EXPECT_EQ(r * r, FieldElement(2));
    EXPECT_FALSE(r.is_rational());
    EXPECT_EQ(r.floor(), 1);
    EXPECT_EQ((-r).floor(), -2);
}

TEST(FieldElement, OrderingAgreesWithFloatingPoint) {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 20000; ++i) {
        const FieldElement x = random_element(rng);
        const FieldElement y = random_element(rng);
        const long double d = value(x) - value(y);
        if (x == y) {
            EXPECT_EQ(x <=> y, std::strong_ordering::equal);
            continue;
        }
        // Distinct elements of Q[sqrt 2] with these coefficients differ by far more than rounding.
        ASSERT_GT(std::fabs(d), 1e-12L);
        EXPECT_EQ(x < y, d < 0) << to_string(x) << " vs " << to_string(y);
        EXPECT_EQ((x - y).sign(), d < 0 ? -1 : 1);
    }
}

TEST(FieldElement, FieldAxiomsOnSamples) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const FieldElement x = random_element(rng);
        const FieldElement y = random_element(rng);
        const FieldElement z = random_element(rng);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + y - y, x);
        if (y.sign() != 0) EXPECT_EQ(x / y * y, x);
        EXPECT_EQ(midpoint(x, y), (x + y) * FieldElement(make_rational(1, 2)));
        EXPECT_LE(std::floor(value(x)) - x.floor(), 0.0L);
        EXPECT_GT(static_cast<long double>(x.floor()) + 1, value(x));
    }
}

TEST(FieldElement, DivisionByZeroThrows) { EXPECT_THROW(FieldElement(1) / FieldElement(0), InvalidInstance); }

TEST(FieldElement, Formatting) {
    EXPECT_EQ(to_string(FieldElement(make_rational(1, 2))), "1/2");
    EXPECT_EQ(to_string(FieldElement::sqrt2()), "√2");
    EXPECT_NEAR(FieldElement::sqrt2().approx(), 1.41421356, 1e-8);
}
