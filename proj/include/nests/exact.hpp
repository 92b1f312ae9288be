#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nests {

/// Arbitrary-precision rational, always stored in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den; throws InvalidInstance when den is zero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "n" or "n/d".
std::string to_string(const Rational& q);

/// An element a + b*sqrt(2) of the quadratic field Q[sqrt 2].
///
/// Comparison is exact. The sign of p + q*sqrt(2) is read off directly when
/// p and q agree in sign; otherwise it is decided by comparing p^2 with 2q^2.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
    FieldElement(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)

    static FieldElement sqrt2() { return {Rational(0), Rational(1)}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_rational() const { return b_ == 0; }

    /// -1, 0 or 1.
    int sign() const;

    /// Largest integer not above the value.
    std::int64_t floor() const;

    /// Nearest double; for display and for seeding exact searches only.
    double approx() const;

    FieldElement operator-() const { return {-a_, -b_}; }
    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    /// Throws InvalidInstance on division by zero.
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y);

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y);

private:
    Rational a_ = 0;
    Rational b_ = 0;
};

/// Midpoint of x and y.
FieldElement midpoint(const FieldElement& x, const FieldElement& y);

/// Human-readable form such as "1/2", "√2" or "1 + 3/2√2".
std::string to_string(const FieldElement& x);

}  // namespace nests
