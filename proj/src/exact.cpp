#include "nests/exact.hpp"

#include <cmath>

#include "nests/errors.hpp"

namespace nests {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidInstance("rational with zero denominator");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

int sign_of(const Rational& q) { return q.sign(); }

}  // namespace

int FieldElement::sign() const {
    const int sa = sign_of(a_);
    const int sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of a^2 and 2b^2 wins.
    const Rational lhs = a_ * a_;
    const Rational rhs = 2 * b_ * b_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    const Rational norm = y.a_ * y.a_ - 2 * y.b_ * y.b_;
    if (norm == 0) throw InvalidInstance("division by zero in Q[sqrt 2]");
    const FieldElement conj(y.a_ / norm, -y.b_ / norm);
    return x * conj;
}

double FieldElement::approx() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(2.0);
}

std::int64_t FieldElement::floor() const {
    auto k = static_cast<std::int64_t>(std::floor(approx()));
    while (FieldElement(k) > *this) --k;
    while (FieldElement(k + 1) <= *this) ++k;
    return k;
}

FieldElement midpoint(const FieldElement& x, const FieldElement& y) {
    const Rational half(1, 2);
    return {(x.a() + y.a()) * half, (x.b() + y.b()) * half};
}

std::string to_string(const FieldElement& x) {
    if (x.is_rational()) return to_string(x.a());
    std::string root;
    if (x.b() == 1) {
        root = "√2";
    } else if (x.b() == -1) {
        root = "-√2";
    } else {
        root = to_string(x.b()) + "√2";
    }
    if (x.a() == 0) return root;
    if (x.b() < 0) return to_string(x.a()) + " - " + root.substr(1);
    return to_string(x.a()) + " + " + root;
}

}  // namespace nests
