// Exact arithmetic over Q and real quadratic extensions Q(sqrt(d)).
//
// A Scalar is a + b*sqrt(d) with arbitrary-precision rational a, b and a
// square-free integer radicand d >= 0 (d == 0 encodes a plain rational).
// All comparisons are decided exactly by sign evaluation, so breakpoint
// arithmetic downstream never depends on floating point.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace recimap {

using Rational = boost::multiprecision::cpp_rational;

enum class Ordering { LT, EQ, GT };

class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : a_(v) {}
    Scalar(long long v) : a_(v) {}
    Scalar(Rational a) : a_(std::move(a)) {}
    Scalar(long long num, long long den);

    // a + b*sqrt(d); throws std::invalid_argument unless d is 0 or a
    // square-free integer >= 2.
    Scalar(Rational a, Rational b, std::int64_t d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    std::int64_t field_d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // Sign of the real value a + b*sqrt(d): -1, 0, or +1.
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    Scalar inverse() const;
    // Integer power; negative exponents invert. pow(0) == 1, also for 0^0.
    Scalar pow(long long e) const;

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

private:
    void canonicalize();
    // Aligns fields for a binary operation; throws on d mismatch.
    static std::int64_t common_field(const Scalar& x, const Scalar& y);

    Rational a_{};
    Rational b_{};
    std::int64_t d_ = 0;
};

Ordering compare(const Scalar& x, const Scalar& y);

bool is_square_free(std::int64_t d);

// Text grammar (used verbatim in JSON configs and reports):
//   rational := ['-'] digits ['/' digits]
//   scalar   := rational [('+'|'-') rational '*sqrt(' digits ')']
Scalar parse_scalar(const std::string& text);
std::string format_scalar(const Scalar& x);

double to_double(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace recimap
