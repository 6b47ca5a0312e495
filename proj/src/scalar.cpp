#include "recimap/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace recimap {

namespace {

// Sign of a rational as -1/0/+1.
int rsign(const Rational& r) { return r.sign(); }

}  // namespace

Scalar::Scalar(long long num, long long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    a_ = Rational(num, den);
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw std::invalid_argument("Scalar: negative radicand");
    if (d_ == 1) throw std::invalid_argument("Scalar: radicand 1 must be reduced away");
    if (d_ != 0 && !is_square_free(d_))
        throw std::invalid_argument("Scalar: radicand " + std::to_string(d_) + " is not square-free");
    if (d_ == 0 && b_ != 0) throw std::invalid_argument("Scalar: radical coefficient with d = 0");
    canonicalize();
}

void Scalar::canonicalize() {
    if (b_ == 0) d_ = 0;
}

std::int64_t Scalar::common_field(const Scalar& x, const Scalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    throw std::domain_error("Scalar: mixing distinct quadratic fields sqrt(" + std::to_string(x.d_) +
                            ") and sqrt(" + std::to_string(y.d_) + ")");
}

int Scalar::sign() const {
    if (b_ == 0) return rsign(a_);
    if (a_ == 0) return rsign(b_);
    const int sa = rsign(a_);
    const int sb = rsign(b_);
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) decided by a^2 vs b^2*d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * d_;
    if (lhs == rhs)
        throw std::logic_error("Scalar: a^2 == b^2*d with square-free d, canonical form violated");
    return lhs > rhs ? sa : sb;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.d_ = d_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    d_ = common_field(*this, rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    d_ = common_field(*this, rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    const std::int64_t d = common_field(*this, rhs);
    // (a1 + b1*r)(a2 + b2*r) = a1*a2 + b1*b2*d + (a1*b2 + b1*a2)*r
    Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    canonicalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (b_ == 0) {
        Scalar r;
        r.a_ = 1 / a_;
        return r;
    }
    // 1/(a + b*r) = (a - b*r) / (a^2 - b^2*d); denominator is nonzero since
    // sqrt(d) is irrational for square-free d >= 2.
    const Rational n = a_ * a_ - b_ * b_ * d_;
    Scalar r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    r.canonicalize();
    return r;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Scalar& x, const Scalar& y) {
    Scalar::common_field(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Ordering compare(const Scalar& x, const Scalar& y) {
    const auto c = x <=> y;
    if (c < 0) return Ordering::LT;
    if (c > 0) return Ordering::GT;
    return Ordering::EQ;
}

bool is_square_free(std::int64_t d) {
    if (d < 2) return false;  // 0 and 1 are not admissible radicands
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_scalar: " + what + " at position " + std::to_string(i) +
                                    " in \"" + s + "\"");
    }
};

boost::multiprecision::cpp_int parse_digits(Cursor& c) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected digits");
    boost::multiprecision::cpp_int v = 0;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.s[c.i] - '0');
        ++c.i;
    }
    return v;
}

Rational parse_rational(Cursor& c) {
    bool neg = false;
    if (c.peek() == '-') {
        neg = true;
        ++c.i;
    }
    boost::multiprecision::cpp_int num = parse_digits(c);
    boost::multiprecision::cpp_int den = 1;
    if (c.peek() == '/') {
        ++c.i;
        den = parse_digits(c);
        if (den == 0) c.fail("zero denominator");
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

void expect(Cursor& c, const std::string& lit) {
    if (c.s.compare(c.i, lit.size(), lit) != 0) c.fail("expected \"" + lit + "\"");
    c.i += lit.size();
}

std::string format_rational(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    Cursor c{text};
    while (std::isspace(static_cast<unsigned char>(c.peek()))) ++c.i;
    Rational a = parse_rational(c);
    Rational b = 0;
    std::int64_t d = 0;
    if (c.peek() == '+' || c.peek() == '-') {
        const bool neg = c.peek() == '-';
        ++c.i;
        b = parse_rational(c);
        if (neg) b = -b;
        expect(c, "*sqrt(");
        boost::multiprecision::cpp_int rad = parse_digits(c);
        expect(c, ")");
        if (rad > 1000000000000LL) c.fail("radicand too large");
        d = rad.convert_to<std::int64_t>();
        if (d < 2) c.fail("radicand must be >= 2");
        if (!is_square_free(d)) c.fail("radicand is not square-free");
    }
    while (std::isspace(static_cast<unsigned char>(c.peek()))) ++c.i;
    if (!c.done()) c.fail("trailing input");
    return Scalar(std::move(a), std::move(b), d);
}

std::string format_scalar(const Scalar& x) {
    std::string out = format_rational(x.rational_part());
    if (!x.is_rational()) {
        const Rational& b = x.radical_part();
        if (b > 0)
            out += "+" + format_rational(b);
        else
            out += "-" + format_rational(Rational(-b));
        out += "*sqrt(" + std::to_string(x.field_d()) + ")";
    }
    return out;
}

double to_double(const Scalar& x) {
    double v = x.rational_part().convert_to<double>();
    if (!x.is_rational())
        v += x.radical_part().convert_to<double>() * std::sqrt(static_cast<double>(x.field_d()));
    return v;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << format_scalar(x); }

}  // namespace recimap
