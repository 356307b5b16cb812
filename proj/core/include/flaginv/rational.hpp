#pragma once

#include <gmpxx.h>

#include <string>

namespace flaginv {

// Arbitrary-precision rational, always held in canonical form: reduced
// fraction, positive denominator.  Equality is therefore structural.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // implicit by design: integers embed
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    // Accepts "p" or "p/q" with an optional leading sign.  Rejects anything
    // else, including a zero denominator.
    static Rational parse(const std::string& text);

    // Prints "p" when the denominator is 1, "p/q" otherwise.  parse() of the
    // output reproduces the value bit-exactly.
    std::string str() const;

    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const;
    Rational reciprocal() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

} // namespace flaginv
