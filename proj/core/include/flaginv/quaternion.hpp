#pragma once

#include <string>

#include "flaginv/rational.hpp"

namespace flaginv {

// Quaternion a + bi + cj + dk with exact rational components.  Multiplication
// is non-commutative; norm_sq is multiplicative.
class RationalQuaternion {
public:
    RationalQuaternion() = default;
    RationalQuaternion(long n) : a_(n) {} // implicit: integers embed
    RationalQuaternion(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static RationalQuaternion i() { return {0, 1, 0, 0}; }
    static RationalQuaternion j() { return {0, 0, 1, 0}; }
    static RationalQuaternion k() { return {0, 0, 0, 1}; }

    // Text format: signed rational terms with optional unit suffix i, j, k,
    // e.g. "1/2+3i-k".  Bare units allowed on input; str() always prints an
    // explicit coefficient and omits zero terms ("0" for the zero quaternion).
    static RationalQuaternion parse(const std::string& text);
    std::string str() const;

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_real() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    const Rational& real_part() const { return a_; }
    RationalQuaternion conj() const { return {a_, -b_, -c_, -d_}; }
    Rational norm_sq() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }
    RationalQuaternion reciprocal() const;

    RationalQuaternion operator-() const { return {-a_, -b_, -c_, -d_}; }
    RationalQuaternion& operator+=(const RationalQuaternion& o);
    RationalQuaternion& operator-=(const RationalQuaternion& o);
    RationalQuaternion& operator*=(const RationalQuaternion& o) { return *this = *this * o; }

    friend RationalQuaternion operator+(RationalQuaternion x, const RationalQuaternion& y) { return x += y; }
    friend RationalQuaternion operator-(RationalQuaternion x, const RationalQuaternion& y) { return x -= y; }
    friend RationalQuaternion operator*(const RationalQuaternion& x, const RationalQuaternion& y);

    friend bool operator==(const RationalQuaternion& x, const RationalQuaternion& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const RationalQuaternion& x, const RationalQuaternion& y) { return !(x == y); }

private:
    Rational a_;
    Rational b_;
    Rational c_;
    Rational d_;
};

} // namespace flaginv
