#pragma once

#include <string>

#include "flaginv/rational.hpp"

namespace flaginv {

// Element of Q(i): re + im*i with exact rational parts.  The field all linear
// algebra in this library runs over.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {} // implicit: integers embed
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    // Text format: "p/q" | "r/s i" | "p/q+r/s i" | "p/q-r/s i", components as
    // in Rational::parse.  parse() round-trips str() bit-exactly.
    static GaussianRational parse(const std::string& text);
    std::string str() const;

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }
    GaussianRational reciprocal() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_;
    Rational im_;
};

} // namespace flaginv
