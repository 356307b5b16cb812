#include "flaginv/gaussian.hpp"

#include <cctype>

#include "flaginv/errors.hpp"

namespace flaginv {

namespace {

// Scans [+-]digits[/digits] starting at pos; advances pos past the token.
Rational scan_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d0) throw ParseError("invalid scalar: '" + s + "'");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t d1 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d1) throw ParseError("invalid scalar: '" + s + "'");
    }
    return Rational::parse(s.substr(start, pos - start));
}

void skip_spaces(const std::string& s, size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
}

} // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
    size_t pos = 0;
    skip_spaces(text, pos);
    Rational first = scan_rational(text, pos);
    skip_spaces(text, pos);
    if (pos == text.size()) return {first};
    if (text[pos] == 'i') {
        ++pos;
        skip_spaces(text, pos);
        if (pos != text.size()) throw ParseError("invalid scalar: '" + text + "'");
        return {Rational(0), first};
    }
    if (text[pos] != '+' && text[pos] != '-')
        throw ParseError("invalid scalar: '" + text + "'");
    Rational second = scan_rational(text, pos);
    skip_spaces(text, pos);
    if (pos == text.size() || text[pos] != 'i')
        throw ParseError("invalid scalar: '" + text + "'");
    ++pos;
    skip_spaces(text, pos);
    if (pos != text.size()) throw ParseError("invalid scalar: '" + text + "'");
    return {first, second};
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return im_.str() + " i";
    std::string out = re_.str();
    if (im_.sign() > 0) out += "+";
    out += im_.str();
    out += " i";
    return out;
}

GaussianRational GaussianRational::reciprocal() const {
    if (is_zero()) throw DomainError("division-by-zero", "reciprocal of zero");
    Rational n = norm_sq();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.reciprocal();
}

} // namespace flaginv
