#include "flaginv/rational.hpp"

#include <cctype>

#include "flaginv/errors.hpp"

namespace flaginv {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("division-by-zero", "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw DomainError("division-by-zero", "rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    // Strict shape: [+-]digits[/digits].  mpq's own parser is looser (accepts
    // whitespace, bases), so validate here first.
    size_t i = 0;
    auto digits = [&](size_t& pos) {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return pos > start;
    };
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    if (!digits(i)) throw ParseError("invalid rational: '" + text + "'");
    if (i < text.size()) {
        if (text[i] != '/') throw ParseError("invalid rational: '" + text + "'");
        ++i;
        if (!digits(i) || i != text.size()) throw ParseError("invalid rational: '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0)
        throw ParseError("invalid rational: '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return q_.get_str();
}

Rational Rational::abs() const {
    Rational r = *this;
    r.q_ = ::abs(r.q_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("division-by-zero", "reciprocal of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) { q_ += o.q_; return *this; }
Rational& Rational::operator-=(const Rational& o) { q_ -= o.q_; return *this; }
Rational& Rational::operator*=(const Rational& o) { q_ *= o.q_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division-by-zero", "rational division by zero");
    q_ /= o.q_;
    return *this;
}

} // namespace flaginv
