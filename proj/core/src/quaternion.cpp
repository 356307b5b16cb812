#include "flaginv/quaternion.hpp"

#include <cctype>

#include "flaginv/errors.hpp"

namespace flaginv {

RationalQuaternion RationalQuaternion::parse(const std::string& text) {
    Rational comp[4];
    bool seen[4] = {false, false, false, false};
    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
    skip();
    if (pos == text.size()) throw ParseError("invalid quaternion: '" + text + "'");
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("invalid quaternion: '" + text + "'");
        }
        skip();
        // Coefficient: digits[/digits], or empty before a bare unit.
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] == '/' && pos > start) {
            ++pos;
            size_t d = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == d) throw ParseError("invalid quaternion: '" + text + "'");
        }
        Rational coeff(1);
        bool have_coeff = pos > start;
        if (have_coeff) coeff = Rational::parse(text.substr(start, pos - start));
        skip();
        int slot = 0;
        if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            slot = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
            ++pos;
        } else if (!have_coeff) {
            throw ParseError("invalid quaternion: '" + text + "'");
        }
        if (seen[slot]) throw ParseError("repeated term in quaternion: '" + text + "'");
        seen[slot] = true;
        comp[slot] = sign < 0 ? -coeff : coeff;
        skip();
        first = false;
    }
    return {comp[0], comp[1], comp[2], comp[3]};
}

std::string RationalQuaternion::str() const {
    static const char* units[4] = {"", "i", "j", "k"};
    const Rational* comp[4] = {&a_, &b_, &c_, &d_};
    std::string out;
    for (int s = 0; s < 4; ++s) {
        if (comp[s]->is_zero()) continue;
        if (!out.empty() && comp[s]->sign() > 0) out += "+";
        out += comp[s]->str();
        out += units[s];
    }
    return out.empty() ? "0" : out;
}

RationalQuaternion RationalQuaternion::reciprocal() const {
    if (is_zero()) throw DomainError("division-by-zero", "reciprocal of zero quaternion");
    Rational n = norm_sq();
    return {a_ / n, -b_ / n, -c_ / n, -d_ / n};
}

RationalQuaternion& RationalQuaternion::operator+=(const RationalQuaternion& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

RationalQuaternion& RationalQuaternion::operator-=(const RationalQuaternion& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

RationalQuaternion operator*(const RationalQuaternion& x, const RationalQuaternion& y) {
    return {
        x.a_ * y.a_ - x.b_ * y.b_ - x.c_ * y.c_ - x.d_ * y.d_,
        x.a_ * y.b_ + x.b_ * y.a_ + x.c_ * y.d_ - x.d_ * y.c_,
        x.a_ * y.c_ - x.b_ * y.d_ + x.c_ * y.a_ + x.d_ * y.b_,
        x.a_ * y.d_ + x.b_ * y.c_ - x.c_ * y.b_ + x.d_ * y.a_,
    };
}

} // namespace flaginv
