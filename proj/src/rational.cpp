// SPDX-License-Identifier: MIT
#include "hamcirc/rational.hpp"

#include <cctype>

namespace hamcirc {

std::string Rat::str() const {
    std::string out = numerator().str();
    BigInt d = denominator();
    if (d != 1) {
        out += '/';
        out += d.str();
    }
    return out;
}

namespace {

// Digits-only parse; empty or non-digit input rejected.
bool parse_digits(std::string_view s, BigInt& out) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = BigInt(std::string(s));
    return true;
}

}  // namespace

Rat Rat::parse(std::string_view s) {
    std::string_view rest = s;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    BigInt num, den = 1;
    auto slash = rest.find('/');
    bool ok;
    if (slash == std::string_view::npos) {
        ok = parse_digits(rest, num);
    } else {
        ok = parse_digits(rest.substr(0, slash), num) &&
             parse_digits(rest.substr(slash + 1), den);
        if (ok && den == 0)
            throw invalid_input("rational with zero denominator: \"" + std::string(s) + "\"");
    }
    if (!ok)
        throw invalid_input("malformed rational \"" + std::string(s) +
                            "\"; expected \"p\" or \"p/q\" (decimals are not accepted)");
    if (negative) num = -num;
    return Rat(num, den);
}

bool primitive_check(const LatticeVec& v) {
    if (v.x == 0 && v.y == 0) throw invalid_input("primitive_check on the zero vector");
    return boost::multiprecision::gcd(boost::multiprecision::abs(v.x),
                                      boost::multiprecision::abs(v.y)) == 1;
}

Agl2::Agl2(std::array<std::array<BigInt, 2>, 2> m, Vec2 t)
    : mat(std::move(m)), shift(std::move(t)) {
    BigInt d = det();
    if (d != 1 && d != -1)
        throw invalid_input("Agl2 matrix must have determinant +1 or -1, got " + d.str());
}

Vec2 Agl2::apply(const Vec2& p) const {
    return {Rat(mat[0][0]) * p[0] + Rat(mat[0][1]) * p[1] + shift[0],
            Rat(mat[1][0]) * p[0] + Rat(mat[1][1]) * p[1] + shift[1]};
}

Agl2 Agl2::inverse() const {
    BigInt d = det();  // +-1, so the adjugate over d stays integral
    std::array<std::array<BigInt, 2>, 2> inv{
        {{mat[1][1] * d, -mat[0][1] * d}, {-mat[1][0] * d, mat[0][0] * d}}};
    Agl2 g(inv, {Rat(0), Rat(0)});
    Vec2 ms = g.apply(shift);
    g.shift = {-ms[0], -ms[1]};
    return g;
}

Agl2 compose(const Agl2& g, const Agl2& h) {
    std::array<std::array<BigInt, 2>, 2> m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m[i][j] = g.mat[i][0] * h.mat[0][j] + g.mat[i][1] * h.mat[1][j];
    return Agl2(m, g.apply(h.shift));
}

}  // namespace hamcirc
