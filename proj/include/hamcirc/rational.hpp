// SPDX-License-Identifier: MIT
#pragma once

/// Exact rational and integer-lattice arithmetic, plus the two affine group
/// actions used throughout: AGL(1,Z) on moment-map labels and AGL(2,Z) on
/// polygons. No floating point anywhere; every quantity is exact.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hamcirc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Bad user-supplied data (CLI exit code 2).
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A broken internal invariant (CLI exit code 3). If one of these escapes,
/// the combinatorial consistency web the library relies on has a hole.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact rational number, always stored reduced with positive denominator.
/// Serializes as "p/q", or "p" when the denominator is 1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rat(long long n) : v_(n) {}           // NOLINT
    explicit Rat(const BigInt& n) : v_(n) {}
    explicit Rat(const BigRat& v) : v_(v) {}

    /// num/den, reduced. Rejects den == 0.
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw invalid_input("rational with zero denominator");
        v_ = BigRat(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    /// Largest integer <= value.
    BigInt floor() const {
        BigInt n = numerator(), d = denominator();
        BigInt q = n / d;
        if (n % d != 0 && n < 0) --q;
        return q;
    }
    BigInt ceil() const { return -(-*this).floor(); }

    Rat operator-() const { return Rat(BigRat(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(BigRat(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(BigRat(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(BigRat(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.v_ == 0) throw invalid_input("division by zero");
        return Rat(BigRat(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    /// "p/q", or "p" when q == 1.
    std::string str() const;

    /// Parses "p", "-p", or "p/q". Anything else (decimals, exponents,
    /// whitespace, empty input, zero denominator) is rejected.
    static Rat parse(std::string_view s);

private:
    BigRat v_;
};

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

/// rational_normalize: num/den reduced with positive denominator.
inline Rat rational_normalize(const BigInt& num, const BigInt& den) {
    return Rat(num, den);
}

/// Integer lattice vector (edge directions of Delzant polygons).
struct LatticeVec {
    BigInt x;
    BigInt y;
    bool operator==(const LatticeVec&) const = default;
};

/// True iff gcd(|x|,|y|) = 1. Rejects the zero vector.
bool primitive_check(const LatticeVec& v);

/// Element of AGL(1,Z): mu -> sign*mu + shift with sign in {+1,-1}.
struct Agl1 {
    int sign = 1;
    Rat shift;

    Agl1() = default;
    Agl1(int s, Rat t) : sign(s), shift(std::move(t)) {
        if (sign != 1 && sign != -1) throw invalid_input("Agl1 sign must be +1 or -1");
    }

    Rat apply(const Rat& mu) const {
        return (sign == 1 ? mu : -mu) + shift;
    }
    Agl1 inverse() const {
        // x = sign*(y - shift) since sign is its own reciprocal
        return Agl1(sign, sign == 1 ? -shift : shift);
    }
};

/// compose(g,h): apply h first, then g.
inline Agl1 compose(const Agl1& g, const Agl1& h) {
    return Agl1(g.sign * h.sign, g.apply(h.shift));
}

using Vec2 = std::array<Rat, 2>;

/// Element of AGL(2,Z): p -> M*p + shift with M an integer matrix, |det M| = 1.
struct Agl2 {
    std::array<std::array<BigInt, 2>, 2> mat{{{1, 0}, {0, 1}}};
    Vec2 shift{Rat(0), Rat(0)};

    Agl2() = default;
    Agl2(std::array<std::array<BigInt, 2>, 2> m, Vec2 t);

    BigInt det() const { return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]; }
    Vec2 apply(const Vec2& p) const;
    Agl2 inverse() const;
    bool operator==(const Agl2&) const = default;
};

/// compose(g,h): apply h first, then g.
Agl2 compose(const Agl2& g, const Agl2& h);

}  // namespace hamcirc
