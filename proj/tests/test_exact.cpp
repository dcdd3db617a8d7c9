// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hamcirc/rational.hpp"

using namespace hamcirc;

TEST_CASE("rational normalization reduces and fixes the sign") {
    CHECK(rational_normalize(2, 4).str() == "1/2");
    CHECK(rational_normalize(3, -2).str() == "-3/2");
    CHECK(rational_normalize(0, 7).str() == "0");
    CHECK(rational_normalize(0, 7).denominator() == 1);
    CHECK(rational_normalize(-4, -6) == Rat(2) / Rat(3));
    CHECK_THROWS_AS(rational_normalize(1, 0), invalid_input);
}

TEST_CASE("string form round-trips losslessly") {
    for (long long p = -12; p <= 12; ++p)
        for (long long q = 1; q <= 9; ++q) {
            Rat r{BigInt(p), BigInt(q)};
            CHECK(Rat::parse(r.str()) == r);
        }
    CHECK(Rat::parse("3/4").str() == "3/4");
    CHECK(Rat::parse("-3/4").str() == "-3/4");
    CHECK(Rat::parse("7").str() == "7");
    CHECK(Rat::parse("+7").str() == "7");
    CHECK(Rat::parse("0/5").str() == "0");
    CHECK(Rat::parse("6/4").str() == "3/2");
}

TEST_CASE("parse rejects everything that is not \"p\" or \"p/q\"") {
    for (const char* bad : {"", "1.5", "3/", "/3", "a", "1/-2", "1e3", " 1", "1 ",
                            "--2", "3//4", "0x1"})
        CHECK_THROWS_AS(Rat::parse(bad), invalid_input);
    CHECK_THROWS_AS(Rat::parse("3/0"), invalid_input);
}

TEST_CASE("exact arithmetic and ordering") {
    CHECK(Rat(1) / Rat(2) + Rat(1) / Rat(3) == Rat(5) / Rat(6));
    CHECK(Rat(1) / Rat(2) - Rat(1) / Rat(3) == Rat(1) / Rat(6));
    CHECK((Rat(2) / Rat(3)) * (Rat(9) / Rat(4)) == Rat(3) / Rat(2));
    CHECK(Rat(7) / Rat(2) > Rat(3));
    CHECK(Rat(-1) / Rat(3) < Rat(0));
    CHECK(abs(Rat(-5) / Rat(3)) == Rat(5) / Rat(3));
    CHECK_THROWS_AS(Rat(1) / Rat(0), invalid_input);
}

TEST_CASE("floor and ceil round toward the correct infinities") {
    CHECK((Rat(7) / Rat(2)).floor() == 3);
    CHECK((Rat(7) / Rat(2)).ceil() == 4);
    CHECK((Rat(-7) / Rat(2)).floor() == -4);
    CHECK((Rat(-7) / Rat(2)).ceil() == -3);
    CHECK(Rat(5).floor() == 5);
    CHECK(Rat(5).ceil() == 5);
    CHECK(Rat(-5).floor() == -5);
}

TEST_CASE("primitive lattice vectors") {
    CHECK(primitive_check({2, 3}));
    CHECK_FALSE(primitive_check({2, 4}));
    CHECK(primitive_check({0, 1}));
    CHECK(primitive_check({-1, 0}));
    CHECK_THROWS_AS(primitive_check({0, 0}), invalid_input);
}

TEST_CASE("AGL(1,Z): apply, compose, inverse") {
    Agl1 g(-1, Rat(3));
    Agl1 h(-1, Rat(1) / Rat(2));
    Agl1 gh = compose(g, h);
    CHECK(gh.sign == 1);
    CHECK(gh.shift == Rat(5) / Rat(2));

    Rat mu = Rat(7) / Rat(3);
    CHECK(gh.apply(mu) == g.apply(h.apply(mu)));

    for (int s : {1, -1}) {
        Agl1 t(s, Rat(-4) / Rat(3));
        Agl1 id = compose(t, t.inverse());
        CHECK(id.sign == 1);
        CHECK(id.shift == Rat(0));
        CHECK(t.inverse().apply(t.apply(mu)) == mu);
    }
    CHECK_THROWS_AS(Agl1(2, Rat(0)), invalid_input);

    // associativity on a small sample
    Agl1 a(1, Rat(1) / Rat(3)), b(-1, Rat(2)), c(-1, Rat(-5) / Rat(2));
    Agl1 left = compose(compose(a, b), c);
    Agl1 right = compose(a, compose(b, c));
    CHECK(left.sign == right.sign);
    CHECK(left.shift == right.shift);
}

TEST_CASE("AGL(2,Z): apply, determinant guard, inverse, compose") {
    Agl2 id;
    Vec2 p{Rat(3) / Rat(2), Rat(1)};
    CHECK(id.apply(p) == p);

    // Weyl element of the twisting-2 trapezoid at lambda = 2
    Agl2 weyl({{{-1, -2}, {0, 1}}}, {Rat(3), Rat(0)});
    CHECK(weyl.apply(Vec2{Rat(0), Rat(0)}) == Vec2{Rat(3), Rat(0)});

    Agl2 swap_xy({{{0, 1}, {1, 0}}}, {Rat(0), Rat(0)});
    CHECK(swap_xy.apply(Vec2{Rat(1), Rat(0)}) == Vec2{Rat(0), Rat(1)});

    CHECK_THROWS_AS(Agl2({{{2, 0}, {0, 1}}}, {Rat(0), Rat(0)}), invalid_input);
    CHECK_THROWS_AS(Agl2({{{1, 1}, {1, 1}}}, {Rat(0), Rat(0)}), invalid_input);

    Agl2 g({{{1, 3}, {0, -1}}}, {Rat(1) / Rat(2), Rat(-2)});
    Agl2 h({{{0, -1}, {1, 0}}}, {Rat(5), Rat(2) / Rat(3)});
    Vec2 q{Rat(-4) / Rat(3), Rat(7)};
    CHECK(compose(g, h).apply(q) == g.apply(h.apply(q)));
    CHECK(g.inverse().apply(g.apply(q)) == q);
    CHECK(compose(g, g.inverse()) == Agl2{});
    CHECK(compose(g.inverse(), g) == Agl2{});
}
