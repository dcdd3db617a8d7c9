// SPDX-License-Identifier: MIT
#include "hamcirc/polygon.hpp"

#include <algorithm>

namespace hamcirc {

std::string manifold_name(Manifold m) {
    return m == Manifold::Product ? "S2xS2" : "CP2#CP2bar";
}

LatticeVec primitive_direction(const Rat& dx, const Rat& dy) {
    if (dx.is_zero() && dy.is_zero())
        throw invalid_input("primitive_direction of the zero vector");
    BigInt l = boost::multiprecision::lcm(dx.denominator(), dy.denominator());
    BigInt x = dx.numerator() * (l / dx.denominator());
    BigInt y = dy.numerator() * (l / dy.denominator());
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(x),
                                          boost::multiprecision::abs(y));
    return LatticeVec{x / g, y / g};
}

namespace {

Rat cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

int sign_of(const Rat& r) { return r > Rat(0) ? 1 : (r < Rat(0) ? -1 : 0); }

// Proper crossing or touching of closed segments, exact arithmetic.
bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
    int d1 = sign_of(cross(q1, q2, p1));
    int d2 = sign_of(cross(q1, q2, p2));
    int d3 = sign_of(cross(p1, p2, q1));
    int d4 = sign_of(cross(p1, p2, q2));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    auto on = [](const Vec2& a, const Vec2& b, const Vec2& p) {
        return sign_of(cross(a, b, p)) == 0 &&
               std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
               std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
    };
    return on(q1, q2, p1) || on(q1, q2, p2) || on(p1, p2, q1) || on(p1, p2, q2);
}

}  // namespace

ValidationReport validate_delzant(const Polygon& poly) {
    ValidationReport report;
    const auto& v = poly.vertices;
    int n = static_cast<int>(v.size());
    if (n < 3) {
        report.failures.push_back({"convexity", -1, "polygon needs at least 3 vertices"});
        return report;
    }

    bool degenerate_edge = false;
    for (int i = 0; i < n; ++i) {
        if (v[i] == v[(i + 1) % n]) {
            report.failures.push_back(
                {"simplicity", i, "zero-length edge (repeated vertex)"});
            degenerate_edge = true;
        }
    }
    if (degenerate_edge) return report;

    // Twice the signed area; counterclockwise means positive.
    Rat area2(0);
    for (int i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        area2 += a[0] * b[1] - b[0] * a[1];
    }
    if (area2 <= Rat(0))
        report.failures.push_back(
            {"convexity", -1, area2.is_zero() ? "polygon has zero area"
                                              : "vertices are ordered clockwise"});

    for (int i = 0; i < n; ++i) {
        Rat c = cross(v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
        if (c.is_zero())
            report.failures.push_back({"convexity", i, "collinear vertex"});
        else if ((c > Rat(0)) != (area2 > Rat(0)))
            report.failures.push_back({"convexity", i, "reflex vertex"});
    }

    // Non-adjacent boundary edges must stay disjoint.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                report.failures.push_back(
                    {"convexity", i, "boundary self-intersection with edge " +
                                         std::to_string(j)});
        }

    // Rationality holds automatically: every edge between rational vertices
    // is a rational multiple of a primitive integer vector. Smoothness asks
    // the two primitive directions at each vertex to form a Z-basis.
    for (int i = 0; i < n; ++i) {
        const Vec2& prev = v[(i + n - 1) % n];
        const Vec2& next = v[(i + 1) % n];
        LatticeVec u1 = primitive_direction(prev[0] - v[i][0], prev[1] - v[i][1]);
        LatticeVec u2 = primitive_direction(next[0] - v[i][0], next[1] - v[i][1]);
        BigInt d = u1.x * u2.y - u1.y * u2.x;
        if (d != 1 && d != -1)
            report.failures.push_back(
                {"smoothness", i,
                 "edge directions at vertex are not a Z-basis (determinant " +
                     d.str() + ")"});
    }

    return report;
}

Polygon hirzebruch_trapezoid(int m, const Rat& lambda) {
    if (m < 0) throw invalid_input("twisting m must be nonnegative");
    int k = m / 2;
    if (m % 2 == 0) {
        if (lambda < Rat(1))
            throw invalid_input("area positivity requires lambda >= 1 for even twisting; got lambda = " +
                                lambda.str());
        if (lambda <= Rat(k))
            throw invalid_input("area positivity requires lambda > " + std::to_string(k) +
                                " for twisting m = " + std::to_string(m) +
                                "; got lambda = " + lambda.str());
    } else {
        if (lambda <= Rat(k + 1))
            throw invalid_input("area positivity requires lambda > " + std::to_string(k + 1) +
                                " for twisting m = " + std::to_string(m) +
                                "; got lambda = " + lambda.str());
    }
    int eps = m % 2;
    // Counterclockwise: P, S, R, Q in the fixed-point naming.
    return Polygon{{Vec2{Rat(0), Rat(0)},
                    Vec2{lambda + Rat(k), Rat(0)},
                    Vec2{lambda - Rat(k + eps), Rat(1)},
                    Vec2{Rat(0), Rat(1)}}};
}

std::vector<Agl2> polygon_symmetries(const Polygon& poly) {
    ValidationReport rep = validate_delzant(poly);
    if (!rep.valid())
        throw invalid_input("polygon_symmetries requires a valid Delzant polygon");

    const auto& v = poly.vertices;
    int n = static_cast<int>(v.size());
    std::vector<Agl2> group;

    // An affine symmetry permutes vertices preserving adjacency, so it acts
    // as a dihedral relabeling: image(i) = (s + dir*i) mod n. Each candidate
    // determines the matrix from two independent edge images.
    for (int s = 0; s < n; ++s) {
        for (int dir : {1, -1}) {
            auto image = [&](int i) { return v[((s + dir * i) % n + n) % n]; };
            Vec2 e1{v[1][0] - v[0][0], v[1][1] - v[0][1]};
            Vec2 e2{v[2][0] - v[1][0], v[2][1] - v[1][1]};
            Vec2 f1{image(1)[0] - image(0)[0], image(1)[1] - image(0)[1]};
            Vec2 f2{image(2)[0] - image(1)[0], image(2)[1] - image(1)[1]};

            // Solve M*[e1 e2] = [f1 f2] exactly; consecutive edges of a
            // strictly convex polygon are independent, so det != 0.
            Rat det = e1[0] * e2[1] - e2[0] * e1[1];
            std::array<std::array<Rat, 2>, 2> mr;
            mr[0][0] = (f1[0] * e2[1] - f2[0] * e1[1]) / det;
            mr[0][1] = (f2[0] * e1[0] - f1[0] * e2[0]) / det;
            mr[1][0] = (f1[1] * e2[1] - f2[1] * e1[1]) / det;
            mr[1][1] = (f2[1] * e1[0] - f1[1] * e2[0]) / det;

            std::array<std::array<BigInt, 2>, 2> mi;
            bool integral = true;
            for (int i = 0; i < 2 && integral; ++i)
                for (int j = 0; j < 2 && integral; ++j) {
                    if (!mr[i][j].is_integer()) integral = false;
                    else mi[i][j] = mr[i][j].numerator();
                }
            if (!integral) continue;
            BigInt d = mi[0][0] * mi[1][1] - mi[0][1] * mi[1][0];
            if (d != 1 && d != -1) continue;

            Agl2 g(mi, {Rat(0), Rat(0)});
            Vec2 m0 = g.apply(v[0]);
            g.shift = {image(0)[0] - m0[0], image(0)[1] - m0[1]};

            bool matches = true;
            for (int i = 0; i < n && matches; ++i)
                matches = g.apply(v[i]) == image(i);
            if (matches) group.push_back(g);
        }
    }
    return group;
}

std::vector<int> enumerate_toric_actions(Manifold manifold, const Rat& lambda) {
    std::vector<int> out;
    if (manifold == Manifold::Product) {
        if (lambda < Rat(1))
            throw invalid_input("the trivial bundle requires lambda >= 1; got lambda = " +
                                lambda.str());
        long long l = static_cast<long long>(lambda.ceil()) - 1;
        for (long long k = 0; k <= l; ++k) out.push_back(static_cast<int>(2 * k));
    } else {
        if (lambda <= Rat(1))
            throw invalid_input("the twisted bundle requires lambda > 1; got lambda = " +
                                lambda.str());
        long long l = static_cast<long long>(lambda.ceil()) - 1;
        for (long long k = 0; k <= l - 1; ++k) out.push_back(static_cast<int>(2 * k + 1));
    }
    return out;
}

}  // namespace hamcirc
