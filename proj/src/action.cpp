// SPDX-License-Identifier: MIT
#include "hamcirc/action.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace hamcirc {

namespace {

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

CircleAction::CircleAction(long long a, long long b, long long m, Rat lambda)
    : a_(a), b_(b), m_(m), lambda_(std::move(lambda)) {
    if (m_ < 0) throw invalid_input("m must be nonnegative, got " + std::to_string(m_));
    if (gcd_ll(a_, b_) != 1)
        throw invalid_input("non-effective action: gcd(" + std::to_string(a_) + ", " +
                            std::to_string(b_) + ") = " +
                            std::to_string(gcd_ll(a_, b_)) + ", expected 1");
    long long half = m_ / 2;
    if (m_ % 2 == 0) {
        if (!(lambda_ >= Rat(1)))
            throw invalid_input("lambda must satisfy lambda >= 1 on S2xS2, got " +
                                lambda_.str());
        if (!(lambda_ > Rat(half)))
            throw invalid_input("lambda must satisfy lambda > m/2 = " +
                                std::to_string(half) + ", got " + lambda_.str());
    } else {
        if (!(lambda_ > Rat(half + 1)))
            throw invalid_input("lambda must satisfy lambda > (m+1)/2 = " +
                                std::to_string(half + 1) + " on CP2#CP2bar, got " +
                                lambda_.str());
    }
}

std::vector<FixedPointData> fixed_point_weights(const CircleAction& act) {
    long long a = act.a(), b = act.b(), m = act.m();
    std::vector<FixedPointData> out;
    out.push_back({"P", std::minmax(a, b), Rat(0)});
    out.push_back({"Q", std::minmax(a, -b), Rat(0)});
    out.push_back({"R", std::minmax(-a, a * m - b), Rat(0)});
    out.push_back({"S", std::minmax(-a, -a * m + b), Rat(0)});
    return out;
}

KarshonGraph build_graph(const CircleAction& act) {
    Polygon poly = hirzebruch_trapezoid(act.m(), act.lambda());
    // Corner order matches the trapezoid: P(0,0), S(lambda+k,0),
    // R(lambda-k-eps,1), Q(0,1), counterclockwise.
    const std::array<std::string, 4> tags{"P", "S", "R", "Q"};
    const Rat ra(act.a()), rb(act.b());

    std::array<Rat, 4> mu;
    for (int i = 0; i < 4; ++i)
        mu[i] = ra * poly.vertices[i][0] + rb * poly.vertices[i][1];

    // kappa[i]: the weight along boundary edge i -> i+1 at its tail, the
    // pairing of (a,b) with the edge's primitive direction.
    std::array<long long, 4> kappa;
    std::array<LatticeVec, 4> dir;
    std::array<Vec2, 4> delta;
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        delta[i] = {poly.vertices[j][0] - poly.vertices[i][0],
                    poly.vertices[j][1] - poly.vertices[i][1]};
        dir[i] = primitive_direction(delta[i][0], delta[i][1]);
        BigInt pairing = BigInt(act.a()) * dir[i].x + BigInt(act.b()) * dir[i].y;
        kappa[i] = static_cast<long long>(pairing);
    }

    KarshonGraph g;
    int next_id = 0;
    std::array<bool, 4> absorbed{};
    std::array<int, 4> corner_id{-1, -1, -1, -1};

    for (int i = 0; i < 4; ++i) {
        if (kappa[i] != 0) continue;
        int j = (i + 1) % 4;
        // The edge is fixed pointwise: a sphere of area equal to the edge's
        // lattice length, at the common moment level of its endpoints.
        Rat length = dir[i].x != 0 ? delta[i][0] / Rat(dir[i].x)
                                   : delta[i][1] / Rat(dir[i].y);
        g.vertices.push_back(GraphVertex::fat(next_id++, mu[i], length, 0));
        absorbed[i] = absorbed[j] = true;
    }

    for (int i = 0; i < 4; ++i) {
        if (absorbed[i]) continue;
        int prev = (i + 3) % 4;
        // Weights at the corner: along the outgoing edge and into the
        // incoming one (reversed direction).
        corner_id[i] = next_id;
        g.vertices.push_back(
            GraphVertex::isolated(next_id++, mu[i], kappa[i], -kappa[prev], tags[i]));
    }

    for (int i = 0; i < 4; ++i) {
        long long w = kappa[i] < 0 ? -kappa[i] : kappa[i];
        if (w < 2) continue;
        int j = (i + 1) % 4;
        // Smoothness of the trapezoid forces |kappa| = 1 next to a fixed
        // edge, so both corners of a Z_w sphere survive as vertices.
        if (absorbed[i] || absorbed[j])
            throw invariant_violation("isotropy sphere touches a fixed surface");
        GraphEdge e;
        e.a = std::min(corner_id[i], corner_id[j]);
        e.b = std::max(corner_id[i], corner_id[j]);
        e.isotropy = w;
        g.edges.push_back(e);
    }

    Rat mn = g.vertices.front().moment;
    for (const auto& v : g.vertices) mn = std::min(mn, v.moment);
    for (auto& v : g.vertices) v.moment = v.moment - mn;

    // Deterministic presentation: sort by moment with fat vertices first,
    // tags breaking the remaining ties, then renumber.
    std::vector<int> order(g.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const GraphVertex &u = g.vertices[i], &v = g.vertices[j];
        auto key = [](const GraphVertex& w) {
            return std::make_tuple(w.moment, w.kind == VertexKind::Isolated ? 1 : 0,
                                   w.tag);
        };
        return key(u) < key(v);
    });
    std::vector<int> new_id(g.vertices.size());
    KarshonGraph out;
    for (size_t pos = 0; pos < order.size(); ++pos) {
        GraphVertex v = g.vertices[order[pos]];
        new_id[v.id] = static_cast<int>(pos);
        v.id = static_cast<int>(pos);
        out.vertices.push_back(std::move(v));
    }
    for (GraphEdge e : g.edges) {
        int na = new_id[e.a], nb = new_id[e.b];
        e.a = std::min(na, nb);
        e.b = std::max(na, nb);
        out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const GraphEdge& x, const GraphEdge& y) {
                  return std::tie(x.a, x.b, x.isotropy) < std::tie(y.a, y.b, y.isotropy);
              });
    return out;
}

CircleAction weyl_conjugate(const CircleAction& act) {
    return CircleAction(-act.a(), act.b() - act.a() * act.m(), act.m(), act.lambda());
}

std::vector<std::pair<long long, long long>> weyl_orbit(const CircleAction& act) {
    long long a = act.a(), b = act.b(), m = act.m();
    std::vector<std::pair<long long, long long>> orbit{
        {a, b}, {-a, -b}, {-a, b - a * m}, {a, a * m - b}};
    if (m == 0 && act.lambda() == Rat(1)) {
        // The moment square has the extra diagonal symmetry swapping factors.
        orbit.push_back({b, a});
        orbit.push_back({-b, -a});
        orbit.push_back({-b, a});
        orbit.push_back({b, -a});
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

bool are_equivalent(const CircleAction& x, const CircleAction& y) {
    if (x.lambda() != y.lambda())
        throw invalid_input("actions live on different symplectic manifolds: lambda " +
                            x.lambda().str() + " vs " + y.lambda().str());
    if (x.m() % 2 != y.m() % 2)
        throw invalid_input("actions live on different manifolds: " +
                            std::string(manifold_name(x.manifold())) + " vs " +
                            manifold_name(y.manifold()));
    return graphs_equivalent(build_graph(x), build_graph(y));
}

namespace {

// Codimension of the stratum U_s in the presentation (c,d) of the action as
// a subcircle of the torus of U_s: the count of j in {1,...,s-1} hitting d
// (c = 1) or -d (c = -1).
int presentation_codim(long long c, long long d, long long s) {
    if (c != 1 && c != -1) return 0;
    long long hit = c == 1 ? d : -d;
    return hit >= 1 && hit <= s - 1 ? 1 : 0;
}

}  // namespace

ToricExtensionReport toric_extensions(const CircleAction& act) {
    long long a = act.a(), b = act.b(), m = act.m();
    ToricExtensionReport rep;
    rep.entries.push_back({m, {a, b}, presentation_codim(a, b, m)});

    if (a != 1 && a != -1) return rep;
    if (b == 0 || b == a * m) return rep;
    long long n = 2 * b - a * m;
    long long target = n < 0 ? -n : n;
    // The target form exists iff 2*lambda > target + eps (same parity of m,
    // so eps is shared); that is exactly the extension threshold.
    if (!(Rat(2) * act.lambda() > Rat(target + act.eps()))) return rep;
    long long c = a;
    long long d = n == 0 ? b : (a * n > 0 ? b : -b);
    rep.entries.push_back({target, {c, d}, presentation_codim(c, d, target)});
    return rep;
}

std::vector<long long> strata_intersections(const CircleAction& act) {
    std::vector<long long> out;
    for (const auto& e : toric_extensions(act).entries) out.push_back(e.target_m);
    std::sort(out.begin(), out.end());
    return out;
}

int stratum_codimension(const CircleAction& act, long long s) {
    for (const auto& e : toric_extensions(act).entries)
        if (e.target_m == s) return e.complex_codim;
    throw invalid_input("the action does not intersect stratum U_" + std::to_string(s));
}

int invariant_deformation_dimension(const CircleAction& act) {
    long long a = act.a(), b = act.b(), m = act.m();
    if (m == 0) return 0;
    int count = 0;
    if (m % 2 == 0) {
        long long k = m / 2;
        // Balanced coordinates diagonalize the isotropy representation on
        // the deformation space.
        long long ap = k * a - b, bp = a;
        for (long long j = 0; j <= 2 * k - 2; ++j)
            if (ap + bp * (k - 1 - j) == 0) ++count;
    } else {
        long long k = (m - 1) / 2;
        long long ap = (m + 1) / 2 * a - b, bp = (m - 1) / 2 * a - b;
        for (long long j = 0; j <= 2 * k - 1; ++j)
            if ((ap - bp) * (k - j) + bp == 0) ++count;
    }
    return count;
}

}  // namespace hamcirc
