// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hamcirc/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace hamcirc;

namespace {

using WPair = std::pair<long long, long long>;

const GraphVertex* vertex_at(const KarshonGraph& g, const Rat& mu, VertexKind kind) {
    for (const auto& v : g.vertices)
        if (v.moment == mu && v.kind == kind) return &v;
    return nullptr;
}

std::vector<CircleAction> small_grid(int max_ab, int max_m) {
    std::vector<CircleAction> out;
    const Rat lams[] = {Rat(1), Rat(3) / Rat(2), Rat(2), Rat(5) / Rat(2), Rat(3)};
    for (int m = 0; m <= max_m; ++m)
        for (const Rat& lam : lams)
            for (int a = -max_ab; a <= max_ab; ++a)
                for (int b = -max_ab; b <= max_ab; ++b) {
                    if (std::gcd(a, b) != 1) continue;
                    try {
                        out.emplace_back(a, b, m, lam);
                    } catch (const invalid_input&) {
                        // lambda out of range for this twisting
                    }
                }
    return out;
}

}  // namespace

TEST_CASE("constructor enforces effectiveness, twisting sign, and width bounds") {
    CHECK_THROWS_AS(CircleAction(2, 4, 2, Rat(2)), invalid_input);
    CHECK_THROWS_AS(CircleAction(0, 0, 0, Rat(1)), invalid_input);
    CHECK_THROWS_AS(CircleAction(1, 1, -2, Rat(2)), invalid_input);
    CHECK_THROWS_AS(CircleAction(1, 1, 2, Rat(1)), invalid_input);
    CHECK_THROWS_AS(CircleAction(1, 1, 3, Rat(2)), invalid_input);
    CHECK_THROWS_AS(CircleAction(1, 1, 1, Rat(1)), invalid_input);
    CHECK_THROWS_AS(CircleAction(1, 1, 0, Rat(1) / Rat(2)), invalid_input);
    CHECK_NOTHROW(CircleAction(1, 1, 2, Rat(3) / Rat(2)));
    CHECK_NOTHROW(CircleAction(1, 1, 3, Rat(5) / Rat(2)));

    CircleAction odd(1, 1, 5, Rat(4));
    CHECK(odd.k() == 2);
    CHECK(odd.eps() == 1);
    CHECK(odd.manifold() == Manifold::NonTrivialBundle);
    CircleAction even(1, 1, 4, Rat(3));
    CHECK(even.k() == 2);
    CHECK(even.eps() == 0);
    CHECK(even.manifold() == Manifold::Product);
}

TEST_CASE("fixed point weights follow the corner pairings") {
    auto w = fixed_point_weights(CircleAction(1, 1, 2, Rat(2)));
    REQUIRE(w.size() == 4);
    CHECK(w[0].tag == "P");
    CHECK(w[0].weights == WPair{1, 1});
    CHECK(w[1].tag == "Q");
    CHECK(w[1].weights == WPair{-1, 1});
    CHECK(w[2].tag == "R");
    CHECK(w[2].weights == WPair{-1, 1});
    CHECK(w[3].tag == "S");
    CHECK(w[3].weights == WPair{-1, -1});

    w = fixed_point_weights(CircleAction(0, 1, 4, Rat(3)));
    CHECK(w[0].weights == WPair{0, 1});   // P {a, b}
    CHECK(w[1].weights == WPair{-1, 0});  // Q {a, -b}
    CHECK(w[2].weights == WPair{-1, 0});  // R {-a, am-b}
    CHECK(w[3].weights == WPair{0, 1});   // S {-a, -am+b}

    w = fixed_point_weights(CircleAction(3, 2, 1, Rat(3)));
    CHECK(w[0].weights == WPair{2, 3});
    CHECK(w[1].weights == WPair{-2, 3});
    CHECK(w[2].weights == WPair{-3, 1});
    CHECK(w[3].weights == WPair{-3, -1});
}

TEST_CASE("graph of a rotation with one fixed sphere") {
    KarshonGraph g = build_graph(CircleAction(1, 0, 2, Rat(2)));
    REQUIRE(g.vertices.size() == 3);
    REQUIRE(g.edges.size() == 1);

    const GraphVertex* fat = vertex_at(g, Rat(0), VertexKind::Fat);
    REQUIRE(fat);
    CHECK(fat->area == Rat(1));
    CHECK(fat->genus == 0);

    const GraphVertex* r = vertex_at(g, Rat(1), VertexKind::Isolated);
    REQUIRE(r);
    CHECK(r->weights == WPair{-1, 2});
    const GraphVertex* s = vertex_at(g, Rat(3), VertexKind::Isolated);
    REQUIRE(s);
    CHECK(s->weights == WPair{-2, -1});

    CHECK(g.edges[0].isotropy == 2);
    CHECK(std::set<long long>{g.edges[0].a, g.edges[0].b} ==
          std::set<long long>{r->id, s->id});
    SphereData sd = edge_sphere_data(g, g.edges[0]);
    CHECK(sd.area == Rat(1));
    CHECK(sd.self_intersection == 0);
}

TEST_CASE("graph of the diagonal-type action has four isolated points") {
    KarshonGraph g = build_graph(CircleAction(1, 1, 2, Rat(2)));
    REQUIRE(g.vertices.size() == 4);
    CHECK(g.edges.empty());
    for (int mu = 0; mu <= 3; ++mu)
        CHECK(vertex_at(g, Rat(mu), VertexKind::Isolated));
    CHECK(vertex_at(g, Rat(0), VertexKind::Isolated)->weights == WPair{1, 1});
    CHECK(vertex_at(g, Rat(3), VertexKind::Isolated)->weights == WPair{-1, -1});
}

TEST_CASE("graph of a second-factor rotation has two fixed spheres") {
    KarshonGraph g = build_graph(CircleAction(0, 1, 0, Rat(2)));
    REQUIRE(g.vertices.size() == 2);
    CHECK(g.edges.empty());
    const GraphVertex* bot = vertex_at(g, Rat(0), VertexKind::Fat);
    const GraphVertex* top = vertex_at(g, Rat(1), VertexKind::Fat);
    REQUIRE(bot);
    REQUIRE(top);
    CHECK(bot->area == Rat(2));
    CHECK(top->area == Rat(2));

    // on a twisted surface the two spheres have different areas
    g = build_graph(CircleAction(0, 1, 2, Rat(2)));
    REQUIRE(g.vertices.size() == 2);
    CHECK(vertex_at(g, Rat(0), VertexKind::Fat)->area == Rat(3));
    CHECK(vertex_at(g, Rat(1), VertexKind::Fat)->area == Rat(1));

    // first-factor rotation: spheres of area 1 at heights 0 and lambda
    g = build_graph(CircleAction(1, 0, 0, Rat(5) / Rat(2)));
    CHECK(vertex_at(g, Rat(0), VertexKind::Fat)->area == Rat(1));
    CHECK(vertex_at(g, Rat(5) / Rat(2), VertexKind::Fat)->area == Rat(1));
}

TEST_CASE("graph with two isotropy chains") {
    KarshonGraph g = build_graph(CircleAction(3, 2, 1, Rat(3)));
    REQUIRE(g.vertices.size() == 4);
    REQUIRE(g.edges.size() == 3);

    const GraphVertex* p = vertex_at(g, Rat(0), VertexKind::Isolated);
    const GraphVertex* q = vertex_at(g, Rat(2), VertexKind::Isolated);
    const GraphVertex* r = vertex_at(g, Rat(8), VertexKind::Isolated);
    const GraphVertex* s = vertex_at(g, Rat(9), VertexKind::Isolated);
    REQUIRE((p && q && r && s));
    CHECK(p->weights == WPair{2, 3});
    CHECK(q->weights == WPair{-2, 3});
    CHECK(r->weights == WPair{-3, 1});
    CHECK(s->weights == WPair{-3, -1});

    auto has_edge = [&](long long x, long long y, long long k) {
        return std::any_of(g.edges.begin(), g.edges.end(), [&](const GraphEdge& e) {
            return e.isotropy == k && std::set<long long>{e.a, e.b} == std::set<long long>{x, y};
        });
    };
    CHECK(has_edge(p->id, q->id, 2));
    CHECK(has_edge(q->id, r->id, 3));
    CHECK(has_edge(p->id, s->id, 3));

    // the isotropy-3 sphere through P and S is the slant edge of the trapezoid
    for (const auto& e : g.edges)
        if (std::set<long long>{e.a, e.b} == std::set<long long>{p->id, s->id}) {
            SphereData sd = edge_sphere_data(g, e);
            CHECK(sd.self_intersection == 1);
            CHECK(sd.area == Rat(3));
        }
}

TEST_CASE("every constructible action yields an admissible graph at height zero") {
    for (const CircleAction& act : small_grid(4, 5)) {
        KarshonGraph g = build_graph(act);
        ValidationReport rep = validate_admissible(g);
        INFO("S^1(", act.a(), ",", act.b(), ";", act.m(), "), lambda=", act.lambda().str());
        CHECK(rep.valid());
        Rat least = g.vertices.front().moment;
        for (const auto& v : g.vertices) least = std::min(least, v.moment);
        CHECK(least == Rat(0));
    }
}

TEST_CASE("localization sum vanishes whenever all fixed points are isolated") {
    for (const CircleAction& act : small_grid(4, 5)) {
        std::optional<Rat> s = localization_sum(build_graph(act));
        if (s) CHECK(*s == Rat(0));
    }
}

TEST_CASE("Weyl conjugation is an involution matching the graph") {
    CircleAction act(1, 1, 2, Rat(2));
    CircleAction conj = weyl_conjugate(act);
    CHECK(conj.a() == -1);
    CHECK(conj.b() == -1);
    CHECK(conj.m() == 2);
    CHECK(weyl_conjugate(conj) == act);
    CHECK(are_equivalent(act, conj));

    CircleAction f(1, 0, 0, Rat(2));
    CHECK(weyl_conjugate(f) == CircleAction(-1, 0, 0, Rat(2)));
}

TEST_CASE("Weyl orbits by twisting and width") {
    auto orbit = [](long long a, long long b, long long m, Rat lam) {
        return weyl_orbit(CircleAction(a, b, m, std::move(lam)));
    };
    using V = std::vector<std::pair<long long, long long>>;

    // generic twisted orbit has four members
    V o = orbit(1, 3, 2, Rat(3));
    CHECK(o == V{{-1, -3}, {-1, 1}, {1, -1}, {1, 3}});

    // self-conjugate when 2b = am
    CHECK(orbit(1, 2, 4, Rat(3)) == V{{-1, -2}, {1, 2}});
    CHECK(orbit(1, 1, 2, Rat(2)) == V{{-1, -1}, {1, 1}});

    // untwisted: all four sign changes; swaps join in only at width 1
    CHECK(orbit(1, 2, 0, Rat(2)) == V{{-1, -2}, {-1, 2}, {1, -2}, {1, 2}});
    CHECK(orbit(1, 2, 0, Rat(1)) ==
          V{{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2}, {1, -2}, {1, 2}, {2, -1}, {2, 1}});
    CHECK(orbit(1, 1, 0, Rat(1)) == V{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
}

TEST_CASE("equivalence of actions on a fixed manifold") {
    Rat two(2), three(3);
    CHECK(are_equivalent(CircleAction(1, 0, 2, two), CircleAction(-1, 0, 2, two)));
    CHECK(are_equivalent(CircleAction(1, 1, 0, two), CircleAction(1, -1, 0, two)));
    CHECK_FALSE(are_equivalent(CircleAction(1, 1, 2, two), CircleAction(1, -1, 2, two)));

    // equivalence across different twistings of the same product surface
    CHECK(are_equivalent(CircleAction(1, 3, 2, three), CircleAction(1, 3, 4, three)));

    // the factor swap is an equivalence only on the square
    CHECK(are_equivalent(CircleAction(1, 2, 0, Rat(1)), CircleAction(2, 1, 0, Rat(1))));
    CHECK_FALSE(are_equivalent(CircleAction(1, 2, 0, two), CircleAction(2, 1, 0, two)));

    // mismatched widths or manifolds are a usage error
    CHECK_THROWS_AS(are_equivalent(CircleAction(1, 1, 2, two), CircleAction(1, 1, 2, three)),
                    invalid_input);
    CHECK_THROWS_AS(are_equivalent(CircleAction(1, 1, 2, two), CircleAction(1, 1, 1, two)),
                    invalid_input);
}

TEST_CASE("toric extensions: entries, targets, and codimensions") {
    // a two-strata action extends to both neighbouring Hirzebruch surfaces
    ToricExtensionReport rep = toric_extensions(CircleAction(1, 3, 2, Rat(3)));
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[0].target_m == 2);
    CHECK(rep.entries[0].subcircle == WPair{1, 3});
    CHECK(rep.entries[0].complex_codim == 0);
    CHECK(rep.entries[1].target_m == 4);
    CHECK(rep.entries[1].subcircle == WPair{1, 3});
    CHECK(rep.entries[1].complex_codim == 1);

    // the second extension lands at m' = 0 when 2b = am
    rep = toric_extensions(CircleAction(1, 1, 2, Rat(2)));
    REQUIRE(rep.entries.size() == 2);
    CHECK(rep.entries[0].target_m == 2);
    CHECK(rep.entries[0].complex_codim == 1);
    CHECK(rep.entries[1].target_m == 0);
    CHECK(rep.entries[1].complex_codim == 0);

    // |a| != 1, b in {0, am}, or a width below the threshold: a single entry
    for (auto act : {CircleAction(2, 1, 0, Rat(2)), CircleAction(1, 2, 2, Rat(2)),
                     CircleAction(1, 0, 2, Rat(2)), CircleAction(1, 5, 2, Rat(2)),
                     CircleAction(0, 1, 4, Rat(3))}) {
        ToricExtensionReport single = toric_extensions(act);
        REQUIRE(single.entries.size() == 1);
        CHECK(single.entries[0].target_m == act.m());
        CHECK(single.entries[0].complex_codim == 0);
    }

    // exactly one codimension-zero entry, and second targets differ from m
    for (const CircleAction& act : small_grid(4, 5)) {
        ToricExtensionReport r = toric_extensions(act);
        int zeros = 0;
        for (const auto& e : r.entries) {
            CHECK((e.complex_codim == 0 || e.complex_codim == 1));
            zeros += e.complex_codim == 0;
        }
        CHECK(zeros == 1);
        if (r.entries.size() == 2) CHECK(r.entries[1].target_m != act.m());
    }
}

TEST_CASE("extension soundness: the subcircle inside the target is the same action") {
    for (const CircleAction& act : small_grid(3, 4)) {
        for (const auto& e : toric_extensions(act).entries) {
            CircleAction inside(e.subcircle.first, e.subcircle.second, e.target_m,
                                act.lambda());
            CHECK(graphs_equivalent(build_graph(act), build_graph(inside)));
        }
    }
}

TEST_CASE("strata intersections are the extension targets, ascending") {
    using L = std::vector<long long>;
    CHECK(strata_intersections(CircleAction(1, 1, 2, Rat(2))) == L{0, 2});
    CHECK(strata_intersections(CircleAction(1, 3, 2, Rat(3))) == L{2, 4});
    CHECK(strata_intersections(CircleAction(1, 5, 2, Rat(2))) == L{2});
    CHECK(strata_intersections(CircleAction(0, 1, 4, Rat(3))) == L{4});
    CHECK(strata_intersections(CircleAction(1, 1, 3, Rat(5) / Rat(2))) == L{1, 3});
}

TEST_CASE("stratum codimension lookup") {
    CHECK(stratum_codimension(CircleAction(1, 1, 2, Rat(2)), 2) == 1);
    CHECK(stratum_codimension(CircleAction(1, 1, 2, Rat(2)), 0) == 0);
    CHECK(stratum_codimension(CircleAction(1, 3, 4, Rat(3)), 4) == 1);
    CHECK(stratum_codimension(CircleAction(1, 3, 2, Rat(3)), 2) == 0);
    CHECK_THROWS_AS(stratum_codimension(CircleAction(1, 5, 2, Rat(2)), 0), invalid_input);
}

TEST_CASE("dimension of the space of invariant deformations") {
    CHECK(invariant_deformation_dimension(CircleAction(1, 1, 2, Rat(2))) == 1);
    CHECK(invariant_deformation_dimension(CircleAction(0, 1, 2, Rat(2))) == 0);
    CHECK(invariant_deformation_dimension(CircleAction(1, 1, 3, Rat(5) / Rat(2))) == 1);
    CHECK(invariant_deformation_dimension(CircleAction(1, 3, 4, Rat(3))) == 1);
    CHECK(invariant_deformation_dimension(CircleAction(1, 3, 2, Rat(3))) == 0);
    CHECK(invariant_deformation_dimension(CircleAction(2, 1, 0, Rat(2))) == 0);

    // always 0 or 1, and equal to the codimension at the action's own stratum
    // whenever |a| = 1
    for (const CircleAction& act : small_grid(4, 5)) {
        int d = invariant_deformation_dimension(act);
        CHECK((d == 0 || d == 1));
        if (act.a() == 1 || act.a() == -1)
            CHECK(d == stratum_codimension(act, act.m()));
    }
}
