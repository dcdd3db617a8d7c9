// SPDX-License-Identifier: MIT
#include "hamcirc/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace hamcirc {

GraphVertex GraphVertex::isolated(int id, Rat moment, long long w1, long long w2,
                                  std::string tag) {
    GraphVertex v;
    v.id = id;
    v.kind = VertexKind::Isolated;
    v.moment = std::move(moment);
    v.weights = std::minmax(w1, w2);
    v.tag = std::move(tag);
    return v;
}

GraphVertex GraphVertex::fat(int id, Rat moment, Rat area, int genus) {
    GraphVertex v;
    v.id = id;
    v.kind = VertexKind::Fat;
    v.moment = std::move(moment);
    v.area = std::move(area);
    v.genus = genus;
    return v;
}

const GraphVertex& KarshonGraph::vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v;
    throw invariant_violation("graph edge references unknown vertex id " +
                              std::to_string(id));
}

SphereData sphere_data(long long south_normal_weight, long long north_normal_weight,
                       const Rat& mu_south, const Rat& mu_north, long long k) {
    if (k < 1) throw invalid_input("sphere isotropy must be >= 1");
    if (!(mu_north > mu_south))
        throw invalid_input("sphere_data requires mu_north > mu_south");
    long long diff = south_normal_weight - north_normal_weight;
    if (diff % k != 0)
        throw invariant_violation(
            "inconsistent weights: normal-weight difference " + std::to_string(diff) +
            " is not divisible by isotropy " + std::to_string(k));
    return SphereData{diff / k, (mu_north - mu_south) / Rat(k), k};
}

SphereData edge_sphere_data(const KarshonGraph& g, const GraphEdge& e) {
    const GraphVertex* u = &g.vertex(e.a);
    const GraphVertex* v = &g.vertex(e.b);
    if (u->kind != VertexKind::Isolated || v->kind != VertexKind::Isolated)
        throw invalid_input("edge endpoints must be isolated vertices");
    if (u->moment == v->moment)
        throw invalid_input("edge endpoints share a moment label");
    const GraphVertex* south = u->moment < v->moment ? u : v;
    const GraphVertex* north = u->moment < v->moment ? v : u;
    auto normal_of = [&](const GraphVertex* p, long long along) -> long long {
        if (p->weights.first == along) return p->weights.second;
        if (p->weights.second == along) return p->weights.first;
        throw invariant_violation("vertex " + std::to_string(p->id) +
                                  " lacks the pole weight " + std::to_string(along) +
                                  " of its incident edge");
    };
    return sphere_data(normal_of(south, e.isotropy), normal_of(north, -e.isotropy),
                       south->moment, north->moment, e.isotropy);
}

namespace {

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace

ValidationReport validate_admissible(const KarshonGraph& g) {
    ValidationReport report;
    auto fail = [&](int vertex, const std::string& msg) {
        report.failures.push_back({"admissibility", vertex, msg});
    };

    if (g.vertices.empty()) {
        fail(-1, "graph has no vertices");
        return report;
    }
    std::set<int> ids;
    for (const auto& v : g.vertices)
        if (!ids.insert(v.id).second) fail(v.id, "duplicate vertex id");
    for (const auto& e : g.edges) {
        if (!ids.count(e.a) || !ids.count(e.b)) {
            fail(-1, "edge references a missing vertex id");
            return report;
        }
        if (e.a == e.b) fail(e.a, "edge is a loop");
        if (e.isotropy < 2) fail(e.a, "edge isotropy below 2");
    }

    // Extremal vertices: the global min and max moment, each unique.
    Rat mn = g.vertices.front().moment, mx = g.vertices.front().moment;
    for (const auto& v : g.vertices) {
        mn = std::min(mn, v.moment);
        mx = std::max(mx, v.moment);
    }
    int n_min = 0, n_max = 0;
    for (const auto& v : g.vertices) {
        n_min += v.moment == mn;
        n_max += v.moment == mx;
    }
    if (g.vertices.size() < 2) fail(-1, "graph needs distinct extrema");
    if (n_min != 1 || n_max != 1)
        fail(-1, "expected exactly two extremal vertices, found " +
                     std::to_string(n_min) + " at the minimum and " +
                     std::to_string(n_max) + " at the maximum");
    auto extremal = [&](const GraphVertex& v) { return v.moment == mn || v.moment == mx; };

    std::vector<const GraphVertex*> fats;
    for (const auto& v : g.vertices)
        if (v.kind == VertexKind::Fat) fats.push_back(&v);
    for (const auto* f : fats) {
        if (!extremal(*f)) fail(f->id, "fat vertex is not extremal");
        if (!(f->area > Rat(0))) fail(f->id, "fat vertex area must be positive");
        if (f->genus < 0) fail(f->id, "fat vertex genus must be nonnegative");
    }
    if (fats.size() == 2 && fats[0]->genus != fats[1]->genus)
        fail(fats[0]->id, "two fat vertices must have equal genus");
    if (fats.size() > 2) fail(-1, "more than two fat vertices");

    std::map<int, std::vector<const GraphEdge*>> incident;
    for (const auto& e : g.edges) {
        incident[e.a].push_back(&e);
        incident[e.b].push_back(&e);
    }
    for (const auto& v : g.vertices) {
        auto deg = incident[v.id].size();
        if (deg > 2) fail(v.id, "vertex has more than two incident edges");
        if (v.kind == VertexKind::Fat && deg > 0)
            fail(v.id, "no edge may be connected to a fat vertex");
    }

    for (const auto& e : g.edges)
        if (g.vertex(e.a).moment == g.vertex(e.b).moment)
            fail(e.a, "edge endpoints share a moment label");

    // Monotonicity: an interior vertex on two edges must have one neighbor
    // strictly below and one strictly above.
    for (const auto& v : g.vertices) {
        if (extremal(v) || incident[v.id].size() != 2) continue;
        int up = 0, down = 0;
        for (const auto* e : incident[v.id]) {
            const GraphVertex& other = g.vertex(e->a == v.id ? e->b : e->a);
            (other.moment > v.moment ? up : down)++;
        }
        if (up != 1 || down != 1)
            fail(v.id, "moment labels are not monotone through this vertex");
    }

    // Chains: maximal monotone edge paths. Walk upward from every edge whose
    // lower end does not continue downward (an extremal or degree-1 start).
    auto other_end = [&](const GraphEdge* e, int id) { return e->a == id ? e->b : e->a; };
    auto lower_id = [&](const GraphEdge* e) {
        return g.vertex(e->a).moment < g.vertex(e->b).moment ? e->a : e->b;
    };
    auto continues_down = [&](const GraphEdge* e, int low) {
        for (const auto* f : incident[low])
            if (f != e && g.vertex(other_end(f, low)).moment < g.vertex(low).moment)
                return f;
        return static_cast<const GraphEdge*>(nullptr);
    };
    for (const auto& start : g.edges) {
        int low = lower_id(&start);
        if (g.vertex(start.a).moment == g.vertex(start.b).moment) continue;
        if (continues_down(&start, low)) continue;  // interior edge of some chain
        std::vector<long long> ks;
        const GraphEdge* cur = &start;
        int at = other_end(cur, low);
        ks.push_back(cur->isotropy);
        while (true) {
            const GraphEdge* next = nullptr;
            for (const auto* f : incident[at])
                if (f != cur && g.vertex(other_end(f, at)).moment > g.vertex(at).moment)
                    next = f;
            if (!next) break;
            cur = next;
            at = other_end(cur, at);
            ks.push_back(cur->isotropy);
        }
        for (size_t i = 0; i + 1 < ks.size(); ++i)
            if (gcd_ll(ks[i], ks[i + 1]) != 1)
                fail(-1, "consecutive chain isotropies " + std::to_string(ks[i]) + ", " +
                             std::to_string(ks[i + 1]) + " are not coprime");
        for (size_t i = 1; i + 1 < ks.size(); ++i)
            if ((ks[i - 1] + ks[i + 1]) % ks[i] != 0)
                fail(-1, "chain isotropies " + std::to_string(ks[i - 1]) + ", " +
                             std::to_string(ks[i]) + ", " + std::to_string(ks[i + 1]) +
                             " violate (k_prev + k_next)/k integrality");
    }

    // Weight consistency for isolated vertices.
    for (const auto& v : g.vertices) {
        if (v.kind != VertexKind::Isolated) continue;
        auto [w1, w2] = v.weights;
        if (w1 == 0 || w2 == 0) {
            fail(v.id, "isolated vertex has a zero weight (would lie on a fixed surface)");
            continue;
        }
        if (v.moment == mn && (w1 < 0 || w2 < 0))
            fail(v.id, "minimum vertex must have both weights positive");
        else if (v.moment == mx && (w1 > 0 || w2 > 0))
            fail(v.id, "maximum vertex must have both weights negative");
        else if (v.moment != mn && v.moment != mx && !(w1 < 0 && w2 > 0))
            fail(v.id, "interior vertex needs one positive and one negative weight");

        // Multiset of pole demands from weights with |w| >= 2 must match the
        // multiset of incident edge poles (+k south, -k north).
        std::multiset<long long> want, have;
        for (long long w : {w1, w2})
            if (w >= 2 || w <= -2) want.insert(w);
        for (const auto* e : incident[v.id]) {
            const GraphVertex& other = g.vertex(other_end(e, v.id));
            have.insert(other.moment > v.moment ? e->isotropy : -e->isotropy);
        }
        if (want != have)
            fail(v.id, "weights disagree with incident edge poles");
    }

    return report;
}

KarshonGraph apply_agl1(const KarshonGraph& g, const Agl1& t) {
    KarshonGraph out = g;
    for (auto& v : out.vertices) {
        v.moment = t.apply(v.moment);
        if (t.sign == -1 && v.kind == VertexKind::Isolated)
            v.weights = std::minmax(-v.weights.first, -v.weights.second);
    }
    return out;
}

namespace {

// Total order used for the canonical vertex sort; tags never participate.
auto vertex_key(const GraphVertex& v) {
    return std::make_tuple(v.moment, v.kind == VertexKind::Isolated ? 1 : 0, v.area,
                           v.genus, v.weights.first, v.weights.second);
}

KarshonGraph normalized_candidate(const KarshonGraph& g, int sign) {
    KarshonGraph c = apply_agl1(g, Agl1(sign, Rat(0)));
    Rat mn = c.vertices.front().moment;
    for (const auto& v : c.vertices) mn = std::min(mn, v.moment);
    for (auto& v : c.vertices) v.moment = v.moment - mn;

    std::vector<int> order(c.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return vertex_key(c.vertices[i]) < vertex_key(c.vertices[j]);
    });

    std::map<int, int> new_id;
    KarshonGraph out;
    for (size_t pos = 0; pos < order.size(); ++pos) {
        GraphVertex v = c.vertices[order[pos]];
        new_id[v.id] = static_cast<int>(pos);
        v.id = static_cast<int>(pos);
        out.vertices.push_back(std::move(v));
    }
    for (const auto& e : c.edges) {
        GraphEdge f;
        f.a = std::min(new_id[e.a], new_id[e.b]);
        f.b = std::max(new_id[e.a], new_id[e.b]);
        f.isotropy = e.isotropy;
        out.edges.push_back(f);
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::tie(x.a, x.b, x.isotropy) < std::tie(y.a, y.b, y.isotropy);
    });
    return out;
}

}  // namespace

std::string graph_serialize(const KarshonGraph& g) {
    std::string s;
    for (const auto& v : g.vertices) {
        if (v.kind == VertexKind::Fat) {
            s += "F " + v.moment.str() + " " + v.area.str() + " " +
                 std::to_string(v.genus) + ";";
        } else {
            s += "I " + v.moment.str() + " " + std::to_string(v.weights.first) + "," +
                 std::to_string(v.weights.second) + ";";
        }
    }
    for (const auto& e : g.edges)
        s += "E " + std::to_string(e.a) + "-" + std::to_string(e.b) + " k" +
             std::to_string(e.isotropy) + ";";
    return s;
}

KarshonGraph canonicalize(const KarshonGraph& g) {
    ValidationReport rep = validate_admissible(g);
    if (!rep.valid())
        throw invalid_input("canonicalize requires an admissible graph: " +
                            rep.failures.front().message);
    KarshonGraph up = normalized_candidate(g, 1);
    KarshonGraph down = normalized_candidate(g, -1);
    return graph_serialize(up) <= graph_serialize(down) ? up : down;
}

bool graphs_equivalent(const KarshonGraph& g1, const KarshonGraph& g2) {
    return graph_serialize(canonicalize(g1)) == graph_serialize(canonicalize(g2));
}

std::optional<Rat> localization_sum(const KarshonGraph& g) {
    Rat sum(0);
    for (const auto& v : g.vertices) {
        if (v.kind != VertexKind::Isolated) return std::nullopt;
        if (v.weights.first == 0 || v.weights.second == 0) return std::nullopt;
        sum += Rat(1) / Rat(BigInt(v.weights.first) * BigInt(v.weights.second));
    }
    return sum;
}

}  // namespace hamcirc
