// SPDX-License-Identifier: MIT
#pragma once

/// Labelled graphs classifying Hamiltonian circle actions on symplectic
/// 4-manifolds: vertices are fixed points (isolated, or "fat" fixed surfaces
/// with genus and area labels), edges are Z_k-spheres with isotropy k >= 2,
/// and every vertex carries the moment-map value. Graphs are compared up to
/// the AGL(1,Z) action on moment labels.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamcirc/polygon.hpp"
#include "hamcirc/rational.hpp"

namespace hamcirc {

enum class VertexKind { Fat, Isolated };

struct GraphVertex {
    int id = 0;
    VertexKind kind = VertexKind::Isolated;
    Rat moment;
    // Fat only: symplectic area (> 0) and genus of the fixed surface.
    Rat area;
    int genus = 0;
    // Isolated only: the unordered isotropy-weight pair of the linearized
    // action, stored sorted ascending.
    std::pair<long long, long long> weights{0, 0};
    // Provenance only (fixed-point name in the trapezoid); never compared.
    std::string tag;

    static GraphVertex isolated(int id, Rat moment, long long w1, long long w2,
                                std::string tag = {});
    static GraphVertex fat(int id, Rat moment, Rat area, int genus = 0);
};

struct GraphEdge {
    int a = 0;  // endpoint vertex ids, a < b
    int b = 0;
    long long isotropy = 2;
};

struct KarshonGraph {
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;

    const GraphVertex& vertex(int id) const;
};

/// Label data of one invariant sphere: self-intersection e, symplectic
/// area, isotropy k.
struct SphereData {
    long long self_intersection = 0;
    Rat area;
    long long isotropy = 1;
};

/// Sphere labels from the raw pole data. The self-intersection
/// e = (south_normal_weight - north_normal_weight)/k must come out an
/// integer; area = (mu_north - mu_south)/k. Rejects mu_north <= mu_south,
/// k < 1, and non-integral e.
SphereData sphere_data(long long south_normal_weight, long long north_normal_weight,
                       const Rat& mu_south, const Rat& mu_north, long long k);

/// Sphere labels of a stored graph edge; both endpoints must be isolated
/// vertices whose weight pairs contain +k (south) and -k (north).
SphereData edge_sphere_data(const KarshonGraph& g, const GraphEdge& e);

/// Admissibility of a labelled graph, every failure reported:
/// exactly two extremal vertices; fat vertices extremal; two fat vertices
/// have equal genus; fat areas positive; no vertex of degree > 2 and no
/// edge at a fat vertex; strict moment monotonicity along chains; chain
/// isotropies k_1..k_l satisfy gcd(k_i,k_{i+1}) = 1 and
/// (k_{i-1}+k_{i+1})/k_i integral; isolated-vertex weights consistent with
/// pole signs (+k south pole of a k-edge, -k north pole, no zero weights,
/// min has both weights positive-side, max negative-side, interior mixed).
ValidationReport validate_admissible(const KarshonGraph& g);

/// Applies mu -> sign*mu + shift to every moment label; a sign flip is a
/// reparametrization of the circle, so it also negates isolated weights.
KarshonGraph apply_agl1(const KarshonGraph& g, const Agl1& t);

/// Canonical representative of the AGL(1,Z) orbit: both orientations are
/// translated to min mu = 0, vertices sorted by (moment, kind, area, genus,
/// weights), edges relabeled and sorted, and the lexicographically smaller
/// serialization wins. Idempotent. Rejects inadmissible graphs.
KarshonGraph canonicalize(const KarshonGraph& g);

/// Deterministic serialization used for canonical comparison (tags omitted).
std::string graph_serialize(const KarshonGraph& g);

/// True iff the canonical forms coincide structurally (tags ignored).
bool graphs_equivalent(const KarshonGraph& g1, const KarshonGraph& g2);

/// Exact sum of 1/(w1*w2) over isolated vertices; nullopt when the graph
/// has a fat vertex or any zero weight. Zero for every graph built from a
/// circle action with only isolated fixed points.
std::optional<Rat> localization_sum(const KarshonGraph& g);

}  // namespace hamcirc
