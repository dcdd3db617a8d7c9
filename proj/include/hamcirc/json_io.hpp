// SPDX-License-Identifier: MIT
//
// JSON, DOT and TikZ serialization for the classification types.  All JSON
// uses insertion-ordered objects so reports are byte-deterministic; rationals
// travel as exact "p/q" strings, never as floating point.

#pragma once

#include <string>

#include "json.hpp"

#include "hamcirc/action.hpp"
#include "hamcirc/algebra.hpp"
#include "hamcirc/graph.hpp"
#include "hamcirc/polygon.hpp"

namespace hamcirc {

using json = nlohmann::ordered_json;

json rat_json(const Rat& r);
Rat rat_from_json(const json& j);

/// Polygon as [["p","q"], ...]; validation report as {valid, failures}.
json polygon_json(const Polygon& p);
json validation_json(const ValidationReport& r);

/// Graph schema: {vertices: [{id, kind, moment, area?, genus?, weights?}],
/// edges: [{a, b, k}]}.  Corner tags are presentation detail and are omitted.
json graph_json(const KarshonGraph& g);
KarshonGraph graph_from_json(const json& j);

json action_json(const CircleAction& act);
json extensions_json(const CircleAction& act);
/// Strata entries [{s, codim, subcircle}], ascending in s.
json strata_json(const CircleAction& act);
/// Other presentations (a,b;m) equivalent to the action, sorted.
json equivalences_json(const CircleAction& act);

/// The full classification report: action echo, manifold, graph, strata,
/// homotopy type, homology ranks, equivalent presentations, warnings.
json classify_report(const CircleAction& act, int max_degree = 8,
                     long long characteristic = 0);

/// Multi-line human-readable rendering of a classification report.
std::string classify_pretty(const json& report);

json presentation_json(const CohomologyPresentation& p);

/// Algebra element as {"word": "coeff"} with basis-word keys like "w^2 x t".
json element_json(const AlgebraElement& e);

/// Graphviz rendering: fat vertices as ellipses labelled "μ=…, A=…",
/// isolated vertices as circles labelled with moment and weights, edges
/// labelled by isotropy.  Byte-deterministic for a fixed graph.
std::string graph_dot(const KarshonGraph& g);

/// TikZ rendering following the usual figure conventions: ellipse for fat
/// vertices, filled dot for isolated ones, edge label = isotropy.  Vertices
/// sit at integer coordinates (offset within a moment level, level index),
/// so the output contains no floating point.
std::string graph_tikz(const KarshonGraph& g);

}  // namespace hamcirc
