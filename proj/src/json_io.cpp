// SPDX-License-Identifier: MIT
#include "hamcirc/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace hamcirc {

json rat_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (!j.is_string())
        throw invalid_input("expected a rational encoded as a \"p/q\" string");
    return Rat::parse(j.get<std::string>());
}

json polygon_json(const Polygon& p) {
    json out = json::array();
    for (const auto& v : p.vertices) out.push_back({v[0].str(), v[1].str()});
    return out;
}

json validation_json(const ValidationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(
            {{"property", f.property}, {"vertex", f.vertex}, {"message", f.message}});
    return {{"valid", r.valid()}, {"failures", failures}};
}

json graph_json(const KarshonGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices) {
        json jv;
        jv["id"] = v.id;
        jv["kind"] = v.kind == VertexKind::Fat ? "fat" : "isolated";
        jv["moment"] = v.moment.str();
        if (v.kind == VertexKind::Fat) {
            jv["area"] = v.area.str();
            jv["genus"] = v.genus;
        } else {
            jv["weights"] = {v.weights.first, v.weights.second};
        }
        vertices.push_back(std::move(jv));
    }
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"a", e.a}, {"b", e.b}, {"k", e.isotropy}});
    return {{"vertices", vertices}, {"edges", edges}};
}

KarshonGraph graph_from_json(const json& j) {
    KarshonGraph g;
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw invalid_input("graph JSON needs \"vertices\" and \"edges\" arrays");
    for (const auto& jv : j.at("vertices")) {
        std::string kind = jv.at("kind").get<std::string>();
        int id = jv.at("id").get<int>();
        Rat moment = Rat::parse(jv.at("moment").get<std::string>());
        if (kind == "fat") {
            g.vertices.push_back(GraphVertex::fat(
                id, moment, Rat::parse(jv.at("area").get<std::string>()),
                jv.at("genus").get<int>()));
        } else if (kind == "isolated") {
            const auto& w = jv.at("weights");
            g.vertices.push_back(GraphVertex::isolated(
                id, moment, w.at(0).get<long long>(), w.at(1).get<long long>()));
        } else {
            throw invalid_input("unknown vertex kind \"" + kind + "\"");
        }
    }
    for (const auto& je : j.at("edges")) {
        GraphEdge e;
        e.a = je.at("a").get<int>();
        e.b = je.at("b").get<int>();
        e.isotropy = je.at("k").get<long long>();
        g.edges.push_back(e);
    }
    return g;
}

json action_json(const CircleAction& act) {
    return {{"a", act.a()}, {"b", act.b()}, {"m", act.m()},
            {"lambda", act.lambda().str()}};
}

json extensions_json(const CircleAction& act) {
    json entries = json::array();
    for (const auto& e : toric_extensions(act).entries)
        entries.push_back({{"target_m", e.target_m},
                           {"subcircle", {e.subcircle.first, e.subcircle.second}},
                           {"complex_codim", e.complex_codim}});
    return {{"action", action_json(act)}, {"entries", entries}};
}

json strata_json(const CircleAction& act) {
    auto entries = toric_extensions(act).entries;
    std::sort(entries.begin(), entries.end(),
              [](const ToricExtensionEntry& x, const ToricExtensionEntry& y) {
                  return x.target_m < y.target_m;
              });
    json out = json::array();
    for (const auto& e : entries)
        out.push_back({{"s", e.target_m},
                       {"codim", e.complex_codim},
                       {"subcircle", {e.subcircle.first, e.subcircle.second}}});
    return out;
}

json equivalences_json(const CircleAction& act) {
    std::set<std::tuple<long long, long long, long long>> found;
    for (const auto& [a, b] : weyl_orbit(act))
        if (a != act.a() || b != act.b()) found.insert({act.m(), a, b});
    for (const auto& e : toric_extensions(act).entries) {
        if (e.target_m == act.m()) continue;
        CircleAction target(e.subcircle.first, e.subcircle.second, e.target_m,
                            act.lambda());
        for (const auto& [a, b] : weyl_orbit(target)) found.insert({e.target_m, a, b});
    }
    json out = json::array();
    for (const auto& [m, a, b] : found)
        out.push_back({{"a", a}, {"b", b}, {"m", m}});
    return out;
}

json classify_report(const CircleAction& act, int max_degree,
                     long long characteristic) {
    HomotopyType type = classify_homotopy_type(act);
    json report;
    report["action"] = action_json(act);
    report["manifold"] = manifold_name(act.manifold());
    report["graph"] = graph_json(build_graph(act));
    report["strata"] = strata_json(act);
    report["homotopy_type"] = homotopy_type_name(type);
    report["homology_ranks"] = {
        {"characteristic", characteristic},
        {"max_degree", max_degree},
        {"ranks", homology_ranks(type, max_degree, characteristic)}};
    report["equivalences_found"] = equivalences_json(act);
    report["warnings"] = json::array();
    return report;
}

std::string classify_pretty(const json& report) {
    const json& act = report.at("action");
    std::string s;
    s += "action      S^1(a=" + act.at("a").dump() + ", b=" + act.at("b").dump() +
         "; m=" + act.at("m").dump() + "), lambda = " +
         act.at("lambda").get<std::string>() + "\n";
    s += "manifold    " + report.at("manifold").get<std::string>() + "\n";
    std::string type_token = report.at("homotopy_type").get<std::string>();
    std::string type_line = type_token;
    for (HomotopyType t : {HomotopyType::Torus2, HomotopyType::Torus2xZ2,
                           HomotopyType::S1xSO3, HomotopyType::U2,
                           HomotopyType::OmegaS3xT3})
        if (type_token == homotopy_type_name(t))
            type_line += std::string(" (") + homotopy_type_display(t) + ")";
    s += "homotopy    " + type_line + "\n";
    s += "strata     ";
    for (const auto& st : report.at("strata"))
        s += " U_" + st.at("s").dump() + " (codim " + st.at("codim").dump() +
             ", subcircle (" + st.at("subcircle").at(0).dump() + "," +
             st.at("subcircle").at(1).dump() + "))";
    s += "\n";
    s += "graph\n";
    for (const auto& v : report.at("graph").at("vertices")) {
        if (v.at("kind").get<std::string>() == "fat")
            s += "  fat       mu=" + v.at("moment").get<std::string>() +
                 "  area=" + v.at("area").get<std::string>() +
                 "  genus=" + v.at("genus").dump() + "\n";
        else
            s += "  isolated  mu=" + v.at("moment").get<std::string>() + "  weights=(" +
                 v.at("weights").at(0).dump() + "," + v.at("weights").at(1).dump() +
                 ")\n";
    }
    for (const auto& e : report.at("graph").at("edges"))
        s += "  edge      " + e.at("a").dump() + " -- " + e.at("b").dump() +
             "  isotropy " + e.at("k").dump() + "\n";
    const json& ranks = report.at("homology_ranks");
    s += "ranks (char " + ranks.at("characteristic").dump() + ", degrees 0.." +
         ranks.at("max_degree").dump() + ")  ";
    for (const auto& r : ranks.at("ranks")) s += r.dump() + " ";
    s += "\n";
    s += "equivalent ";
    for (const auto& e : report.at("equivalences_found"))
        s += " (" + e.at("a").dump() + "," + e.at("b").dump() + ";" +
             e.at("m").dump() + ")";
    s += "\n";
    return s;
}

json presentation_json(const CohomologyPresentation& p) {
    json generators = json::array();
    for (const auto& [name, degree] : p.generators)
        generators.push_back({{"name", name}, {"degree", degree}});
    return {{"characteristic", p.characteristic},
            {"commutation", p.commutation},
            {"generators", generators},
            {"relations", p.relations}};
}

json element_json(const AlgebraElement& e) {
    json out = json::object();
    for (const auto& [w, c] : e.terms) out[w.str()] = c.str();
    return out;
}

std::string graph_dot(const KarshonGraph& g) {
    std::string s = "graph action {\n  rankdir=BT;\n  node [fontsize=10];\n";
    for (const auto& v : g.vertices) {
        std::string name = "v" + std::to_string(v.id);
        if (v.kind == VertexKind::Fat) {
            std::string label = "\u03bc=" + v.moment.str() + ", A=" + v.area.str();
            if (v.genus > 0) label += ", g=" + std::to_string(v.genus);
            s += "  " + name + " [shape=ellipse, label=\"" + label + "\"];\n";
        } else {
            std::string label = "\u03bc=" + v.moment.str() + ", w=(" +
                                std::to_string(v.weights.first) + "," +
                                std::to_string(v.weights.second) + ")";
            s += "  " + name + " [shape=circle, label=\"" + label + "\"];\n";
        }
    }
    for (const auto& e : g.edges)
        s += "  v" + std::to_string(e.a) + " -- v" + std::to_string(e.b) +
             " [label=\"" + std::to_string(e.isotropy) + "\"];\n";
    s += "}\n";
    return s;
}

std::string graph_tikz(const KarshonGraph& g) {
    // Level = rank of the vertex's moment among the distinct moments; x is the
    // offset within a shared level.  All coordinates are small integers.
    std::vector<Rat> moments;
    for (const auto& v : g.vertices) moments.push_back(v.moment);
    std::sort(moments.begin(), moments.end());
    moments.erase(std::unique(moments.begin(), moments.end()), moments.end());
    auto level_of = [&](const Rat& mu) {
        return static_cast<int>(std::lower_bound(moments.begin(), moments.end(), mu) -
                                moments.begin());
    };
    std::map<int, int> used_at_level;
    std::map<int, std::pair<int, int>> pos;  // vertex id -> (x, y)
    std::string s = "\\begin{tikzpicture}[yscale=1.2]\n";
    for (const auto& v : g.vertices) {
        int y = level_of(v.moment);
        int x = used_at_level[y]++;
        pos[v.id] = {x, y};
        std::string at =
            "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        std::string name = "v" + std::to_string(v.id);
        if (v.kind == VertexKind::Fat) {
            std::string label = "$\\mu=" + v.moment.str() + "$, $A=" + v.area.str() + "$";
            if (v.genus > 0) label += ", $g=" + std::to_string(v.genus) + "$";
            s += "  \\node[draw, ellipse, minimum width=18pt, minimum height=8pt, "
                 "label=right:{" +
                 label + "}] (" + name + ") at " + at + " {};\n";
        } else {
            std::string label = "$\\mu=" + v.moment.str() + "$, $w=(" +
                                std::to_string(v.weights.first) + "," +
                                std::to_string(v.weights.second) + ")$";
            s += "  \\node[circle, fill, inner sep=1.5pt, label=right:{" + label +
                 "}] (" + name + ") at " + at + " {};\n";
        }
    }
    for (const auto& e : g.edges)
        s += "  \\draw (v" + std::to_string(e.a) + ") -- (v" + std::to_string(e.b) +
             ") node[midway, left] {$" + std::to_string(e.isotropy) + "$};\n";
    s += "\\end{tikzpicture}\n";
    return s;
}

}  // namespace hamcirc
