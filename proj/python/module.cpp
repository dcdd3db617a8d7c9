// SPDX-License-Identifier: MIT
//
// Python bindings.  JSON-shaped results are converted to native Python
// objects; invalid_input maps to ValueError and invariant_violation to
// RuntimeError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamcirc/action.hpp"
#include "hamcirc/algebra.hpp"
#include "hamcirc/json_io.hpp"
#include "hamcirc/sweep.hpp"

namespace py = pybind11;
using namespace hamcirc;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items())
                out[py::str(key)] = to_py(value);
            return out;
        }
        default:
            return py::none();
    }
}

CircleAction make_action(long long a, long long b, long long m,
                         const std::string& lam) {
    return CircleAction(a, b, m, Rat::parse(lam));
}

HomotopyType type_from_token(const std::string& name) {
    for (HomotopyType t : {HomotopyType::Torus2, HomotopyType::Torus2xZ2,
                           HomotopyType::S1xSO3, HomotopyType::U2,
                           HomotopyType::OmegaS3xT3})
        if (name == homotopy_type_name(t)) return t;
    throw invalid_input("unknown homotopy type \"" + name +
                        "\", expected one of Torus2, Torus2xZ2, S1xSO3, U2, "
                        "OmegaS3xT3");
}

Manifold manifold_from_token(const std::string& name) {
    if (name == "S2xS2") return Manifold::Product;
    if (name == "CP2#CP2bar") return Manifold::NonTrivialBundle;
    throw invalid_input("unknown manifold \"" + name +
                        "\", expected \"S2xS2\" or \"CP2#CP2bar\"");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() =
        "Exact classification of Hamiltonian circle actions S^1(a,b;m) on "
        "S2xS2 and CP2#CP2bar: labelled graphs, toric extensions, strata, "
        "and homotopy types of the symplectomorphism groups.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const invalid_input& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const invariant_violation& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    mod.def(
        "classify",
        [](long long a, long long b, long long m, const std::string& lam,
           int max_degree, long long characteristic) {
            return to_py(
                classify_report(make_action(a, b, m, lam), max_degree, characteristic));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"),
        py::arg("max_degree") = 8, py::arg("characteristic") = 0,
        "Full classification report of S^1(a,b;m) at width lam (a \"p/q\" string).");

    mod.def(
        "graph",
        [](long long a, long long b, long long m, const std::string& lam,
           bool canonical) {
            KarshonGraph g = build_graph(make_action(a, b, m, lam));
            if (canonical) g = canonicalize(g);
            return to_py(graph_json(g));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"),
        py::arg("canonical") = false, "Labelled graph of the action as a dict.");

    mod.def(
        "graph_dot",
        [](long long a, long long b, long long m, const std::string& lam,
           bool canonical) {
            KarshonGraph g = build_graph(make_action(a, b, m, lam));
            if (canonical) g = canonicalize(g);
            return graph_dot(g);
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"),
        py::arg("canonical") = false, "Graphviz source for the labelled graph.");

    mod.def(
        "graph_tikz",
        [](long long a, long long b, long long m, const std::string& lam,
           bool canonical) {
            KarshonGraph g = build_graph(make_action(a, b, m, lam));
            if (canonical) g = canonicalize(g);
            return graph_tikz(g);
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"),
        py::arg("canonical") = false, "TikZ source for the labelled graph.");

    mod.def(
        "are_equivalent",
        [](long long a1, long long b1, long long m1, long long a2, long long b2,
           long long m2, const std::string& lam) {
            Rat w = Rat::parse(lam);
            return are_equivalent(CircleAction(a1, b1, m1, w),
                                  CircleAction(a2, b2, m2, w));
        },
        py::arg("a1"), py::arg("b1"), py::arg("m1"), py::arg("a2"), py::arg("b2"),
        py::arg("m2"), py::arg("lam"),
        "Whether two actions on the same manifold are equivalent.");

    mod.def(
        "toric_extensions",
        [](long long a, long long b, long long m, const std::string& lam) {
            return to_py(extensions_json(make_action(a, b, m, lam))["entries"]);
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"),
        "Toric actions this circle extends to, with codimensions.");

    mod.def(
        "strata",
        [](long long a, long long b, long long m, const std::string& lam) {
            return strata_intersections(make_action(a, b, m, lam));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"),
        "Hirzebruch parameters of the strata the action meets, ascending.");

    mod.def(
        "stratum_codimension",
        [](long long a, long long b, long long m, const std::string& lam, long long s) {
            return stratum_codimension(make_action(a, b, m, lam), s);
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"), py::arg("s"),
        "Complex codimension of one intersected stratum.");

    mod.def(
        "deformation_dimension",
        [](long long a, long long b, long long m, const std::string& lam) {
            return invariant_deformation_dimension(make_action(a, b, m, lam));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"),
        "Dimension of the space of invariant infinitesimal deformations.");

    mod.def(
        "homotopy_type",
        [](long long a, long long b, long long m, const std::string& lam) {
            return std::string(
                homotopy_type_name(classify_homotopy_type(make_action(a, b, m, lam))));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"),
        "Homotopy-type token of the symplectomorphism group.");

    mod.def(
        "weyl_orbit",
        [](long long a, long long b, long long m, const std::string& lam) {
            return weyl_orbit(make_action(a, b, m, lam));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("lam"),
        "All (a,b) pairs equivalent to this one at the same twisting.");

    mod.def(
        "homology_ranks",
        [](const std::string& type_token, int max_degree, long long characteristic) {
            return homology_ranks(type_from_token(type_token), max_degree,
                                  characteristic);
        },
        py::arg("type"), py::arg("max_degree") = 20, py::arg("characteristic") = 0,
        "Homology ranks of a homotopy type in degrees 0..max_degree.");

    mod.def(
        "rational_homotopy_dims",
        [](const std::string& type_token, int max_degree) {
            return rational_homotopy_dims(type_from_token(type_token), max_degree);
        },
        py::arg("type"), py::arg("max_degree") = 8,
        "Ranks of the rational homotopy groups in degrees 1..max_degree.");

    mod.def(
        "presentation",
        [](long long characteristic, int max_degree) {
            CohomologyPresentation p = cohomology_presentation(characteristic);
            json out = presentation_json(p);
            out["hilbert_series"] = presentation_hilbert_series(p, max_degree);
            return to_py(out);
        },
        py::arg("characteristic") = 0, py::arg("max_degree") = 8,
        "Cohomology ring presentation of the large homotopy type.");

    mod.def(
        "hirzebruch_trapezoid",
        [](int m, const std::string& lam) {
            return to_py(polygon_json(hirzebruch_trapezoid(m, Rat::parse(lam))));
        },
        py::arg("m"), py::arg("lam"),
        "Vertices of the standard Delzant trapezoid, as \"p/q\" strings.");

    mod.def(
        "polygon_symmetry_count",
        [](int m, const std::string& lam) {
            return polygon_symmetries(hirzebruch_trapezoid(m, Rat::parse(lam))).size();
        },
        py::arg("m"), py::arg("lam"),
        "Order of the lattice-affine symmetry group of the trapezoid.");

    mod.def(
        "enumerate_toric_actions",
        [](const std::string& manifold, const std::string& lam) {
            return enumerate_toric_actions(manifold_from_token(manifold),
                                           Rat::parse(lam));
        },
        py::arg("manifold"), py::arg("lam"),
        "Twistings m of the toric actions existing at this width.");

    mod.def(
        "sweep",
        [](int max_ab, int max_m, const std::vector<std::string>& lambdas,
           const std::vector<std::string>& checks) {
            SweepConfig cfg = SweepConfig::defaults();
            cfg.max_ab = max_ab;
            cfg.max_m = max_m;
            if (!lambdas.empty()) {
                cfg.lambdas.clear();
                for (const auto& s : lambdas) cfg.lambdas.push_back(Rat::parse(s));
            }
            if (!checks.empty()) {
                cfg.checks.clear();
                for (const auto& s : checks) cfg.checks.insert(s);
            }
            SweepResult r = run_sweep(cfg);
            py::dict out;
            out["actions_visited"] = r.actions_visited;
            out["cases_checked"] = r.cases_checked;
            py::list fails;
            for (const auto& f : r.failures) {
                py::dict d;
                d["check"] = f.check;
                d["detail"] = f.detail;
                fails.append(d);
            }
            out["failures"] = fails;
            return out;
        },
        py::arg("max_ab") = 6, py::arg("max_m") = 6,
        py::arg("lambdas") = std::vector<std::string>{},
        py::arg("checks") = std::vector<std::string>{},
        "Exhaustive consistency checks over a parameter grid.");
}
