// SPDX-License-Identifier: MIT
//
// Command-line front end.  Subcommands: classify, graph, equiv, extensions,
// codim, ranks, presentation, sweep.  Exit codes: 0 success, 2 invalid
// input (the message names the violated bound), 3 internal invariant breach.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hamcirc/action.hpp"
#include "hamcirc/algebra.hpp"
#include "hamcirc/json_io.hpp"
#include "hamcirc/sweep.hpp"

namespace {

using namespace hamcirc;

struct ActionFlags {
    long long a = 0, b = 0, m = 0;
    std::string lambda;
};

void add_action_flags(CLI::App* cmd, ActionFlags& f) {
    cmd->add_option("--a", f.a, "circle weight a of the embedding t -> (t^a, t^b)")
        ->required();
    cmd->add_option("--b", f.b, "circle weight b")->required();
    cmd->add_option("--m", f.m,
                    "Hirzebruch parameter (even: S2xS2, odd: CP2#CP2bar)")
        ->required();
    cmd->add_option("--lambda", f.lambda,
                    "area parameter as an exact rational \"p\" or \"p/q\"")
        ->required();
}

CircleAction make_action(const ActionFlags& f) {
    return CircleAction(f.a, f.b, f.m, Rat::parse(f.lambda));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

HomotopyType type_from_name(const std::string& name) {
    for (HomotopyType t : {HomotopyType::Torus2, HomotopyType::Torus2xZ2,
                           HomotopyType::S1xSO3, HomotopyType::U2,
                           HomotopyType::OmegaS3xT3})
        if (name == homotopy_type_name(t)) return t;
    throw invalid_input("unknown homotopy type \"" + name +
                        "\", expected one of Torus2, Torus2xZ2, S1xSO3, U2, "
                        "OmegaS3xT3");
}

// The witness presentation showing why two actions are equivalent: an
// element of the first action's orbit (or of a toric-extension target's
// orbit) matching the second action's parameters.
json find_witness(const CircleAction& x, const CircleAction& y) {
    auto as_json = [](long long a, long long b, long long m) {
        return json{{"a", a}, {"b", b}, {"m", m}};
    };
    if (x.m() == y.m())
        for (const auto& [a, b] : weyl_orbit(x))
            if (a == y.a() && b == y.b()) return as_json(a, b, x.m());
    for (const auto& e : toric_extensions(x).entries) {
        if (e.target_m != y.m()) continue;
        CircleAction target(e.subcircle.first, e.subcircle.second, e.target_m,
                            x.lambda());
        for (const auto& [a, b] : weyl_orbit(target))
            if (a == y.a() && b == y.b())
                return as_json(e.subcircle.first, e.subcircle.second, e.target_m);
    }
    for (const auto& e : toric_extensions(y).entries) {
        if (e.target_m != x.m()) continue;
        for (const auto& [a, b] : weyl_orbit(x))
            if (a == e.subcircle.first && b == e.subcircle.second)
                return as_json(a, b, x.m());
    }
    return json(nullptr);
}

int dispatch(int argc, char** argv) {
    CLI::App app{
        "Exact classification of Hamiltonian circle actions S^1(a,b;m) on "
        "S2xS2 and CP2#CP2bar"};
    app.require_subcommand(1);

    // classify
    auto* classify = app.add_subcommand(
        "classify", "full report: graph, strata, homotopy type, ranks");
    ActionFlags cf;
    add_action_flags(classify, cf);
    bool pretty = false;
    int cls_maxdeg = 8;
    long long cls_char = 0;
    classify->add_flag("--pretty", pretty, "human-readable output instead of JSON");
    classify->add_option("--max-degree", cls_maxdeg, "top degree of the rank table");
    classify->add_option("--char", cls_char, "field characteristic (0 or a prime)");
    classify->callback([&] {
        json report = classify_report(make_action(cf), cls_maxdeg, cls_char);
        if (pretty)
            std::cout << classify_pretty(report);
        else
            std::cout << report.dump(2) << "\n";
    });

    // graph
    auto* graph = app.add_subcommand("graph", "emit the labelled graph");
    ActionFlags gf;
    add_action_flags(graph, gf);
    std::string format = "json";
    bool canonical = false;
    graph->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "tikz"}));
    graph->add_flag("--canonical", canonical,
                    "canonicalize before emitting (equivalence-invariant bytes)");
    graph->callback([&] {
        KarshonGraph g = build_graph(make_action(gf));
        if (canonical) g = canonicalize(g);
        if (format == "json")
            std::cout << graph_json(g).dump(2) << "\n";
        else if (format == "dot")
            std::cout << graph_dot(g);
        else
            std::cout << graph_tikz(g);
    });

    // equiv
    auto* equiv = app.add_subcommand(
        "equiv", "decide equivalence of two actions on the same manifold");
    long long a1 = 0, b1 = 0, m1 = 0, a2 = 0, b2 = 0, m2 = 0;
    std::string eq_lambda;
    equiv->add_option("--a1", a1)->required();
    equiv->add_option("--b1", b1)->required();
    equiv->add_option("--m1", m1)->required();
    equiv->add_option("--a2", a2)->required();
    equiv->add_option("--b2", b2)->required();
    equiv->add_option("--m2", m2)->required();
    equiv->add_option("--lambda", eq_lambda, "shared area parameter \"p/q\"")
        ->required();
    equiv->callback([&] {
        Rat lam = Rat::parse(eq_lambda);
        CircleAction x(a1, b1, m1, lam), y(a2, b2, m2, lam);
        bool eq = are_equivalent(x, y);
        json out;
        out["equivalent"] = eq;
        out["witness"] = eq ? find_witness(x, y) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    });

    // extensions
    auto* ext = app.add_subcommand("extensions", "toric actions the circle extends to");
    ActionFlags xf;
    add_action_flags(ext, xf);
    ext->callback(
        [&] { std::cout << extensions_json(make_action(xf)).dump(2) << "\n"; });

    // codim
    auto* codim = app.add_subcommand(
        "codim", "complex codimension of one intersected stratum");
    ActionFlags df;
    add_action_flags(codim, df);
    long long stratum = 0;
    codim->add_option("--s", stratum, "stratum parameter (a target m)")->required();
    codim->callback([&] {
        CircleAction act = make_action(df);
        json out;
        out["action"] = action_json(act);
        out["s"] = stratum;
        out["codim"] = stratum_codimension(act, stratum);
        out["deformation_dimension"] = invariant_deformation_dimension(act);
        std::cout << out.dump(2) << "\n";
    });

    // ranks
    auto* ranks = app.add_subcommand(
        "ranks", "homology ranks of a homotopy type (or of an action's)");
    std::string type_name;
    ActionFlags rf;
    int rk_maxdeg = 20;
    long long rk_char = 0;
    ranks->add_option("--type", type_name,
                      "homotopy type token (Torus2, Torus2xZ2, S1xSO3, U2, "
                      "OmegaS3xT3)");
    ranks->add_option("--a", rf.a, "or classify the action with these flags");
    ranks->add_option("--b", rf.b);
    ranks->add_option("--m", rf.m);
    ranks->add_option("--lambda", rf.lambda);
    ranks->add_option("--max-degree", rk_maxdeg, "top degree");
    ranks->add_option("--char", rk_char, "field characteristic (0 or a prime)");
    ranks->callback([&] {
        HomotopyType t;
        if (!type_name.empty()) {
            t = type_from_name(type_name);
        } else if (!rf.lambda.empty()) {
            t = classify_homotopy_type(make_action(rf));
        } else {
            throw invalid_input(
                "ranks needs either --type or a full action (--a --b --m --lambda)");
        }
        json out;
        out["type"] = homotopy_type_name(t);
        out["characteristic"] = rk_char;
        out["max_degree"] = rk_maxdeg;
        out["ranks"] = homology_ranks(t, rk_maxdeg, rk_char);
        out["rational_homotopy_dims"] = rational_homotopy_dims(t, rk_maxdeg);
        std::cout << out.dump(2) << "\n";
    });

    // presentation
    auto* pres = app.add_subcommand(
        "presentation", "cohomology ring presentation of Omega S^3 x T^3");
    long long pr_char = 0;
    int pr_maxdeg = 8;
    pres->add_option("--char", pr_char, "field characteristic (0 or a prime)");
    pres->add_option("--max-degree", pr_maxdeg, "top degree of the Hilbert series");
    pres->callback([&] {
        CohomologyPresentation p = cohomology_presentation(pr_char);
        json out = presentation_json(p);
        out["hilbert_series"] = presentation_hilbert_series(p, pr_maxdeg);
        std::cout << out.dump(2) << "\n";
    });

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "exhaustive consistency checks over a parameter grid");
    SweepConfig cfg = SweepConfig::defaults();
    std::string lambdas_arg = "1,3/2,2,5/2,3,7/2";
    std::string checks_arg = "all";
    sweep->add_option("--max-ab", cfg.max_ab, "bound on |a| and |b| (gcd(a,b)=1)");
    sweep->add_option("--max-m", cfg.max_m, "largest Hirzebruch parameter");
    sweep->add_option("--lambdas", lambdas_arg, "comma-separated rationals");
    sweep->add_option("--checks", checks_arg,
                      "comma-separated subset of equivalence-orbits, "
                      "extension-soundness, strata-count, codim-consistency, "
                      "admissibility, localization-sum, or \"all\"");
    bool sweep_failed = false;
    sweep->callback([&] {
        cfg.lambdas.clear();
        for (const auto& part : split(lambdas_arg, ','))
            cfg.lambdas.push_back(Rat::parse(part));
        if (checks_arg != "all") {
            cfg.checks.clear();
            for (const auto& part : split(checks_arg, ',')) cfg.checks.insert(part);
        }
        SweepResult result = run_sweep(cfg);
        std::cout << sweep_summary(result);
        sweep_failed = !result.ok();
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return sweep_failed ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const hamcirc::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hamcirc::invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
