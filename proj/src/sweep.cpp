// SPDX-License-Identifier: MIT
#include "hamcirc/sweep.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hamcirc/graph.hpp"

namespace hamcirc {

namespace {

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

bool form_exists(long long m, const Rat& lambda) {
    long long half = m / 2;
    if (m % 2 == 0) return lambda >= Rat(1) && lambda > Rat(half);
    return lambda > Rat(half + 1);
}

std::string action_name(const CircleAction& act) {
    return "S^1(" + std::to_string(act.a()) + "," + std::to_string(act.b()) + ";" +
           std::to_string(act.m()) + "), lambda=" + act.lambda().str();
}

}  // namespace

const std::set<std::string>& SweepConfig::known_checks() {
    static const std::set<std::string> names{
        "equivalence-orbits", "extension-soundness", "strata-count",
        "codim-consistency",  "admissibility",       "localization-sum"};
    return names;
}

SweepConfig SweepConfig::defaults() {
    SweepConfig cfg;
    cfg.lambdas = {Rat(1), Rat(3, 2), Rat(2), Rat(5, 2), Rat(3), Rat(7, 2)};
    cfg.checks = known_checks();
    return cfg;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    if (cfg.max_ab < 1) throw invalid_input("max_ab must be at least 1");
    if (cfg.max_m < 0) throw invalid_input("max_m must be nonnegative");
    if (cfg.lambdas.empty()) throw invalid_input("sweep needs at least one lambda");
    if (cfg.checks.empty()) throw invalid_input("sweep needs at least one check");
    for (const auto& name : cfg.checks)
        if (!SweepConfig::known_checks().count(name))
            throw invalid_input("unknown check \"" + name + "\"");
    for (const auto& lam : cfg.lambdas) {
        bool any = false;
        for (long long m = 0; m <= cfg.max_m && !any; ++m) any = form_exists(m, lam);
        if (!any)
            throw invalid_input("lambda = " + lam.str() +
                                " is below the bound of every m <= " +
                                std::to_string(cfg.max_m));
    }

    SweepResult result;
    auto enabled = [&](const char* name) { return cfg.checks.count(name) > 0; };
    auto fail = [&](const char* check, std::string detail) {
        result.failures.push_back({check, std::move(detail)});
    };

    const bool need_graph = enabled("equivalence-orbits") || enabled("admissibility") ||
                            enabled("localization-sum");

    for (const auto& lam : cfg.lambdas) {
        for (long long m = 0; m <= cfg.max_m; ++m) {
            if (!form_exists(m, lam)) continue;

            std::vector<CircleAction> acts;
            for (long long a = -cfg.max_ab; a <= cfg.max_ab; ++a)
                for (long long b = -cfg.max_ab; b <= cfg.max_ab; ++b)
                    if (gcd_ll(a, b) == 1) acts.emplace_back(a, b, m, lam);
            result.actions_visited += static_cast<long long>(acts.size());

            std::vector<std::string> canon(acts.size());
            if (need_graph) {
                for (size_t i = 0; i < acts.size(); ++i) {
                    KarshonGraph g = build_graph(acts[i]);

                    if (enabled("admissibility")) {
                        ++result.cases_checked;
                        ValidationReport rep = validate_admissible(g);
                        if (!rep.valid())
                            fail("admissibility", action_name(acts[i]) + ": " +
                                                      rep.failures.front().message);
                        Rat mn = g.vertices.front().moment;
                        for (const auto& v : g.vertices) mn = std::min(mn, v.moment);
                        if (mn != Rat(0))
                            fail("admissibility", action_name(acts[i]) +
                                                      ": minimum moment is " + mn.str() +
                                                      ", expected 0");
                        for (const auto& e : g.edges) {
                            SphereData sd = edge_sphere_data(g, e);
                            if (!(sd.area > Rat(0)))
                                fail("admissibility",
                                     action_name(acts[i]) + ": edge " +
                                         std::to_string(e.a) + "-" + std::to_string(e.b) +
                                         " has non-positive area " + sd.area.str());
                        }
                    }

                    if (enabled("localization-sum")) {
                        if (auto sum = localization_sum(g)) {
                            ++result.cases_checked;
                            if (!sum->is_zero())
                                fail("localization-sum",
                                     action_name(acts[i]) +
                                         ": sum of 1/(w1*w2) over fixed points is " +
                                         sum->str() + ", expected 0");
                        }
                    }

                    if (enabled("equivalence-orbits"))
                        canon[i] = graph_serialize(canonicalize(g));
                }
            }

            if (enabled("equivalence-orbits")) {
                std::vector<std::set<std::pair<long long, long long>>> orbits(acts.size());
                for (size_t i = 0; i < acts.size(); ++i) {
                    auto orbit = weyl_orbit(acts[i]);
                    orbits[i] = {orbit.begin(), orbit.end()};
                }
                for (size_t i = 0; i < acts.size(); ++i)
                    for (size_t j = i + 1; j < acts.size(); ++j) {
                        ++result.cases_checked;
                        bool equal = canon[i] == canon[j];
                        bool predicted = orbits[i].count({acts[j].a(), acts[j].b()}) > 0;
                        if (equal != predicted)
                            fail("equivalence-orbits",
                                 action_name(acts[i]) + " vs " + action_name(acts[j]) +
                                     ": graphs " +
                                     (equal ? "coincide" : "differ") +
                                     " but the orbit prediction says " +
                                     (predicted ? "equivalent" : "inequivalent"));
                    }
            }

            for (const auto& act : acts) {
                if (enabled("extension-soundness")) {
                    auto rep = toric_extensions(act);
                    if (rep.entries.size() == 2) {
                        ++result.cases_checked;
                        const auto& e = rep.entries[1];
                        try {
                            CircleAction target(e.subcircle.first, e.subcircle.second,
                                                e.target_m, act.lambda());
                            std::string left =
                                graph_serialize(canonicalize(build_graph(act)));
                            std::string right =
                                graph_serialize(canonicalize(build_graph(target)));
                            if (left != right)
                                fail("extension-soundness",
                                     action_name(act) + " vs " + action_name(target) +
                                         ": canonical graphs differ");
                        } catch (const invalid_input& ex) {
                            fail("extension-soundness",
                                 action_name(act) + ": emitted target (" +
                                     std::to_string(e.subcircle.first) + "," +
                                     std::to_string(e.subcircle.second) + ";" +
                                     std::to_string(e.target_m) +
                                     ") is not constructible: " + ex.what());
                        }
                    }
                }

                if (enabled("strata-count")) {
                    ++result.cases_checked;
                    auto strata = strata_intersections(act);
                    long long a = act.a(), b = act.b(), mm = act.m();
                    long long n = 2 * b - a * mm;
                    bool expect_two = (a == 1 || a == -1) && b != 0 && b != a * mm &&
                                      Rat(2) * act.lambda() >
                                          Rat((n < 0 ? -n : n) + act.eps());
                    size_t expected = expect_two ? 2 : 1;
                    if (strata.size() != expected)
                        fail("strata-count",
                             action_name(act) + ": " + std::to_string(strata.size()) +
                                 " strata, expected " + std::to_string(expected));
                    if (!std::is_sorted(strata.begin(), strata.end()))
                        fail("strata-count", action_name(act) + ": strata not sorted");
                }

                if (enabled("codim-consistency")) {
                    ++result.cases_checked;
                    auto rep = toric_extensions(act);
                    int zeros = 0;
                    for (const auto& e : rep.entries) {
                        if (e.complex_codim != 0 && e.complex_codim != 1)
                            fail("codim-consistency",
                                 action_name(act) + ": stratum U_" +
                                     std::to_string(e.target_m) + " has codim " +
                                     std::to_string(e.complex_codim));
                        if (e.complex_codim == 0) ++zeros;
                    }
                    if (zeros != 1)
                        fail("codim-consistency",
                             action_name(act) + ": " + std::to_string(zeros) +
                                 " strata of codim 0, expected exactly 1");
                    int deform = invariant_deformation_dimension(act);
                    if (deform < 0 || deform > 1)
                        fail("codim-consistency",
                             action_name(act) + ": deformation dimension " +
                                 std::to_string(deform) + " outside {0,1}");
                    if (act.a() == 1 || act.a() == -1) {
                        int at_m = stratum_codimension(act, act.m());
                        if (deform != at_m)
                            fail("codim-consistency",
                                 action_name(act) + ": deformation dimension " +
                                     std::to_string(deform) +
                                     " != codim at own stratum " +
                                     std::to_string(at_m));
                    }
                }
            }
        }
    }
    return result;
}

std::string sweep_summary(const SweepResult& r) {
    std::string s;
    s += "actions visited: " + std::to_string(r.actions_visited) + "\n";
    s += "cases checked:   " + std::to_string(r.cases_checked) + "\n";
    s += "failures:        " + std::to_string(r.failures.size()) + "\n";
    size_t shown = std::min<size_t>(r.failures.size(), 10);
    if (shown > 0) s += "first " + std::to_string(shown) + " counterexamples:\n";
    for (size_t i = 0; i < shown; ++i)
        s += "  [" + r.failures[i].check + "] " + r.failures[i].detail + "\n";
    return s;
}

}  // namespace hamcirc
