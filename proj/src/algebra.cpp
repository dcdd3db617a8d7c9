// SPDX-License-Identifier: MIT
#include "hamcirc/algebra.hpp"

#include <algorithm>
#include <optional>

namespace hamcirc {

const char* homotopy_type_name(HomotopyType t) {
    switch (t) {
        case HomotopyType::Torus2: return "Torus2";
        case HomotopyType::Torus2xZ2: return "Torus2xZ2";
        case HomotopyType::S1xSO3: return "S1xSO3";
        case HomotopyType::U2: return "U2";
        case HomotopyType::OmegaS3xT3: return "OmegaS3xT3";
    }
    throw invariant_violation("unknown homotopy type");
}

const char* homotopy_type_display(HomotopyType t) {
    switch (t) {
        case HomotopyType::Torus2: return "T^2";
        case HomotopyType::Torus2xZ2: return "T^2 x Z_2";
        case HomotopyType::S1xSO3: return "S^1 x SO(3)";
        case HomotopyType::U2: return "U(2)";
        case HomotopyType::OmegaS3xT3: return "Omega S^3 x T^3";
    }
    throw invariant_violation("unknown homotopy type");
}

std::string Word::str() const {
    std::string s;
    auto append = [&](const std::string& part) {
        if (!s.empty()) s += ' ';
        s += part;
    };
    if (alpha == 1) append("w");
    if (alpha >= 2) append("w^" + std::to_string(alpha));
    if (x) append("x");
    if (y) append("y");
    if (t) append("t");
    return s.empty() ? "1" : s;
}

AlgebraElement AlgebraElement::word(const Word& w, Rat coeff) {
    AlgebraElement e;
    if (!coeff.is_zero()) e.terms.emplace(w, std::move(coeff));
    return e;
}

AlgebraElement AlgebraElement::generator(const std::string& name) {
    Word w;
    if (name == "1") {
    } else if (name == "w") {
        w.alpha = 1;
    } else if (name == "x") {
        w.x = true;
    } else if (name == "y") {
        w.y = true;
    } else if (name == "t") {
        w.t = true;
    } else {
        throw invalid_input("unknown generator \"" + name +
                            "\", expected one of 1, w, x, y, t");
    }
    return word(w);
}

std::string AlgebraElement::str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms) {
        bool neg = c < Rat(0);
        Rat mag = neg ? Rat(0) - c : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string ws = w.str();
        if (mag == Rat(1) && ws != "1")
            s += ws;
        else if (ws == "1")
            s += mag.str();
        else
            s += mag.str() + " " + ws;
    }
    return s;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [w, c] : o.terms) {
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    return *this += o * Rat(-1);
}

AlgebraElement AlgebraElement::operator*(const Rat& c) const {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [w, coeff] : terms) out.terms.emplace(w, coeff * c);
    return out;
}

namespace {

// A term mid-rewrite: central w-power, a raw letter string over {x,y,t},
// and an exact coefficient.
struct RawTerm {
    std::uint32_t alpha;
    std::string letters;
    Rat coeff;
};

// Rewrite one raw term to the word basis, accumulating into `out`.
// Rules: equal adjacent letters annihilate; yx -> w - xy; tx -> -xt;
// ty -> -yt.  Each step either shortens the string or strictly lowers the
// number of inversions, so the worklist terminates.
void normalize_into(RawTerm start, std::map<Word, Rat>& out) {
    std::vector<RawTerm> work;
    work.push_back(std::move(start));
    while (!work.empty()) {
        RawTerm cur = std::move(work.back());
        work.pop_back();
        bool rewritten = false;
        for (size_t i = 0; i + 1 < cur.letters.size() && !rewritten; ++i) {
            char p = cur.letters[i], q = cur.letters[i + 1];
            if (p == q) {
                rewritten = true;  // square is zero, term vanishes
            } else if (p == 'y' && q == 'x') {
                RawTerm swapped = cur;
                swapped.letters[i] = 'x';
                swapped.letters[i + 1] = 'y';
                swapped.coeff = Rat(0) - swapped.coeff;
                cur.alpha += 1;
                cur.letters.erase(i, 2);
                work.push_back(std::move(cur));
                work.push_back(std::move(swapped));
                rewritten = true;
            } else if (p == 't' && (q == 'x' || q == 'y')) {
                std::swap(cur.letters[i], cur.letters[i + 1]);
                cur.coeff = Rat(0) - cur.coeff;
                work.push_back(std::move(cur));
                rewritten = true;
            }
        }
        if (rewritten) continue;
        Word w;
        w.alpha = cur.alpha;
        for (char c : cur.letters) {
            if (c == 'x') w.x = true;
            if (c == 'y') w.y = true;
            if (c == 't') w.t = true;
        }
        auto it = out.find(w);
        if (it == out.end()) {
            if (!cur.coeff.is_zero()) out.emplace(w, std::move(cur.coeff));
        } else {
            it->second += cur.coeff;
            if (it->second.is_zero()) out.erase(it);
        }
    }
}

std::string word_letters(const Word& w) {
    std::string s;
    if (w.x) s += 'x';
    if (w.y) s += 'y';
    if (w.t) s += 't';
    return s;
}

}  // namespace

AlgebraElement pontryagin_multiply(const AlgebraElement& u, const AlgebraElement& v) {
    AlgebraElement out;
    for (const auto& [wu, cu] : u.terms)
        for (const auto& [wv, cv] : v.terms)
            normalize_into({wu.alpha + wv.alpha, word_letters(wu) + word_letters(wv),
                            cu * cv},
                           out.terms);
    return out;
}

AlgebraElement pontryagin_add(const AlgebraElement& u, const AlgebraElement& v) {
    AlgebraElement out = u;
    out += v;
    return out;
}

AlgebraElement graded_commutator(const AlgebraElement& u, const AlgebraElement& v) {
    auto degree_of = [](const AlgebraElement& e) {
        std::optional<int> d;
        for (const auto& [w, c] : e.terms) {
            if (d && *d != w.degree())
                throw invalid_input("graded commutator needs homogeneous arguments");
            d = w.degree();
        }
        return d.value_or(0);
    };
    int du = degree_of(u), dv = degree_of(v);
    AlgebraElement out = pontryagin_multiply(u, v);
    AlgebraElement vu = pontryagin_multiply(v, u);
    out -= du * dv % 2 == 0 ? vu : vu * Rat(-1);
    return out;
}

AlgebraElement embed_x1(const Rat& b) {
    AlgebraElement e = AlgebraElement::generator("t");
    e -= AlgebraElement::generator("x") * b;
    return e;
}

AlgebraElement embed_y1(const Rat& b_prime) {
    AlgebraElement e = AlgebraElement::generator("t");
    e -= AlgebraElement::generator("y") * b_prime;
    return e;
}

std::vector<long long> word_counts(int max_degree) {
    // choose(3, s) subsets of {x,y,t} of size s on top of each w-power
    static const long long choose3[4] = {1, 3, 3, 1};
    std::vector<long long> out(max_degree + 1, 0);
    for (int n = 0; n <= max_degree; ++n)
        for (int alpha = 0; 2 * alpha <= n; ++alpha) {
            int s = n - 2 * alpha;
            if (s <= 3) out[n] += choose3[s];
        }
    return out;
}

HomotopyType classify_homotopy_type(const CircleAction& act) {
    long long a = act.a(), b = act.b(), m = act.m();
    bool even = m % 2 == 0;
    if (a == 0) return even ? HomotopyType::S1xSO3 : HomotopyType::U2;
    if (even && m == 0 && b == 0) return HomotopyType::S1xSO3;
    if (even && m == 0 && act.lambda() == Rat(1) && (a == 1 || a == -1) &&
        (b == 1 || b == -1))
        return HomotopyType::Torus2xZ2;
    if (strata_intersections(act).size() == 2) return HomotopyType::OmegaS3xT3;
    return HomotopyType::Torus2;
}

namespace {

void check_characteristic(long long p) {
    if (p == 0) return;
    if (p >= 2) {
        bool prime = true;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (prime) return;
    }
    throw invalid_input("characteristic must be 0 or a prime, got " + std::to_string(p));
}

std::vector<long long> convolve(const std::vector<long long>& a,
                                const std::vector<long long>& b, int max_degree) {
    std::vector<long long> out(max_degree + 1, 0);
    for (size_t i = 0; i < a.size() && static_cast<int>(i) <= max_degree; ++i)
        for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= max_degree; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

std::vector<long long> homology_ranks(HomotopyType t, int max_degree,
                                      long long characteristic) {
    if (max_degree < 0) throw invalid_input("max_degree must be nonnegative");
    check_characteristic(characteristic);
    const std::vector<long long> circle{1, 1};
    const std::vector<long long> torus3{1, 3, 3, 1};
    const std::vector<long long> sphere3{1, 0, 0, 1};
    switch (t) {
        case HomotopyType::Torus2:
            return convolve(circle, circle, max_degree);
        case HomotopyType::Torus2xZ2: {
            auto r = convolve(circle, circle, max_degree);
            for (auto& v : r) v *= 2;  // two identical components
            return r;
        }
        case HomotopyType::S1xSO3: {
            // SO(3) is a rational homology 3-sphere; over characteristic 2
            // every degree 0..3 contributes.
            std::vector<long long> so3 =
                characteristic == 2 ? std::vector<long long>{1, 1, 1, 1} : sphere3;
            return convolve(circle, so3, max_degree);
        }
        case HomotopyType::U2:
            return convolve(circle, sphere3, max_degree);
        case HomotopyType::OmegaS3xT3: {
            // Loop-space factor has one class in each even degree; the word
            // count is field-independent.
            std::vector<long long> loops(max_degree + 1, 0);
            for (int d = 0; d <= max_degree; d += 2) loops[d] = 1;
            return convolve(loops, torus3, max_degree);
        }
    }
    throw invariant_violation("unknown homotopy type");
}

CohomologyPresentation cohomology_presentation(long long characteristic) {
    check_characteristic(characteristic);
    CohomologyPresentation p;
    p.characteristic = characteristic;
    p.commutation = characteristic == 2 ? "commutative" : "graded-commutative";
    p.generators = {{"t", 1}, {"x", 1}, {"y", 1}, {"w", 2}};
    p.relations = {"t^2", "x^2", "y^2"};
    return p;
}

std::vector<long long> presentation_hilbert_series(const CohomologyPresentation& p,
                                                   int max_degree) {
    if (max_degree < 0) throw invalid_input("max_degree must be nonnegative");
    // Exponent cap per generator from relations of the form "name^k".
    auto cap_of = [&](const std::string& name) -> std::optional<long long> {
        for (const auto& rel : p.relations) {
            auto caret = rel.find('^');
            if (caret == std::string::npos || rel.substr(0, caret) != name) continue;
            return std::stoll(rel.substr(caret + 1));
        }
        return std::nullopt;
    };
    std::vector<long long> series(max_degree + 1, 0);
    series[0] = 1;
    for (const auto& [name, degree] : p.generators) {
        if (degree <= 0)
            throw invalid_input("generator " + name + " must have positive degree");
        auto cap = cap_of(name);
        std::vector<long long> next(max_degree + 1, 0);
        for (int d = 0; d <= max_degree; ++d) {
            if (series[d] == 0) continue;
            for (long long e = 0; !cap || e < *cap; ++e) {
                long long nd = d + e * degree;
                if (nd > max_degree) break;
                next[nd] += series[d];
            }
        }
        series = std::move(next);
    }
    return series;
}

std::vector<long long> rational_homotopy_dims(HomotopyType t, int max_degree) {
    if (max_degree < 0) throw invalid_input("max_degree must be nonnegative");
    std::vector<long long> out(max_degree, 0);
    auto set = [&](int degree, long long v) {
        if (degree <= max_degree) out[degree - 1] = v;
    };
    switch (t) {
        case HomotopyType::OmegaS3xT3:
            set(1, 3);  // three circle factors
            set(2, 1);  // pi_2 of the loop space
            break;
        case HomotopyType::Torus2:
        case HomotopyType::Torus2xZ2:
            set(1, 2);
            break;
        case HomotopyType::S1xSO3:
        case HomotopyType::U2:
            set(1, 1);
            set(3, 1);
            break;
    }
    return out;
}

}  // namespace hamcirc
