// SPDX-License-Identifier: MIT
//
// Homotopy type of the group of equivariant symplectomorphisms and its
// homological invariants.  The interesting case is the two-strata one, where
// the group has the homotopy type of Omega S^3 x T^3; its Pontryagin algebra
// is a pushout with a small normal form (words w^alpha x^beta y^gamma t^delta)
// implemented here by graded rewriting with exact rational coefficients.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hamcirc/action.hpp"
#include "hamcirc/rational.hpp"

namespace hamcirc {

/// Homotopy type of the equivariant symplectomorphism group.
enum class HomotopyType { Torus2, Torus2xZ2, S1xSO3, U2, OmegaS3xT3 };

/// Stable token for JSON and the CLI ("Torus2", "OmegaS3xT3", ...).
const char* homotopy_type_name(HomotopyType t);

/// Human-readable form ("T^2", "Omega S^3 x T^3", ...).
const char* homotopy_type_display(HomotopyType t);

/// Basis word w^alpha x^beta y^gamma t^delta of the Pontryagin algebra.
/// x, y, t have degree 1 with zero squares; w = xy + yx is central of
/// degree 2; degree(word) = 2*alpha + beta + gamma + delta.
struct Word {
    std::uint32_t alpha = 0;
    bool x = false, y = false, t = false;

    int degree() const { return 2 * static_cast<int>(alpha) + x + y + t; }
    std::string str() const;

    bool operator==(const Word& o) const {
        return alpha == o.alpha && x == o.x && y == o.y && t == o.t;
    }
    bool operator<(const Word& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return t < o.t;
    }
};

/// Exact linear combination of basis words; zero coefficients are never
/// stored, so equality of maps is equality of elements.
struct AlgebraElement {
    std::map<Word, Rat> terms;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement word(const Word& w, Rat coeff = Rat(1));
    /// Generators as elements: "1", "w", "x", "y", "t".
    static AlgebraElement generator(const std::string& name);

    bool is_zero() const { return terms.empty(); }
    std::string str() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator*(const Rat& c) const;
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }
};

/// Product in the Pontryagin algebra, rewriting to the word basis with the
/// relations x^2 = y^2 = t^2 = 0, yx = w - xy, tx = -xt, ty = -yt, and w
/// central.  Exact coefficients; inputs and output are in normal form.
AlgebraElement pontryagin_multiply(const AlgebraElement& u, const AlgebraElement& v);

/// Sum of u and v.
AlgebraElement pontryagin_add(const AlgebraElement& u, const AlgebraElement& v);

/// Graded commutator [u,v] = uv - (-1)^{|u||v|} vu for homogeneous u, v.
/// Throws invalid_input when either argument is not homogeneous.
AlgebraElement graded_commutator(const AlgebraElement& u, const AlgebraElement& v);

/// The four-generator presentation sets t to be the common circle class.  The
/// other circle classes of the two legs of the pushout are recovered as
/// x1 = t - b*x and y1 = t - b'*y; these helpers embed them.
AlgebraElement embed_x1(const Rat& b);
AlgebraElement embed_y1(const Rat& b_prime);

/// Number of basis words of each degree 0..max_degree: 1, 3, 4, 4, ...
std::vector<long long> word_counts(int max_degree);

/// Homotopy type of the equivariant symplectomorphism group of the action:
/// a = 0 rows give S^1 x SO(3) (even m, also (+-1,0;0)) or U(2) (odd m);
/// (+-1,+-1;0) at lambda = 1 gives T^2 x Z_2; the two-strata actions give
/// Omega S^3 x T^3; everything else a torus T^2.
HomotopyType classify_homotopy_type(const CircleAction& act);

/// Betti numbers of the classifying homotopy type over a field of the given
/// characteristic (0 or a prime), degrees 0..max_degree.  OmegaS3xT3 gives
/// [1,3,4,4,...] over every field; the compact types are Kuenneth products
/// of their factors (SO(3) depends on characteristic 2).
std::vector<long long> homology_ranks(HomotopyType t, int max_degree,
                                      long long characteristic);

/// A generators-and-relations description of the cohomology ring of
/// Omega S^3 x T^3 over a field of the given characteristic.
struct CohomologyPresentation {
    long long characteristic = 0;
    /// "graded-commutative" (char != 2) or "commutative" (char 2).
    std::string commutation;
    std::vector<std::pair<std::string, int>> generators;  // (name, degree)
    std::vector<std::string> relations;                   // e.g. "t^2"
};

/// The presentation: exterior(t,x,y) tensor polynomial(w) away from
/// characteristic 2, truncated-polynomial tensor polynomial at 2.
CohomologyPresentation cohomology_presentation(long long characteristic);

/// Hilbert series of a presentation, degrees 0..max_degree, counting
/// monomials in the generators modulo the power relations.  For the
/// presentations above this must reproduce homology_ranks(OmegaS3xT3,...).
std::vector<long long> presentation_hilbert_series(const CohomologyPresentation& p,
                                                   int max_degree);

/// dim(pi_n tensor Q) for n = 1..max_degree: OmegaS3xT3 -> [3,1,0,...];
/// Torus2 and Torus2xZ2 -> [2,0,...]; S1xSO3 and U2 -> [1,0,1,0,...].
std::vector<long long> rational_homotopy_dims(HomotopyType t, int max_degree);

}  // namespace hamcirc
