// SPDX-License-Identifier: MIT
//
// Hamiltonian circle actions S^1(a,b;m) on the two Hirzebruch-type symplectic
// 4-manifolds: the product S^2 x S^2 (even m) and the non-trivial bundle
// CP^2 # CP^2bar (odd m).  The action is the composition of the embedding
// t -> (t^a, t^b) with the standard toric action of the m-th Hirzebruch
// surface scaled so the base has area lambda.
//
// This header carries the classification toolkit: fixed-point weights, the
// labelled (Karshon) graph of the action, Weyl conjugation, the equivalence
// decision, extensions to toric actions, stratum intersections inside the
// space of compatible almost-complex structures, and the dimension of the
// local deformation space of invariant structures.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hamcirc/graph.hpp"
#include "hamcirc/polygon.hpp"
#include "hamcirc/rational.hpp"

namespace hamcirc {

/// A Hamiltonian circle action S^1(a,b;m) on (M, omega_lambda).
///
/// Construction validates effectiveness (gcd(a,b) = 1) and the existence of
/// the underlying symplectic form: even m = 2k needs lambda >= 1 and
/// lambda > k, odd m = 2k+1 needs lambda > k+1.  Invalid parameters raise
/// invalid_input naming the violated bound.
class CircleAction {
public:
    CircleAction(long long a, long long b, long long m, Rat lambda);

    long long a() const { return a_; }
    long long b() const { return b_; }
    long long m() const { return m_; }
    const Rat& lambda() const { return lambda_; }

    /// k = floor(m/2).
    long long k() const { return m_ / 2; }
    /// eps = m mod 2 (0 on the product, 1 on the non-trivial bundle).
    long long eps() const { return m_ % 2; }
    Manifold manifold() const {
        return m_ % 2 == 0 ? Manifold::Product : Manifold::NonTrivialBundle;
    }

    bool operator==(const CircleAction& o) const {
        return a_ == o.a_ && b_ == o.b_ && m_ == o.m_ && lambda_ == o.lambda_;
    }

private:
    long long a_, b_, m_;
    Rat lambda_;
};

/// Isotropy weights at one of the four toric fixed points P, Q, R, S.
struct FixedPointData {
    std::string tag;                          // "P", "Q", "R" or "S"
    std::pair<long long, long long> weights;  // unordered; stored sorted
    Rat moment;                               // filled by build_graph; 0 here
};

/// One toric action the circle action embeds into.
struct ToricExtensionEntry {
    long long target_m = 0;                     // Hirzebruch parameter of the target
    std::pair<long long, long long> subcircle;  // presentation (c,d) inside that torus
    int complex_codim = 0;                      // codimension of the stratum cut out
};

/// All toric extensions of one circle action: one or two entries, exactly one
/// of complex codimension zero.
struct ToricExtensionReport {
    std::vector<ToricExtensionEntry> entries;
};

/// The four fixed-point weight pairs of S^1(a,b;m), in tag order P, Q, R, S:
/// P{a,b}, Q{a,-b}, R{-a,am-b}, S{-a,-am+b}.  Moment labels are left at zero;
/// build_graph positions the points on the moment axis.
std::vector<FixedPointData> fixed_point_weights(const CircleAction& act);

/// The labelled graph of the action, built from the moment trapezoid: each
/// boundary edge pairs the direction vector with (a,b); pairing 0 yields a
/// fat vertex (fixed surface) absorbing its corners, |pairing| = 1 a free
/// sphere (dropped), |pairing| >= 2 an edge with that isotropy.  Surviving
/// corners become isolated vertices with their Table-of-weights pairs.
/// Moment labels are normalized so the minimum is 0.  The result always
/// passes validate_admissible.
KarshonGraph build_graph(const CircleAction& act);

/// Conjugation by the Weyl element of the target torus: (a,b;m) -> (-a,b-am;m),
/// an involution preserving lambda.
CircleAction weyl_conjugate(const CircleAction& act);

/// The set of presentations (a',b') equivalent to the action at the same m and
/// lambda: Weyl conjugates and the reparametrization t -> t^-1, so
/// {(a,b), (-a,-b), (-a,b-am), (a,am-b)}; for m = 0 this is the sign group
/// {(+-a,+-b)}, enlarged by the coordinate swap {(+-b,+-a)} when lambda = 1
/// (the square has the extra symmetry).  Sorted and deduplicated.
std::vector<std::pair<long long, long long>> weyl_orbit(const CircleAction& act);

/// Whether two actions on the same symplectic manifold are equivalent, decided
/// by comparing canonical labelled graphs.  Throws invalid_input when the
/// actions live on different manifolds (different lambda or different parity
/// of m).
bool are_equivalent(const CircleAction& x, const CircleAction& y);

/// All toric actions the circle action extends to.  The defining presentation
/// (m,(a,b)) is always present; a second target |2b-am| is added exactly when
/// |a| = 1, b is not in {0, am}, and 2*lambda > |2b-am| + eps_m (the target
/// form exists).  Each entry carries the complex codimension of its stratum.
ToricExtensionReport toric_extensions(const CircleAction& act);

/// The Hirzebruch parameters of the strata the action meets, ascending.
std::vector<long long> strata_intersections(const CircleAction& act);

/// Complex codimension of the stratum U_s inside the space of compatible
/// invariant structures, computed in the presentation (c,d) of the action as
/// a subcircle of the torus of U_s: with c = 1 it counts j in {1,...,s-1}
/// equal to d, with c = -1 equal to -d; other |c| give 0.  Throws
/// invalid_input when the action does not meet U_s.
int stratum_codimension(const CircleAction& act, long long s);

/// Dimension of the space of infinitesimal deformations of the invariant
/// structure along the defining stratum, from the weight count of the
/// isotropy representation on the deformation space: 0 for m = 0; for even
/// m = 2k count j in {0,...,2k-2} with a' + b'(k-1-j) = 0 in the balanced
/// coordinates (a',b') = (ka - b, a); for odd m = 2k+1 count j in
/// {0,...,2k-1} with (a'-b')(k-j) + b' = 0 where
/// (a',b') = ((m+1)/2 a - b, (m-1)/2 a - b).  Always 0 or 1, and equal to
/// stratum_codimension(act, m) whenever |a| = 1.
int invariant_deformation_dimension(const CircleAction& act);

}  // namespace hamcirc
