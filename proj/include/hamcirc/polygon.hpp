// SPDX-License-Identifier: MIT
#pragma once

/// Delzant polygon validation, Hirzebruch trapezoid construction, AGL(2,Z)
/// symmetry groups, and enumeration of the inequivalent toric actions that
/// exist for a given (manifold, lambda).

#include <string>
#include <vector>

#include "hamcirc/rational.hpp"

namespace hamcirc {

/// Ruled symplectic 4-manifold: the trivial or the twisted S^2-bundle
/// over S^2. Even twisting m lives on Product, odd m on NonTrivialBundle.
enum class Manifold { Product, NonTrivialBundle };

std::string manifold_name(Manifold m);

/// One validation failure: which property broke, at which vertex, and why.
struct ValidationFailure {
    std::string property;  // "simplicity" | "rationality" | "smoothness" | "convexity" | graph checks
    int vertex = -1;       // index into the vertex list, -1 when global
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    bool valid() const { return failures.empty(); }
};

/// Convex polygon with rational vertices, listed counterclockwise.
struct Polygon {
    std::vector<Vec2> vertices;
};

/// Scales a rational direction vector to the primitive integer vector
/// pointing the same way. Rejects the zero vector.
LatticeVec primitive_direction(const Rat& dx, const Rat& dy);

/// Checks convexity (strict, counterclockwise, no repeats, no
/// self-intersection), simplicity, rationality, and smoothness (primitive
/// edge-direction pairs form a Z-basis at every vertex). Reports every
/// failure instead of stopping at the first.
ValidationReport validate_delzant(const Polygon& poly);

/// Moment polygon of the m-twisted Hirzebruch surface with section size
/// lambda and fiber size 1. Even m=2k: (0,0), (lambda+k,0), (lambda-k,1),
/// (0,1); odd m=2k+1: (0,0), (lambda+k,0), (lambda-k-1,1), (0,1).
/// Rejects lambda outside the area-positivity range.
Polygon hirzebruch_trapezoid(int m, const Rat& lambda);

/// Every AGL(2,Z) element mapping the vertex set bijectively to itself.
/// Found by solving the exact 2x2 system for each dihedral vertex
/// correspondence. The result is a group (closed under composition).
std::vector<Agl2> polygon_symmetries(const Polygon& poly);

/// Twistings m of the inequivalent toric actions on (manifold, lambda):
/// with lambda = l + d, 0 < d <= 1, Product admits {0,2,...,2l} and
/// NonTrivialBundle admits {1,3,...,2l-1}.
std::vector<int> enumerate_toric_actions(Manifold manifold, const Rat& lambda);

}  // namespace hamcirc
