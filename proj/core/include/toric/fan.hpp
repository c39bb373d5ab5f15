// Lattices, cones and complete smooth fans.
//
// A fan is stored as its primitive ray generators plus its maximal cones
// (sets of ray indices).  Lower-dimensional cones are implicit as faces of
// the maximal ones.  Only simplicial cones are representable, which is
// enough for nonsingular toric varieties: smoothness forces every maximal
// cone to be unimodular simplicial.
//
// make_fan validates:
//   * rays primitive, nonzero, pairwise distinct, each used by some cone
//   * every maximal cone has exactly dim rays with |det| = 1
//   * completeness, checked combinatorially: every facet of a maximal cone
//     is shared with exactly one other maximal cone, and cone interiors are
//     pairwise disjoint (exact rational feasibility tests)
//
// Ray order is preserved from the input; it is the index space for divisor
// coefficients and the JSON serialization.  Cones are canonicalized (indices
// sorted within a cone, cones sorted lexicographically) so equal fans
// compare equal structurally.

#pragma once

#include "toric/rational.hpp"

#include <cstdint>
#include <vector>

namespace toric {

using LatticeVector = std::vector<std::int64_t>;

struct Cone {
    std::vector<int> ray_indices;

    friend bool operator==(const Cone&, const Cone&) = default;
};

struct Fan {
    int dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<Cone> max_cones;

    friend bool operator==(const Fan&, const Fan&) = default;
};

/// Validates and canonicalizes.  Error codes: NonPrimitiveRay, DuplicateRay,
/// NonSmoothCone, IncompleteFan.
Fan make_fan(int dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

enum class Surface { P2, P1xP1 };

/// Canonical fans for the minimal rational surfaces.
///   P2:    rays (1,0), (0,1), (-1,-1)
///   P1xP1: rays (-1,0), (0,1), (1,0), (0,-1)
Fan standard_fan(Surface s);

/// Hirzebruch surface F_r, r >= 2, presented with rays
/// (1,0), (0,1), (-1,r), (0,-1).
Fan hirzebruch_fan(int r);

/// Projective space P^d: rays e_1..e_d and -(e_1+...+e_d), all d-subsets
/// as maximal cones.
Fan projective_space_fan(int d);

/// True iff every maximal cone is unimodular (|det| = 1).  Fans accepted by
/// make_fan always are; this re-checks an arbitrary structurally valid fan.
bool is_smooth(const Fan& fan);

/// True iff the given ray indices span a cone of the fan, i.e. they are all
/// rays of one maximal cone (faces of simplicial cones are cones of the fan).
bool spans_cone(const Fan& fan, std::vector<int> ray_indices);

/// gcd of the coordinates; 0 for the zero vector.
std::int64_t content(const LatticeVector& v);

}  // namespace toric
