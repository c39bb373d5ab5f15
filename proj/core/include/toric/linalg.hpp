// Small dense exact linear algebra over Rat.
//
// The instances in this library are tiny (at most ~10 rows, dimension <= 6),
// so plain Gaussian elimination with exact rational pivots is both the
// simplest and the fastest adequate choice.

#pragma once

#include "toric/rational.hpp"

#include <optional>
#include <vector>

namespace toric {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major, rectangular

Rat det(RatMat a);

int rank(RatMat a);

/// Solves the square system a x = b.  Returns nullopt when a is singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

/// Returns nullopt when a is singular.
std::optional<RatMat> inverse(RatMat a);

/// Affine rank of a point set: rank of {p - points[0]}.  Empty set -> -1,
/// single point -> 0.
int affine_rank(const std::vector<RatVec>& points);

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace toric
