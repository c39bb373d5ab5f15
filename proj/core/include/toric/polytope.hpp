// Exact rational convex polytope kernel.
//
// Polytopes are held in H-representation { m : <m, normal> >= offset } with
// integer normals and rational offsets, the form divisor polytopes arrive
// in.  Vertices are enumerated on demand by solving every dim-subset of
// constraints and filtering for feasibility, which is exact and entirely
// adequate at the instance sizes this library targets (<= ~10 constraints,
// dim <= 6).  Volumes come from a pulling triangulation of the face lattice
// recovered from the active-constraint structure; every simplex contributes
// |det|/dim!.
//
// Boundedness is certified, not assumed: enumeration first checks that the
// recession cone { m : <m, normal> >= 0 } is trivial and raises
// UnboundedPolytope otherwise.

#pragma once

#include "toric/linalg.hpp"
#include "toric/rational.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace toric {

struct HalfSpace {
    std::vector<std::int64_t> normal;  // nonzero, length = ambient dimension
    Rat offset;                        // <m, normal> >= offset

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

class Polytope {
public:
    Polytope(int dim, std::vector<HalfSpace> halfspaces);

    int dim() const { return dim_; }
    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

    /// All extreme points, deduplicated, lexicographically sorted.
    /// Throws UnboundedPolytope when the recession cone is nontrivial.
    const std::vector<RatVec>& vertices() const;

    /// Exact Euclidean volume; 0 for empty or lower-dimensional polytopes.
    Rat volume() const;

    /// All integer points, lexicographically sorted.
    std::vector<std::vector<std::int64_t>> lattice_points() const;

    /// The dilate kP: every offset multiplied by k (k >= 1).
    Polytope scale(const Int& k) const;

    bool contains(const RatVec& point) const;

private:
    struct VertexCache {
        std::once_flag once;
        std::vector<RatVec> verts;
        std::exception_ptr error;
    };

    int dim_;
    std::vector<HalfSpace> halfspaces_;
    std::shared_ptr<VertexCache> cache_;  // shared across copies; same H-rep
};

/// Exact emptiness of an inequality system via Fourier-Motzkin elimination.
/// An empty constraint list is the whole space, hence nonempty.
bool is_empty(const std::vector<HalfSpace>& halfspaces, int dim);

}  // namespace toric
