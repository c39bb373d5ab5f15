#include "toric/polytope.hpp"

#include "toric/errors.hpp"
#include "toric/fourier_motzkin.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <set>

namespace toric {

namespace {

std::vector<LinIneq> to_rows(const std::vector<HalfSpace>& hs) {
    std::vector<LinIneq> rows;
    rows.reserve(hs.size());
    for (const HalfSpace& h : hs) {
        LinIneq r;
        r.coeffs.reserve(h.normal.size());
        for (auto c : h.normal) r.coeffs.emplace_back(c);
        r.rhs = h.offset;
        rows.push_back(std::move(r));
    }
    return rows;
}

// The recession cone is nontrivial iff it contains a vector with some
// coordinate >= 1 (by homogeneity, any nonzero direction can be scaled so
// that its largest-magnitude coordinate is +-1 or more).
bool recession_cone_nontrivial(const std::vector<HalfSpace>& hs, int dim) {
    std::vector<LinIneq> base;
    base.reserve(hs.size());
    for (const HalfSpace& h : hs) {
        LinIneq r;
        r.coeffs.reserve(dim);
        for (auto c : h.normal) r.coeffs.emplace_back(c);
        r.rhs = 0;
        base.push_back(std::move(r));
    }
    for (int j = 0; j < dim; ++j) {
        for (int sign : {1, -1}) {
            std::vector<LinIneq> rows = base;
            LinIneq probe;
            probe.coeffs.assign(dim, Rat(0));
            probe.coeffs[j] = sign;
            probe.rhs = 1;
            rows.push_back(std::move(probe));
            if (fm_feasible(std::move(rows), dim)) return true;
        }
    }
    return false;
}

// Enumerates subsets of {0..n-1} of size k in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Polytope::Polytope(int dim, std::vector<HalfSpace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)), cache_(std::make_shared<VertexCache>()) {
    if (dim_ < 1) throw_toric("UnboundedPolytope", "polytope dimension must be positive");
    for (const HalfSpace& h : halfspaces_) {
        if (static_cast<int>(h.normal.size()) != dim_)
            throw_toric("UnboundedPolytope", "halfspace normal length mismatch");
        if (std::all_of(h.normal.begin(), h.normal.end(), [](auto c) { return c == 0; }))
            throw_toric("UnboundedPolytope", "halfspace normal is zero");
    }
}

const std::vector<RatVec>& Polytope::vertices() const {
    std::call_once(cache_->once, [this] {
        try {
            // the empty polytope is bounded regardless of its recession cone
            if (is_empty(halfspaces_, dim_)) return;
            if (recession_cone_nontrivial(halfspaces_, dim_))
                throw_toric("UnboundedPolytope",
                            "recession cone contains a nonzero vector");
            const int n = static_cast<int>(halfspaces_.size());
            std::set<RatVec> found;
            for_each_subset(n, dim_, [&](const std::vector<int>& subset) {
                RatMat a;
                RatVec b;
                for (int i : subset) {
                    RatVec row;
                    for (auto c : halfspaces_[i].normal) row.emplace_back(c);
                    a.push_back(std::move(row));
                    b.push_back(halfspaces_[i].offset);
                }
                auto sol = solve_square(std::move(a), std::move(b));
                if (sol && contains(*sol)) found.insert(std::move(*sol));
            });
            cache_->verts.assign(found.begin(), found.end());
        } catch (...) {
            cache_->error = std::current_exception();
        }
    });
    if (cache_->error) std::rethrow_exception(cache_->error);
    return cache_->verts;
}

bool Polytope::contains(const RatVec& point) const {
    assert(static_cast<int>(point.size()) == dim_);
    for (const HalfSpace& h : halfspaces_) {
        Rat s = 0;
        for (int j = 0; j < dim_; ++j) s += point[j] * h.normal[j];
        if (s < h.offset) return false;
    }
    return true;
}

namespace {

// Face-lattice triangulation helpers.  Faces are represented by sorted
// vertex-index vectors; the k-1 dimensional subfaces of a face F are the
// maximal proper subsets of the form F intersected with the active set of
// some halfspace.
using Face = std::vector<int>;

Face intersect_sorted(const Face& a, const Face& b) {
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int face_affine_rank(const Face& face, const std::vector<RatVec>& verts) {
    std::vector<RatVec> pts;
    pts.reserve(face.size());
    for (int i : face) pts.push_back(verts[i]);
    return affine_rank(pts);
}

// Pulling triangulation of a k-dimensional face: cone the lex-smallest
// vertex over the triangulations of the subfaces that do not contain it.
void triangulate_face(const Face& face, int k, const std::vector<RatVec>& verts,
                      const std::vector<Face>& active_sets,
                      std::vector<std::vector<int>>& simplices_out) {
    if (static_cast<int>(face.size()) == k + 1) {
        simplices_out.push_back(face);
        return;
    }
    const int apex = face.front();  // faces are sorted, verts are lex-sorted
    std::set<Face> subfaces;
    for (const Face& act : active_sets) {
        Face g = intersect_sorted(face, act);
        if (g == face || g.empty()) continue;
        if (std::binary_search(g.begin(), g.end(), apex)) continue;
        if (face_affine_rank(g, verts) != k - 1) continue;
        subfaces.insert(std::move(g));
    }
    for (const Face& g : subfaces) {
        std::vector<std::vector<int>> sub;
        triangulate_face(g, k - 1, verts, active_sets, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            simplices_out.push_back(std::move(s));
        }
    }
}

}  // namespace

Rat Polytope::volume() const {
    const std::vector<RatVec>& verts = vertices();
    if (static_cast<int>(verts.size()) < dim_ + 1) return 0;
    if (affine_rank(verts) < dim_) return 0;

    // active vertex set per halfspace
    std::vector<Face> active_sets(halfspaces_.size());
    for (std::size_t h = 0; h < halfspaces_.size(); ++h) {
        for (std::size_t v = 0; v < verts.size(); ++v) {
            Rat s = 0;
            for (int j = 0; j < dim_; ++j) s += verts[v][j] * halfspaces_[h].normal[j];
            if (s == halfspaces_[h].offset) active_sets[h].push_back(static_cast<int>(v));
        }
    }

    Face all(verts.size());
    for (std::size_t v = 0; v < verts.size(); ++v) all[v] = static_cast<int>(v);

    std::vector<std::vector<int>> simplices;
    triangulate_face(all, dim_, verts, active_sets, simplices);

    Rat vol = 0;
    Rat dfact = 1;
    for (int i = 2; i <= dim_; ++i) dfact *= i;
    for (const auto& s : simplices) {
        // simplex = (s[0..dim-1], apex = s[dim]); all d+1 vertices
        RatMat edges;
        for (int i = 0; i < dim_; ++i) {
            RatVec e(dim_);
            for (int j = 0; j < dim_; ++j) e[j] = verts[s[i]][j] - verts[s[dim_]][j];
            edges.push_back(std::move(e));
        }
        Rat d = det(std::move(edges));
        if (d < 0) d = -d;
        vol += d / dfact;
    }
    return vol;
}

std::vector<std::vector<std::int64_t>> Polytope::lattice_points() const {
    const std::vector<RatVec>& verts = vertices();
    std::vector<std::vector<std::int64_t>> points;
    if (verts.empty()) return points;

    std::vector<Int> lo(dim_), hi(dim_);
    for (int j = 0; j < dim_; ++j) {
        Rat mn = verts[0][j], mx = verts[0][j];
        for (const RatVec& v : verts) {
            if (v[j] < mn) mn = v[j];
            if (v[j] > mx) mx = v[j];
        }
        lo[j] = rat_ceil(mn);
        hi[j] = rat_floor(mx);
        if (lo[j] > hi[j]) return points;
    }

    // Exact membership on the integer grid.  Normals are int64 and the
    // boxes in scope are small, so a 128-bit dot product against the
    // offset's numerator/denominator never overflows; fall back to full
    // rational arithmetic when an offset is too large for that path.
    struct FastRow {
        const std::vector<std::int64_t>* normal;
        __int128 num;
        __int128 den;
        bool fast;
        const HalfSpace* hs;
    };
    const Int i64max = Int(std::numeric_limits<std::int64_t>::max());
    std::vector<Int> loi = lo, hii = hi;
    Int coord_bound = 1;
    for (int j = 0; j < dim_; ++j) {
        const Int alo = abs(loi[j]);
        const Int ahi = abs(hii[j]);
        if (alo > i64max || ahi > i64max)
            throw_toric("UnboundedPolytope", "bounding box exceeds integer range");
        if (alo > coord_bound) coord_bound = alo;
        if (ahi > coord_bound) coord_bound = ahi;
    }

    const Int safe = Int(1) << 62;
    std::vector<FastRow> rows;
    rows.reserve(halfspaces_.size());
    for (const HalfSpace& h : halfspaces_) {
        FastRow r{&h.normal, 0, 1, false, &h};
        const Int n = numerator(h.offset), d = denominator(h.offset);
        Int dot_bound = 0;
        for (auto c : h.normal) dot_bound += Int(c < 0 ? -c : c) * coord_bound;
        if (abs(n) < safe && d < safe && dot_bound < safe) {
            r.num = static_cast<__int128>(n.convert_to<std::int64_t>());
            r.den = static_cast<__int128>(d.convert_to<std::int64_t>());
            r.fast = true;
        }
        rows.push_back(r);
    }

    std::vector<std::int64_t> cur(dim_);

    std::function<void(int)> scan = [&](int j) {
        if (j == dim_) {
            for (const FastRow& r : rows) {
                if (r.fast) {
                    __int128 dot = 0;
                    for (int k = 0; k < dim_; ++k)
                        dot += static_cast<__int128>((*r.normal)[k]) * cur[k];
                    if (dot * r.den < r.num) return;
                } else {
                    Rat s = 0;
                    for (int k = 0; k < dim_; ++k) s += Rat(cur[k]) * (*r.normal)[k];
                    if (s < r.hs->offset) return;
                }
            }
            points.push_back(cur);
            return;
        }
        const std::int64_t a = loi[j].convert_to<std::int64_t>();
        const std::int64_t b = hii[j].convert_to<std::int64_t>();
        for (std::int64_t v = a; v <= b; ++v) {
            cur[j] = v;
            scan(j + 1);
        }
    };
    scan(0);
    return points;
}

Polytope Polytope::scale(const Int& k) const {
    if (k < 1) throw_toric("UnboundedPolytope", "scale factor must be a positive integer");
    std::vector<HalfSpace> hs = halfspaces_;
    for (HalfSpace& h : hs) h.offset *= Rat(k);
    return Polytope(dim_, std::move(hs));
}

bool is_empty(const std::vector<HalfSpace>& halfspaces, int dim) {
    if (halfspaces.empty()) return false;
    return !fm_feasible(to_rows(halfspaces), dim);
}

}  // namespace toric
