#include "toric/fan.hpp"

#include "toric/errors.hpp"
#include "toric/fourier_motzkin.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toric {

namespace {

OJson ray_json(const LatticeVector& v) {
    OJson a = OJson::array();
    for (auto c : v) a.push_back(c);
    return a;
}

RatMat cone_matrix(const Fan& fan, const Cone& cone) {
    RatMat m;
    m.reserve(cone.ray_indices.size());
    for (int idx : cone.ray_indices) {
        RatVec row;
        row.reserve(fan.dim);
        for (auto c : fan.rays[idx]) row.emplace_back(c);
        m.push_back(std::move(row));
    }
    return m;
}

// Interiors of two full-dimensional simplicial cones intersect iff some
// point is a strictly positive combination of both generator sets.  By
// homogeneity "strictly positive" can be taken as ">= 1".
bool cone_interiors_intersect(const Fan& fan, const Cone& a, const Cone& b) {
    const std::size_t na = a.ray_indices.size();
    const std::size_t nb = b.ray_indices.size();
    const std::size_t nvars = na + nb;
    std::vector<LinIneq> rows;
    // sum_i lambda_i u_i - sum_j mu_j w_j = 0, one pair of inequalities per
    // ambient coordinate
    for (int c = 0; c < fan.dim; ++c) {
        LinIneq eq;
        eq.coeffs.assign(nvars, Rat(0));
        for (std::size_t i = 0; i < na; ++i) eq.coeffs[i] = fan.rays[a.ray_indices[i]][c];
        for (std::size_t j = 0; j < nb; ++j) eq.coeffs[na + j] = -Rat(fan.rays[b.ray_indices[j]][c]);
        eq.rhs = 0;
        LinIneq ge = eq;
        LinIneq le = eq;
        for (Rat& v : le.coeffs) v = -v;
        rows.push_back(std::move(ge));
        rows.push_back(std::move(le));
    }
    for (std::size_t v = 0; v < nvars; ++v) {
        LinIneq pos;
        pos.coeffs.assign(nvars, Rat(0));
        pos.coeffs[v] = 1;
        pos.rhs = 1;
        rows.push_back(std::move(pos));
    }
    return fm_feasible(std::move(rows), nvars);
}

void check_completeness(const Fan& fan) {
    // facet pairing: drop one ray from each maximal cone; every such facet
    // must occur in exactly two maximal cones
    std::map<std::vector<int>, int> facet_count;
    for (const Cone& cone : fan.max_cones) {
        for (std::size_t drop = 0; drop < cone.ray_indices.size(); ++drop) {
            std::vector<int> facet;
            for (std::size_t i = 0; i < cone.ray_indices.size(); ++i)
                if (i != drop) facet.push_back(cone.ray_indices[i]);
            ++facet_count[facet];
        }
    }
    for (const auto& [facet, count] : facet_count) {
        if (count != 2) {
            OJson f = OJson::array();
            for (int i : facet) f.push_back(i);
            throw_toric("IncompleteFan",
                        "facet not shared by exactly two maximal cones",
                        {{"facet", f}, {"count", count}});
        }
    }
    for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
        for (std::size_t j = i + 1; j < fan.max_cones.size(); ++j) {
            if (cone_interiors_intersect(fan, fan.max_cones[i], fan.max_cones[j])) {
                throw_toric("IncompleteFan", "maximal cone interiors overlap",
                            {{"cones", {static_cast<int>(i), static_cast<int>(j)}}});
            }
        }
    }
}

}  // namespace

std::int64_t content(const LatticeVector& v) {
    std::int64_t g = 0;
    for (auto c : v) g = std::gcd(g, c);
    return g < 0 ? -g : g;
}

Fan make_fan(int dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones) {
    if (dim < 1) throw_toric("IncompleteFan", "fan dimension must be positive", {{"dim", dim}});
    if (rays.empty()) throw_toric("IncompleteFan", "fan has no rays");

    for (const LatticeVector& r : rays) {
        if (static_cast<int>(r.size()) != dim)
            throw_toric("NonPrimitiveRay", "ray length does not match fan dimension",
                        {{"ray", ray_json(r)}});
        if (content(r) != 1)
            throw_toric("NonPrimitiveRay", "ray generator is not primitive",
                        {{"ray", ray_json(r)}});
    }
    {
        std::set<LatticeVector> seen;
        for (const LatticeVector& r : rays) {
            if (!seen.insert(r).second)
                throw_toric("DuplicateRay", "duplicate ray generator", {{"ray", ray_json(r)}});
        }
    }

    Fan fan;
    fan.dim = dim;
    fan.rays = std::move(rays);

    std::vector<bool> used(fan.rays.size(), false);
    for (Cone& cone : max_cones) {
        std::sort(cone.ray_indices.begin(), cone.ray_indices.end());
        if (std::adjacent_find(cone.ray_indices.begin(), cone.ray_indices.end()) !=
            cone.ray_indices.end())
            throw_toric("NonSmoothCone", "repeated ray index in cone");
        for (int idx : cone.ray_indices) {
            if (idx < 0 || idx >= static_cast<int>(fan.rays.size()))
                throw_toric("NonSmoothCone", "cone ray index out of range", {{"index", idx}});
            used[idx] = true;
        }
        if (static_cast<int>(cone.ray_indices.size()) != dim)
            throw_toric("IncompleteFan",
                        "maximal cone of a complete fan must have exactly dim rays",
                        {{"cone_size", cone.ray_indices.size()}});
    }
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i])
            throw_toric("IncompleteFan", "ray not used by any maximal cone",
                        {{"ray_index", i}});
    }

    std::sort(max_cones.begin(), max_cones.end(),
              [](const Cone& a, const Cone& b) { return a.ray_indices < b.ray_indices; });
    if (std::adjacent_find(max_cones.begin(), max_cones.end()) != max_cones.end())
        throw_toric("IncompleteFan", "duplicate maximal cone");
    fan.max_cones = std::move(max_cones);

    for (const Cone& cone : fan.max_cones) {
        const Rat d = det(cone_matrix(fan, cone));
        if (d != 1 && d != -1)
            throw_toric("NonSmoothCone", "maximal cone generators have |det| != 1",
                        {{"det", rat_to_string(d)}});
    }

    check_completeness(fan);
    return fan;
}

Fan standard_fan(Surface s) {
    switch (s) {
        case Surface::P2:
            return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}},
                            {{{0, 1}}, {{1, 2}}, {{2, 0}}});
        case Surface::P1xP1:
            return make_fan(2, {{-1, 0}, {0, 1}, {1, 0}, {0, -1}},
                            {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 0}}});
    }
    throw_toric("IncompleteFan", "unknown standard surface");
}

Fan hirzebruch_fan(int r) {
    if (r < 2)
        throw_toric("IncompleteFan", "Hirzebruch index must be >= 2", {{"r", r}});
    return make_fan(2, {{1, 0}, {0, 1}, {-1, r}, {0, -1}},
                    {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 0}}});
}

Fan projective_space_fan(int d) {
    if (d < 1) throw_toric("IncompleteFan", "dimension must be positive", {{"dim", d}});
    std::vector<LatticeVector> rays;
    for (int i = 0; i < d; ++i) {
        LatticeVector e(d, 0);
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.push_back(LatticeVector(d, -1));
    std::vector<Cone> cones;
    for (int skip = 0; skip <= d; ++skip) {
        Cone c;
        for (int i = 0; i <= d; ++i)
            if (i != skip) c.ray_indices.push_back(i);
        cones.push_back(std::move(c));
    }
    return make_fan(d, std::move(rays), std::move(cones));
}

bool is_smooth(const Fan& fan) {
    for (const Cone& cone : fan.max_cones) {
        const Rat d = det(cone_matrix(fan, cone));
        if (d != 1 && d != -1) return false;
    }
    return true;
}

bool spans_cone(const Fan& fan, std::vector<int> ray_indices) {
    std::sort(ray_indices.begin(), ray_indices.end());
    for (const Cone& cone : fan.max_cones) {
        if (std::includes(cone.ray_indices.begin(), cone.ray_indices.end(),
                          ray_indices.begin(), ray_indices.end()))
            return true;
    }
    return false;
}

}  // namespace toric
