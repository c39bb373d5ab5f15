// Shared test support: seeded random instance generators and independent
// oracles (shoelace area, lattice-count volume estimates, Simpson
// integration, exact Ehrhart fits, least-squares slopes).
//
// The oracles deliberately avoid the code paths they are used to check:
// shoelace works from sorted boundary vertices rather than the face-lattice
// triangulation, and the counting estimates drive the Ehrhart-style
// convergence checks.

#pragma once

#include "toric/blowup.hpp"
#include "toric/divisor.hpp"
#include "toric/fan.hpp"
#include "toric/linalg.hpp"
#include "toric/polytope.hpp"
#include "toric/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace testsupport {

using toric::Fan;
using toric::Int;
using toric::Rat;
using toric::RatVec;
using toric::ToricDivisor;

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// ---------------------------------------------------------------------------
// fans

inline Fan random_unimodular_image(const Fan& fan, Rng& rng) {
    const int d = fan.dim;
    // random product of elementary shears and coordinate swaps
    std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d, 0));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    const int steps = pick(rng, 0, 4);
    for (int s = 0; s < steps; ++s) {
        const int i = pick(rng, 0, d - 1);
        int j = pick(rng, 0, d - 2);
        if (j >= i) ++j;
        const int k = pick(rng, -2, 2);
        for (int c = 0; c < d; ++c) m[i][c] += k * m[j][c];
        if (pick(rng, 0, 3) == 0) std::swap(m[i], m[j]);
    }
    std::vector<toric::LatticeVector> rays;
    for (const auto& r : fan.rays) {
        toric::LatticeVector nr(d, 0);
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < d; ++c) nr[i] += m[i][c] * r[c];
        rays.push_back(std::move(nr));
    }
    return toric::make_fan(d, std::move(rays), fan.max_cones);
}

inline toric::Cone random_center(const Fan& fan, Rng& rng) {
    const toric::Cone& sigma =
        fan.max_cones[pick(rng, 0, static_cast<int>(fan.max_cones.size()) - 1)];
    const int size = pick(rng, 2, static_cast<int>(sigma.ray_indices.size()));
    std::vector<int> idx = sigma.ray_indices;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(size);
    return toric::Cone{std::move(idx)};
}

/// A random smooth complete fan: a standard surface (or P^3), a random
/// unimodular change of lattice basis, then a few star subdivisions.
inline Fan random_smooth_fan(Rng& rng, bool allow_3d = false) {
    Fan fan;
    switch (pick(rng, 0, allow_3d ? 4 : 3)) {
        case 0: fan = toric::standard_fan(toric::Surface::P2); break;
        case 1: fan = toric::standard_fan(toric::Surface::P1xP1); break;
        case 2: fan = toric::hirzebruch_fan(2); break;
        case 3: fan = toric::hirzebruch_fan(3); break;
        default: fan = toric::projective_space_fan(3); break;
    }
    fan = random_unimodular_image(fan, rng);
    const int blowups = pick(rng, 0, 2);
    for (int b = 0; b < blowups; ++b)
        fan = toric::star_subdivision(fan, random_center(fan, rng)).source;
    return fan;
}

// ---------------------------------------------------------------------------
// divisors

/// Nef test through the support function: on every maximal cone the local
/// character m_sigma solving <m, v_i> = -a_i must satisfy every other ray's
/// inequality.
inline bool is_nef(const ToricDivisor& d) {
    const Fan& fan = d.fan;
    for (const toric::Cone& sigma : fan.max_cones) {
        toric::RatMat a;
        RatVec b;
        for (int idx : sigma.ray_indices) {
            RatVec row;
            for (auto c : fan.rays[idx]) row.emplace_back(c);
            a.push_back(std::move(row));
            b.push_back(-d.coeffs[idx]);
        }
        auto m = toric::solve_square(std::move(a), std::move(b));
        if (!m) return false;
        for (std::size_t i = 0; i < fan.rays.size(); ++i) {
            Rat s = 0;
            for (int j = 0; j < fan.dim; ++j) s += (*m)[j] * fan.rays[i][j];
            if (s < -d.coeffs[i]) return false;
        }
    }
    return true;
}

/// Rejection-samples a nonzero nef divisor with small nonnegative integer
/// coefficients; falls back to a multiple of the anticanonical divisor
/// (nef on all the base surfaces used here).
inline ToricDivisor random_nef_divisor(const Fan& fan, Rng& rng, int max_coeff = 3) {
    for (int tries = 0; tries < 400; ++tries) {
        std::vector<Rat> coeffs;
        bool nonzero = false;
        for (std::size_t i = 0; i < fan.rays.size(); ++i) {
            const int c = pick(rng, 0, max_coeff);
            if (c != 0) nonzero = true;
            coeffs.emplace_back(c);
        }
        if (!nonzero) continue;
        ToricDivisor d = toric::make_divisor(fan, std::move(coeffs));
        if (is_nef(d)) return d;
    }
    return Rat(pick(rng, 1, max_coeff)) * toric::anticanonical_divisor(fan);
}

/// A big divisor: nonzero polytope volume (rejection over small integer
/// coefficients, biased positive).
inline ToricDivisor random_big_divisor(const Fan& fan, Rng& rng, int max_coeff = 3) {
    for (int tries = 0; tries < 400; ++tries) {
        std::vector<Rat> coeffs;
        for (std::size_t i = 0; i < fan.rays.size(); ++i)
            coeffs.emplace_back(pick(rng, 0, max_coeff));
        ToricDivisor d = toric::make_divisor(fan, std::move(coeffs));
        if (toric::polytope_of_divisor(d).volume() > 0) return d;
    }
    return toric::anticanonical_divisor(fan);
}

inline ToricDivisor random_effective_divisor(const Fan& fan, Rng& rng, int max_coeff = 2) {
    while (true) {
        std::vector<Rat> coeffs;
        bool nonzero = false;
        for (std::size_t i = 0; i < fan.rays.size(); ++i) {
            const int c = pick(rng, 0, max_coeff);
            if (c != 0) nonzero = true;
            coeffs.emplace_back(c);
        }
        if (nonzero) return toric::make_divisor(fan, std::move(coeffs));
    }
}

// ---------------------------------------------------------------------------
// oracles

/// Exact area of a 2-d polytope from its vertices alone: sort the points
/// around their centroid with exact angular comparisons, then shoelace.
/// Independent of the face-lattice triangulation used by Polytope::volume.
inline Rat shoelace_area(std::vector<RatVec> verts) {
    if (verts.size() < 3) return 0;
    RatVec c(2, Rat(0));
    for (const RatVec& v : verts) {
        c[0] += v[0];
        c[1] += v[1];
    }
    c[0] /= Rat(verts.size());
    c[1] /= Rat(verts.size());
    auto half = [&](const RatVec& p) {
        // 0 for angle in [0, pi), 1 for [pi, 2pi), measured from centroid
        const Rat dx = p[0] - c[0], dy = p[1] - c[1];
        if (dy != 0) return dy > 0 ? 0 : 1;
        return dx >= 0 ? 0 : 1;
    };
    std::sort(verts.begin(), verts.end(), [&](const RatVec& p, const RatVec& q) {
        const int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        const Rat cross = (p[0] - c[0]) * (q[1] - c[1]) - (p[1] - c[1]) * (q[0] - c[0]);
        return cross > 0;
    });
    Rat area = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const RatVec& p = verts[i];
        const RatVec& q = verts[(i + 1) % verts.size()];
        area += p[0] * q[1] - p[1] * q[0];
    }
    area /= 2;
    return area < 0 ? Rat(-area) : area;
}

/// Lattice-count estimate of the volume: #(kP cap Z^d) / k^d.
inline double counting_volume(const toric::Polytope& p, int k) {
    const double count = static_cast<double>(p.scale(Int(k)).lattice_points().size());
    return count / std::pow(static_cast<double>(k), p.dim());
}

/// Composite Simpson rule with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Exact quadratic fit of counts at k = 1..5: interpolates through k=1,2,3
/// and demands agreement at k=4,5.  Returns the leading coefficient.
inline std::optional<Rat> ehrhart_quadratic_leading(const std::vector<Int>& counts) {
    if (counts.size() < 5) return std::nullopt;
    toric::RatMat a;
    RatVec b;
    for (int k = 1; k <= 3; ++k) {
        a.push_back({Rat(1), Rat(k), Rat(k * k)});
        b.emplace_back(counts[k - 1]);
    }
    auto sol = toric::solve_square(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    for (int k = 4; k <= 5; ++k) {
        const Rat predicted = (*sol)[0] + (*sol)[1] * k + (*sol)[2] * k * k;
        if (predicted != Rat(counts[k - 1])) return std::nullopt;
    }
    return (*sol)[2];
}

/// Ordinary least-squares slope of y against x.
inline double regression_slope(const std::vector<std::pair<double, double>>& pts) {
    const double n = static_cast<double>(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace testsupport
