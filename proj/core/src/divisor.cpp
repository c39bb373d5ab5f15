#include "toric/divisor.hpp"

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

void require_same_fan(const ToricDivisor& a, const ToricDivisor& b) {
    if (!(a.fan == b.fan))
        throw_toric("FanMismatch", "divisors live on different fans");
}

RatVec pairing_with_rays(const Fan& fan, const RatVec& m) {
    RatVec out(fan.rays.size());
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        Rat s = 0;
        for (int j = 0; j < fan.dim; ++j) s += m[j] * fan.rays[i][j];
        out[i] = s;
    }
    return out;
}

}  // namespace

ToricDivisor make_divisor(Fan fan, std::vector<Rat> coeffs) {
    if (coeffs.size() != fan.rays.size())
        throw_toric("FanMismatch", "coefficient count does not match ray count",
                    {{"coeffs", coeffs.size()}, {"rays", fan.rays.size()}});
    return ToricDivisor{std::move(fan), std::move(coeffs)};
}

ToricDivisor prime_divisor(const Fan& fan, int ray_index) {
    if (ray_index < 0 || ray_index >= static_cast<int>(fan.rays.size()))
        throw_toric("FanMismatch", "ray index out of range", {{"ray_index", ray_index}});
    std::vector<Rat> c(fan.rays.size(), Rat(0));
    c[ray_index] = 1;
    return ToricDivisor{fan, std::move(c)};
}

ToricDivisor canonical_divisor(const Fan& fan) {
    return ToricDivisor{fan, std::vector<Rat>(fan.rays.size(), Rat(-1))};
}

ToricDivisor anticanonical_divisor(const Fan& fan) {
    return ToricDivisor{fan, std::vector<Rat>(fan.rays.size(), Rat(1))};
}

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b) {
    require_same_fan(a, b);
    ToricDivisor out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b) {
    require_same_fan(a, b);
    ToricDivisor out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

ToricDivisor operator*(const Rat& s, const ToricDivisor& d) {
    ToricDivisor out = d;
    for (Rat& c : out.coeffs) c *= s;
    return out;
}

ToricDivisor operator-(const ToricDivisor& d) { return Rat(-1) * d; }

bool is_effective(const ToricDivisor& d) {
    return std::all_of(d.coeffs.begin(), d.coeffs.end(), [](const Rat& c) { return c >= 0; });
}

bool is_zero(const ToricDivisor& d) {
    return std::all_of(d.coeffs.begin(), d.coeffs.end(), [](const Rat& c) { return c == 0; });
}

bool is_prime(const ToricDivisor& d) {
    int units = 0;
    for (const Rat& c : d.coeffs) {
        if (c == 1) ++units;
        else if (c != 0) return false;
    }
    return units == 1;
}

Polytope polytope_of_divisor(const ToricDivisor& d) {
    std::vector<HalfSpace> hs;
    hs.reserve(d.fan.rays.size());
    for (std::size_t i = 0; i < d.fan.rays.size(); ++i)
        hs.push_back(HalfSpace{d.fan.rays[i], -d.coeffs[i]});
    return Polytope(d.fan.dim, std::move(hs));
}

ToricDivisor shift_by_character(const ToricDivisor& d, const RatVec& m) {
    if (static_cast<int>(m.size()) != d.fan.dim)
        throw_toric("FanMismatch", "character length does not match fan dimension");
    ToricDivisor out = d;
    const RatVec pairing = pairing_with_rays(d.fan, m);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += pairing[i];
    return out;
}

Rat volume_of_divisor(const ToricDivisor& d) {
    Rat dfact = 1;
    for (int i = 2; i <= d.fan.dim; ++i) dfact *= i;
    return dfact * polytope_of_divisor(d).volume();
}

std::optional<RatVec> linear_equivalence_character(const ToricDivisor& a,
                                                   const ToricDivisor& b) {
    require_same_fan(a, b);
    const Fan& fan = a.fan;
    // Solve <m, v_i> = a_i - b_i on the rays of one maximal cone (a basis,
    // by smoothness), then verify the remaining rays.
    const Cone& basis = fan.max_cones.front();
    RatMat mat;
    RatVec rhs;
    for (int idx : basis.ray_indices) {
        RatVec row;
        for (auto c : fan.rays[idx]) row.emplace_back(c);
        mat.push_back(std::move(row));
        rhs.push_back(a.coeffs[idx] - b.coeffs[idx]);
    }
    auto m = solve_square(std::move(mat), std::move(rhs));
    if (!m) return std::nullopt;
    const RatVec pairing = pairing_with_rays(fan, *m);
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (pairing[i] != a.coeffs[i] - b.coeffs[i]) return std::nullopt;
    return m;
}

bool intersect_properly(const std::vector<ToricDivisor>& divisors) {
    if (divisors.empty()) return true;
    std::vector<int> rays;
    for (const ToricDivisor& d : divisors) {
        if (!is_prime(d))
            throw_toric("NotPrime", "divisor is not a prime torus-invariant divisor");
        require_same_fan(divisors.front(), d);
        for (std::size_t i = 0; i < d.coeffs.size(); ++i)
            if (d.coeffs[i] == 1) rays.push_back(static_cast<int>(i));
    }
    // The condition to verify: whenever the supports of a subset meet, the
    // local equations form a regular sequence.  On a complete smooth toric
    // variety the supports of distinct prime torus-invariant divisors meet
    // exactly when their rays all lie in one maximal cone, and a subset of
    // a simplicial cone's rays spans a face, which is again a cone of the
    // fan and cuts the expected codimension.  The check therefore reduces
    // to distinctness: a repeated divisor meets itself with identical local
    // equations, never a regular sequence.
    std::set<int> distinct(rays.begin(), rays.end());
    return distinct.size() == rays.size();
}

TorusFlag make_flag(Fan fan, std::vector<int> ray_order) {
    if (static_cast<int>(ray_order.size()) != fan.dim)
        throw_toric("NonInvertibleFlagMap", "flag must list exactly dim rays");
    if (!spans_cone(fan, ray_order))
        throw_toric("NonInvertibleFlagMap", "flag rays do not span a maximal cone");
    return TorusFlag{std::move(fan), std::move(ray_order)};
}

Polytope okounkov_body(const ToricDivisor& d, const TorusFlag& flag) {
    if (!(d.fan == flag.fan))
        throw_toric("FanMismatch", "flag and divisor live on different fans");
    const Fan& fan = d.fan;
    const int dim = fan.dim;

    RatMat phi;  // rows = flag rays
    for (int idx : flag.ray_order) {
        RatVec row;
        for (auto c : fan.rays[idx]) row.emplace_back(c);
        phi.push_back(std::move(row));
    }
    auto phi_inv = inverse(phi);
    if (!phi_inv)
        throw_toric("NonInvertibleFlagMap", "flag rays are not a lattice basis");

    // Normalize so the divisor is trivial on the flag cone: find the
    // character m with <m, v_i> = -a_i on the flag rays.  It must be
    // integral to be a character.
    RatVec rhs;
    for (int idx : flag.ray_order) rhs.push_back(-d.coeffs[idx]);
    auto m = solve_square(phi, rhs);
    if (!m)
        throw_toric("NonInvertibleFlagMap", "flag rays are not a lattice basis");
    for (const Rat& c : *m) {
        if (!is_integer(c))
            throw_toric("NonIntegralNormalization",
                        "no integral character trivializes the divisor on the flag cone");
    }
    const ToricDivisor shifted = shift_by_character(d, *m);

    // Image of P_shifted under y = phi(u): new normal per ray is
    // (phi^{-1})^T v_i, integral because phi is unimodular.
    std::vector<HalfSpace> hs;
    hs.reserve(fan.rays.size());
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        LatticeVector normal(dim);
        for (int r = 0; r < dim; ++r) {
            Rat s = 0;
            for (int k = 0; k < dim; ++k) s += (*phi_inv)[k][r] * fan.rays[i][k];
            if (!is_integer(s))
                throw_toric("NonInvertibleFlagMap", "flag map is not unimodular");
            normal[r] = numerator(s).convert_to<std::int64_t>();
        }
        hs.push_back(HalfSpace{std::move(normal), -shifted.coeffs[i]});
    }
    return Polytope(dim, std::move(hs));
}

}  // namespace toric
