#include "toric/volume_beta.hpp"

#include "toric/errors.hpp"
#include "toric/fourier_motzkin.hpp"
#include "toric/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

void validate_family(const ToricDivisor& L, const ToricDivisor& F) {
    if (!(L.fan == F.fan))
        throw_toric("FanMismatch", "L and F live on different fans");
    if (is_zero(F) || !is_effective(F))
        throw_toric("NotEffective", "F must be a nonzero effective divisor");
}

// Inequality rows of P(t) in the variables (m_1..m_d, t):
//   <m, v_i> - t F_i >= -L_i
std::vector<LinIneq> family_rows(const ToricDivisor& L, const ToricDivisor& F) {
    const Fan& fan = L.fan;
    std::vector<LinIneq> rows;
    rows.reserve(fan.rays.size() + 1);
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        LinIneq r;
        r.coeffs.reserve(fan.dim + 1);
        for (auto c : fan.rays[i]) r.coeffs.emplace_back(c);
        r.coeffs.push_back(-F.coeffs[i]);
        r.rhs = -L.coeffs[i];
        rows.push_back(std::move(r));
    }
    return rows;
}

Rat threshold_impl(const ToricDivisor& L, const ToricDivisor& F) {
    const int d = L.fan.dim;
    std::vector<LinIneq> rows = family_rows(L, F);
    LinIneq tpos;
    tpos.coeffs.assign(d + 1, Rat(0));
    tpos.coeffs[d] = 1;
    tpos.rhs = 0;
    rows.push_back(std::move(tpos));
    const FmInterval iv = fm_project_to(std::move(rows), d + 1, d);
    if (!iv.feasible)
        throw_toric("NotBig", "P_L is empty; the family has no effective member");
    if (!iv.upper)
        throw_toric("Unbounded", "pseudoeffective threshold is infinite");
    return *iv.upper;
}

}  // namespace

Polytope family_polytope(const ToricDivisor& L, const ToricDivisor& F, const Rat& t) {
    const Fan& fan = L.fan;
    std::vector<HalfSpace> hs;
    hs.reserve(fan.rays.size());
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        hs.push_back(HalfSpace{fan.rays[i], -L.coeffs[i] + t * F.coeffs[i]});
    return Polytope(fan.dim, std::move(hs));
}

Rat pseudoeffective_threshold(const ToricDivisor& L, const ToricDivisor& F) {
    validate_family(L, F);
    if (polytope_of_divisor(L).volume() == 0)
        throw_toric("NotBig", "L is not big (Vol = 0)");
    return threshold_impl(L, F);
}

PiecewisePolynomial volume_function(const ToricDivisor& L, const ToricDivisor& F) {
    validate_family(L, F);
    const Fan& fan = L.fan;
    const int d = fan.dim;

    const Rat gamma = threshold_impl(L, F);  // throws NotBig when P_L is empty
    const Rat vol0 = family_polytope(L, F, 0).volume();

    if (gamma == 0) {
        // single-point domain; the only value is Vol(P(0))
        return PiecewisePolynomial({Rat(0)}, {Polynomial({vol0})});
    }
    if (vol0 == 0) {
        // P_L is lower-dimensional; every P(t) sits inside it, so the
        // volume function vanishes identically
        return PiecewisePolynomial({Rat(0), gamma}, {Polynomial()});
    }

    // Breakpoint candidates: t-values where d+1 of the moving hyperplanes
    // <m, v_i> = -L_i + t F_i meet in a point.
    std::set<Rat> cuts;
    cuts.insert(Rat(0));
    cuts.insert(gamma);
    const int n = static_cast<int>(fan.rays.size());
    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    if (n >= d + 1) {
        while (true) {
            RatMat a;
            RatVec b;
            for (int i : idx) {
                RatVec row;
                row.reserve(d + 1);
                for (auto c : fan.rays[i]) row.emplace_back(c);
                row.push_back(-F.coeffs[i]);
                a.push_back(std::move(row));
                b.push_back(-L.coeffs[i]);
            }
            if (auto sol = solve_square(std::move(a), std::move(b))) {
                const Rat& t = (*sol)[d];
                if (t > 0 && t < gamma) cuts.insert(t);
            }
            int i = d;
            while (i >= 0 && idx[i] == n - (d + 1) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    const std::vector<Rat> breaks(cuts.begin(), cuts.end());
    std::vector<Polynomial> pieces;
    pieces.reserve(breaks.size() - 1);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const Rat lo = breaks[k];
        const Rat len = breaks[k + 1] - lo;
        std::vector<std::pair<Rat, Rat>> nodes;
        nodes.reserve(d + 1);
        for (int j = 0; j <= d; ++j) {
            const Rat t = lo + len * Rat(j + 1) / Rat(d + 2);
            nodes.emplace_back(t, family_polytope(L, F, t).volume());
        }
        Polynomial piece = Polynomial::lagrange(nodes);
        // degree-bound guard: one extra node must agree exactly
        const Rat tv = lo + len / Rat(2 * (d + 2));
        if (piece.eval(tv) != family_polytope(L, F, tv).volume())
            throw std::logic_error(
                "volume function failed the degree-bound verification node");
        pieces.push_back(std::move(piece));
    }

    // merge intervals whose polynomials agree (spurious candidates)
    std::vector<Rat> mbreaks{breaks.front()};
    std::vector<Polynomial> mpieces;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (!mpieces.empty() && mpieces.back() == pieces[k]) {
            mbreaks.back() = breaks[k + 1];
            continue;
        }
        mpieces.push_back(pieces[k]);
        mbreaks.push_back(breaks[k + 1]);
    }
    return PiecewisePolynomial(std::move(mbreaks), std::move(mpieces));
}

BetaResult beta(const ToricDivisor& L, const ToricDivisor& F) {
    validate_family(L, F);
    const Rat vol0 = polytope_of_divisor(L).volume();
    if (vol0 == 0) throw_toric("NotBig", "L is not big (Vol = 0)");

    PiecewisePolynomial vf = volume_function(L, F);
    const Rat gamma = vf.domain_end();
    const Rat b = vf.integrate() / vol0;
    assert(b > 0 && b <= gamma);
    return BetaResult{b, gamma, vol0, std::move(vf)};
}

}  // namespace toric
