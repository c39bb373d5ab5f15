#include "toric/gcd_bound.hpp"

#include "toric/errors.hpp"
#include "toric/volume_beta.hpp"

#include <algorithm>

namespace toric {

AnticanonicalDecomposition make_decomposition(Fan fan, std::vector<ToricDivisor> divisors) {
    if (divisors.empty())
        throw_toric("DecompositionMismatch", "decomposition has no members");
    for (const ToricDivisor& d : divisors) {
        if (!(d.fan == fan))
            throw_toric("FanMismatch", "decomposition member lives on a different fan");
        if (is_zero(d) || !is_effective(d))
            throw_toric("DecompositionMismatch",
                        "decomposition members must be nonzero and effective");
    }
    return AnticanonicalDecomposition{std::move(fan), std::move(divisors)};
}

HypothesesReport check_hypotheses(const BlowupMap& map,
                                  const AnticanonicalDecomposition& decomp) {
    if (!(decomp.fan == map.target))
        throw_toric("FanMismatch", "decomposition does not live on the blow-up's target fan");

    ToricDivisor sum = decomp.divisors.front();
    for (std::size_t j = 1; j < decomp.divisors.size(); ++j) sum = sum + decomp.divisors[j];
    const ToricDivisor antican = anticanonical_divisor(map.target);
    if (!linear_equivalence_character(sum, antican))
        throw_toric("DecompositionMismatch",
                    "members do not sum to the anticanonical class");

    HypothesesReport rep;
    rep.anticanonical_ok = true;
    rep.anticanonical_volume = volume_of_divisor(antican);
    rep.big = rep.anticanonical_volume > 0;

    std::vector<ToricDivisor> pullbacks;
    pullbacks.reserve(decomp.divisors.size());
    for (const ToricDivisor& d : decomp.divisors) pullbacks.push_back(pullback(map, d));
    for (std::size_t j = 0; j < pullbacks.size(); ++j)
        if (!is_prime(pullbacks[j])) rep.non_prime_pullbacks.push_back(static_cast<int>(j));

    rep.all_verified = true;
    rep.all_verified_or_assumed = true;
    for (std::size_t i = 0; i < pullbacks.size(); ++i) {
        for (std::size_t j = i + 1; j < pullbacks.size(); ++j) {
            PairDiagnostic diag;
            diag.i = static_cast<int>(i);
            diag.j = static_cast<int>(j);
            if (!is_prime(pullbacks[i]) || !is_prime(pullbacks[j]) ||
                pullbacks[i] == pullbacks[j]) {
                // Non-prime pullbacks, or two members drawn from the same
                // class: the torus-invariant representatives cannot certify
                // properness, which holds for general members instead.
                diag.status = "assumed-general-members";
                rep.all_verified = false;
            } else {
                const bool ok = intersect_properly({pullbacks[i], pullbacks[j]});
                diag.status = ok ? "verified-proper" : "improper";
                if (!ok) {
                    rep.all_verified = false;
                    rep.all_verified_or_assumed = false;
                }
            }
            rep.pairs.push_back(std::move(diag));
        }
    }
    if (!rep.big) {
        rep.all_verified = false;
        rep.all_verified_or_assumed = false;
    }
    return rep;
}

GammaDelta gamma_delta(const BlowupMap& map, const AnticanonicalDecomposition& decomp,
                       bool allow_assumed) {
    const HypothesesReport rep = check_hypotheses(map, decomp);
    if (!rep.big)
        throw_toric("NotBig", "the anticanonical divisor of the base is not big");
    if (!rep.all_verified && !(allow_assumed && rep.all_verified_or_assumed))
        throw_toric("ImproperIntersection",
                    "pullbacks do not intersect properly and assumption is disabled");

    const ToricDivisor antican_src = anticanonical_divisor(map.source);
    GammaDelta out;
    out.betas.reserve(decomp.divisors.size());
    for (const ToricDivisor& d : decomp.divisors)
        out.betas.push_back(beta(antican_src, pullback(map, d)).beta);

    out.gamma = Rat(1) / out.betas.front();
    for (const Rat& b : out.betas) {
        const Rat inv = Rat(1) / b;
        if (inv > out.gamma) out.gamma = inv;
    }
    out.delta = out.gamma > 1 ? Rat(out.gamma - 1) : Rat(0);
    return out;
}

GcdBoundReport bound_report(const BlowupMap& map, const AnticanonicalDecomposition& decomp,
                            const Rat& epsilon) {
    if (map.codim < 2)
        throw_toric("CodimensionOne", "the bound requires a center of codimension >= 2");
    if (epsilon < 0)
        throw_toric("DecompositionMismatch", "epsilon must be nonnegative");

    const GammaDelta gd = gamma_delta(map, decomp);
    GcdBoundReport rep;
    rep.gamma = gd.gamma;
    rep.delta = gd.delta;
    rep.r = map.codim;
    rep.epsilon = epsilon;
    const Rat denom = (1 + rep.delta + epsilon) * Rat(rep.r - 1);
    rep.coeff_height = (rep.delta + epsilon) / denom;
    rep.coeff_weil = Rat(1) / denom;
    rep.per_divisor_betas = gd.betas;
    rep.betas_meet_del_pezzo_lower_bound =
        std::all_of(gd.betas.begin(), gd.betas.end(),
                    [](const Rat& b) { return b >= Rat(7, 8); });
    rep.hypotheses = check_hypotheses(map, decomp);
    return rep;
}

}  // namespace toric
