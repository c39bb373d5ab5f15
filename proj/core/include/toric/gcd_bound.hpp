// Assembly of the gcd height-bound constants for a torus-invariant blow-up
// together with an anticanonical decomposition -K_X ~ D_1 + ... + D_q.
//
// For each member the asymptotic volume constant
//   beta_j = beta(-K_{X'}, pullback(D_j))
// yields gamma = max_j 1/beta_j and the minimal slack delta = max(gamma-1, 0).
// With a codimension-r center and epsilon >= 0 the height inequality
//   h_E(x') <= coeff_height * h_{-pullback(K_X)}(x')
//             + coeff_weil * sum_{v not in S} lambda_{-pullback(K_X)}(v, x')
//             + O(1)
// has coefficients
//   coeff_height = (delta + epsilon) / ((1 + delta + epsilon) (r - 1))
//   coeff_weil   = 1 / ((1 + delta + epsilon) (r - 1)).
// The O(1) constant and the exceptional set Z' are not computable from this
// data; the report carries them as explicit placeholders.

#pragma once

#include "toric/blowup.hpp"
#include "toric/divisor.hpp"
#include "toric/rational.hpp"

#include <string>
#include <vector>

namespace toric {

struct AnticanonicalDecomposition {
    Fan fan;                            // the blow-up's target fan
    std::vector<ToricDivisor> divisors;  // effective, nonzero, summing to -K
};

AnticanonicalDecomposition make_decomposition(Fan fan, std::vector<ToricDivisor> divisors);

struct PairDiagnostic {
    int i = 0;
    int j = 0;
    // "verified-proper": both pullbacks are prime and intersect properly
    // "assumed-general-members": a pullback is non-prime; the proper
    //     intersection is assumed to hold for general members of the linear
    //     systems, as it cannot be certified on torus-invariant
    //     representatives
    // "improper": prime pullbacks that fail the regular-sequence condition
    std::string status;
};

struct HypothesesReport {
    bool anticanonical_ok = false;  // sum is linearly equivalent to -K_X
    bool big = false;               // Vol(-K_X) > 0
    Rat anticanonical_volume;
    std::vector<int> non_prime_pullbacks;  // member indices
    std::vector<PairDiagnostic> pairs;
    bool all_verified = false;  // every pair "verified-proper"
    bool all_verified_or_assumed = false;
};

/// Verifies bigness and the decomposition identity exactly; checks proper
/// intersection of the pullbacks pairwise where both are prime
/// torus-invariant divisors, and downgrades to an "assumed" diagnostic
/// otherwise.  Throws DecompositionMismatch when the sum is not linearly
/// equivalent to -K_X.
HypothesesReport check_hypotheses(const BlowupMap& map,
                                  const AnticanonicalDecomposition& decomp);

struct GammaDelta {
    Rat gamma;
    Rat delta;
    std::vector<Rat> betas;  // one per decomposition member
};

/// Computes every beta_j exactly and returns gamma = max 1/beta_j with the
/// minimal delta.  Requires the hypotheses to hold or be assumable; set
/// allow_assumed = false to insist on fully verified proper intersections.
GammaDelta gamma_delta(const BlowupMap& map, const AnticanonicalDecomposition& decomp,
                       bool allow_assumed = true);

struct GcdBoundReport {
    Rat gamma;
    Rat delta;
    int r = 0;
    Rat epsilon;
    Rat coeff_height;
    Rat coeff_weil;
    std::vector<Rat> per_divisor_betas;
    bool betas_meet_del_pezzo_lower_bound = false;  // every beta_j >= 7/8
    std::string o1_constant = "unspecified-by-theory";
    std::string exceptional_set = "unspecified-by-theory";
    HypothesesReport hypotheses;
};

/// epsilon >= 0; epsilon = 0 gives the formal limit coefficients
/// delta/(1+delta) and 1/(1+delta) (for r = 2).  Errors: CodimensionOne.
GcdBoundReport bound_report(const BlowupMap& map, const AnticanonicalDecomposition& decomp,
                            const Rat& epsilon);

}  // namespace toric
