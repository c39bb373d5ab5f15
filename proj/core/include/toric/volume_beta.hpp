// Pseudoeffective thresholds, exact volume functions, and asymptotic volume
// constants for families L - tF of torus-invariant R-divisors.
//
// For t in [0, gamma_eff] the polytope of L - tF is
//   P(t) = { m : <m, v_i> >= -L_i + t F_i },
// whose Euclidean volume is a piecewise polynomial in t of degree <= dim.
// The algorithm:
//   1. gamma_eff = the largest feasible t, found by projecting the system
//      in the variables (m, t) onto t with exact Fourier-Motzkin.
//   2. Breakpoint candidates: the t-values where dim+1 of the moving
//      hyperplanes become concurrent (one square solve per (dim+1)-subset).
//      The candidate set is a superset of the true breakpoints; spurious
//      candidates merge away because adjacent intervals then interpolate to
//      the same polynomial.
//   3. On each interval the volume is recovered by exact Lagrange
//      interpolation through dim+1 interior rational nodes and verified at
//      one extra node, guarding against degree underestimation.
//   4. beta(L, F) integrates the function termwise and divides by
//      Vol(P(0)); the dim! normalizations of Vol_X cancel in the ratio.

#pragma once

#include "toric/divisor.hpp"
#include "toric/piecewise.hpp"
#include "toric/polytope.hpp"
#include "toric/rational.hpp"

namespace toric {

struct BetaResult {
    Rat beta;
    Rat gamma_eff;
    Rat volume_L;  // Euclidean Vol(P_L); Vol_X(L) = dim! * volume_L
    PiecewisePolynomial volume_function;
};

/// The polytope of L - tF at a fixed rational t.
Polytope family_polytope(const ToricDivisor& L, const ToricDivisor& F, const Rat& t);

/// sup { t >= 0 : P(t) nonempty }.  Errors: NotBig (Vol(P_L) = 0), NotEffective
/// (F not effective or zero), FanMismatch, Unbounded (cannot occur on a
/// complete fan with F nonzero effective; asserted).
Rat pseudoeffective_threshold(const ToricDivisor& L, const ToricDivisor& F);

/// The exact Euclidean volume of P(t) as a function of t on [0, gamma_eff].
/// Requires P_L nonempty; a lower-dimensional P_L (volume 0 but nonempty)
/// yields the zero function, degenerating to the single-point domain when
/// gamma_eff = 0.
PiecewisePolynomial volume_function(const ToricDivisor& L, const ToricDivisor& F);

/// beta(L, F) = integral of the normalized volume function.  Requires L big.
BetaResult beta(const ToricDivisor& L, const ToricDivisor& F);

}  // namespace toric
