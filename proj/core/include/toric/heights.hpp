// Heights and generalized gcd over the rational number field.
//
// Places of Q are the primes and the archimedean absolute value, normalized
// so the product formula holds with multiplicity one:
//   |x|_p = p^{-ord_p(x)},   |x|_inf = usual absolute value.
//
// Every local quantity in this module is log of a positive rational and is
// carried exactly in that form; floats appear only as reported values.  The
// generalized gcd height is
//   h_gcd(a, b) = sum_v min( max(-log|a|_v, 0), max(-log|b|_v, 0) ),
// which for nonzero integers equals log gcd(a, b).  Local Weil functions:
//   lambda_E,v(a, b)  = min( max(-log|a|_v, 0), max(-log|b|_v, 0) )
//     for the exceptional divisor of the blow-up of P1 x P1 at
//     ([1:0], [1:0]); summing over all places gives h_gcd exactly (the
//     O(1) of the general theory is 0 under this normalization).
//   lambda_{-K},v(a, b) = |log|a|_v| + |log|b|_v|
//     for the anticanonical snc divisor (the four torus-invariant prime
//     divisors, two per factor); summing over all places gives
//     h_{-K}(a, b) = 2 h(a) + 2 h(b) exactly.
// The sweep evaluates the height inequality with
//   RHS = [ (delta + eps) h_{-pi*K} + sum_{v not in S} lambda_{-pi*K},v ]
//         / ((1 + delta + eps)(r - 1)),
// the sign convention under which lambda terms of the pulled-back canonical
// divisor enter the bound; it makes the right side nonnegative, so coprime
// pairs (LHS = 0) can never violate it.

#pragma once

#include "toric/gcd_bound.hpp"
#include "toric/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

namespace toric::heights {

struct Place {
    bool infinite = false;
    Int p = 0;  // prime when finite

    static Place inf() { return Place{true, 0}; }
    static Place finite(Int prime);

    friend bool operator==(const Place&, const Place&) = default;
};

/// An exact value log(arg) with arg a positive rational.
struct LogValue {
    Rat arg = 1;

    double value() const;
    friend bool operator==(const LogValue&, const LogValue&) = default;
};

/// sum_k mult_k log(p_k) + log(infinite_factor), all parts exact.
struct FactoredLog {
    std::vector<std::pair<Int, int>> finite;  // (prime, multiplicity), ascending
    Rat infinite_factor = 1;                  // >= 1

    Rat total_arg() const;
    double value() const;
    bool is_zero() const { return finite.empty() && infinite_factor == 1; }
    friend bool operator==(const FactoredLog&, const FactoredLog&) = default;
};

/// Prime factorization of |n|, ascending.  Throws ZeroInput on 0.
std::vector<std::pair<Int, int>> factor(const Int& n);

/// ord_p of a nonzero rational (numerator minus denominator valuation).
int ord_p(const Rat& x, const Int& p);

/// Primes dividing the numerator or denominator of either argument.
std::vector<Int> support_primes(const Rat& a, const Rat& b);

/// log gcd(a, b) for nonzero integers, in factored form.
FactoredLog log_gcd(const Int& a, const Int& b);

/// Generalized gcd height of a pair of nonzero rationals.
FactoredLog h_gcd(const Rat& alpha, const Rat& beta);

/// Weil height of [1 : alpha] on P1: log max(|num|, |den|).
LogValue height_p1(const Rat& alpha);

/// lambda_{E,v}: the local gcd contribution at one place.
LogValue weil_exceptional(const Place& v, const Rat& alpha, const Rat& beta);

/// lambda for the anticanonical snc divisor at one place:
/// |log|alpha|_v| + |log|beta|_v|.
LogValue weil_anticanonical(const Place& v, const Rat& alpha, const Rat& beta);

/// Exact product-formula check: prod_v |x|_v = 1.
bool product_formula_holds(const Rat& x);

struct SweepParams {
    int grid = 50;                // all pairs (alpha, beta) in [1..grid]^2
    int random_samples = 0;       // extra seeded random rational pairs
    std::uint64_t seed = 1;
    std::vector<Place> excluded;  // the finite place set S
};

struct SweepRow {
    Rat alpha;
    Rat beta;
    double lhs = 0;
    double rhs = 0;
    double excess = 0;
    bool z_suspect = false;
};

struct SweepReport {
    int grid = 0;
    Rat epsilon;
    Rat delta;
    int r = 2;
    std::size_t samples = 0;
    double max_excess = 0;
    double max_ratio = 0;  // max lhs/rhs over rows with rhs > 0
    std::size_t coprime_count = 0;
    std::size_t coprime_violations = 0;  // coprime rows with rhs < 0 (must stay 0)
    std::size_t flagged_count = 0;
    std::map<int, std::size_t> excess_histogram;  // bin = floor(excess / 0.5)
    std::vector<SweepRow> rows;
};

/// Evaluates the inequality over the full integer grid plus optional seeded
/// random rational pairs.  This is a characterization, not a proof check:
/// the theorem's O(1) and exceptional set are not computable, so the report
/// records excess statistics for boundedness analysis across nested grids.
/// Rows whose lhs/rhs ratio comes within 5% of the sweep maximum are
/// flagged as exceptional-set suspects (the diagonal-like loci).
/// Throws EmptyGrid when grid < 1.
SweepReport sweep_inequality(const GcdBoundReport& bound, const SweepParams& params);

/// CSV columns: alpha,beta,lhs,rhs,excess,z_suspect
void write_sweep_csv(std::ostream& os, const SweepReport& report);

}  // namespace toric::heights
