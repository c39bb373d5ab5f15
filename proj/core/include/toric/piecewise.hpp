// Exact univariate polynomials and piecewise polynomials over Rat.
//
// PiecewisePolynomial carries the volume function t -> Vol(P(t)) on
// [0, gamma_eff]: strictly increasing breakpoints, one polynomial piece per
// interval, values agreeing exactly at interior breakpoints.  The one
// degenerate shape, domain {0} with a single constant piece, covers the
// gamma_eff = 0 boundary case; its integral is 0.

#pragma once

#include "toric/rational.hpp"

#include <vector>

namespace toric {

class Polynomial {
public:
    Polynomial() = default;                       // zero polynomial
    explicit Polynomial(std::vector<Rat> coeffs);  // constant term first

    Rat eval(const Rat& t) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;

    /// Exact interpolation through distinct nodes (t_i, y_i).
    static Polynomial lagrange(const std::vector<std::pair<Rat, Rat>>& nodes);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rat> coeffs_;  // normalized: no trailing zeros
};

class PiecewisePolynomial {
public:
    /// breakpoints strictly increasing with pieces.size() + 1 entries, or
    /// the degenerate single-point domain {0} with exactly one piece.
    /// Validates exact continuity at interior breakpoints.
    PiecewisePolynomial(std::vector<Rat> breakpoints, std::vector<Polynomial> pieces);

    const std::vector<Rat>& breakpoints() const { return breaks_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    Rat domain_end() const { return breaks_.back(); }
    bool degenerate() const { return breaks_.size() == 1; }

    /// Value at t in [0, domain_end()].
    Rat eval(const Rat& t) const;

    /// Exact integral over the whole domain.
    Rat integrate() const;

private:
    std::vector<Rat> breaks_;
    std::vector<Polynomial> pieces_;
};

}  // namespace toric
