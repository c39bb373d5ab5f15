// Exact Fourier-Motzkin elimination for systems of linear inequalities
//   a . x >= c
// over the rationals.  Chosen over a simplex LP for feasibility and
// 1-variable projection questions: no pivoting rules, no degeneracy
// handling, exact by construction.  The systems here stay tiny, so the
// worst-case blowup never materializes.

#pragma once

#include "toric/linalg.hpp"
#include "toric/rational.hpp"

#include <optional>
#include <vector>

namespace toric {

struct LinIneq {
    RatVec coeffs;  // length = number of variables
    Rat rhs;        // coeffs . x >= rhs
};

/// Eliminates variable `var`, returning an equivalent system on the same
/// variable indexing (column `var` becomes zero in every row).
std::vector<LinIneq> fm_eliminate(std::vector<LinIneq> rows, std::size_t var);

/// Exact feasibility of { x : coeffs . x >= rhs for all rows }.
bool fm_feasible(std::vector<LinIneq> rows, std::size_t nvars);

struct FmInterval {
    bool feasible = false;
    std::optional<Rat> lower;  // nullopt = unbounded below
    std::optional<Rat> upper;  // nullopt = unbounded above
};

/// Projects the solution set onto variable `keep` (a closed interval, or
/// empty).  Half-open results are reported with the missing endpoint absent.
FmInterval fm_project_to(std::vector<LinIneq> rows, std::size_t nvars, std::size_t keep);

}  // namespace toric
