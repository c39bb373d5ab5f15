// JSON serialization with stable key order and canonical rational strings.
//
// Schemas:
//   fan      {"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]]}
//   divisor  {"coeffs": ["1", "0", "-1/2", "0"]}           (indexed by fan ray order)
// Rationals serialize as "p/q", or "n" when the denominator is 1.  Floats
// appear only in the arithmetic sweep output and carry a "_float" key
// suffix.

#pragma once

#include "toric/blowup.hpp"
#include "toric/divisor.hpp"
#include "toric/errors.hpp"
#include "toric/fan.hpp"
#include "toric/gcd_bound.hpp"
#include "toric/heights.hpp"
#include "toric/piecewise.hpp"
#include "toric/polytope.hpp"
#include "toric/volume_beta.hpp"

namespace toric {

OJson fan_to_json(const Fan& fan);
Fan fan_from_json(const OJson& j);  // InvalidJson on malformed input

OJson divisor_to_json(const ToricDivisor& d);
ToricDivisor divisor_from_json(const Fan& fan, const OJson& j);

OJson polytope_to_json(const Polytope& p);  // H-rep, vertices, volume, lattice points

OJson piecewise_to_json(const PiecewisePolynomial& f);

OJson beta_result_to_json(const BetaResult& r);

OJson blowup_to_json(const BlowupMap& map);

OJson hypotheses_to_json(const HypothesesReport& rep);

OJson gcd_report_to_json(const GcdBoundReport& rep);

OJson sweep_report_to_json(const heights::SweepReport& rep);

/// Canonical float formatting (%.12g) for deterministic output.
std::string float_str(double x);

}  // namespace toric
