// Exact rational scalars used throughout the library.
//
// All geometric quantities (halfspace offsets, vertex coordinates, volumes,
// divisor coefficients, piecewise-polynomial coefficients) are carried as
// arbitrary-precision rationals; no floating point enters any geometric
// computation.  Serialization is "p/q" with q > 0, or plain "n" when q = 1.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical string form: "p/q" (q > 0, reduced) or "n" when the
/// denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p/q" or "n".  Throws std::invalid_argument on malformed input
/// or zero denominator.
Rat rat_from_string(std::string_view s);

/// Largest integer <= r.
Int rat_floor(const Rat& r);

/// Smallest integer >= r.
Int rat_ceil(const Rat& r);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Lossy conversion for reporting only.
inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace toric
