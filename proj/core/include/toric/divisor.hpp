// Torus-invariant divisors D = sum a_i D_i on a fan.
//
// Coefficients are rational so that R-divisors such as pullback(L) - t E at
// rational t live in the same type.  Divisors carry their fan by value; fans
// are tiny and structural equality doubles as the FanMismatch guard.
//
// Linear equivalence on a toric variety is a character shift:
// D + div(chi^m) has coefficients a_i + <m, v_i>.  Its polytope is the
// translate of P_D by m, so volumes and section counts are preserved.

#pragma once

#include "toric/fan.hpp"
#include "toric/polytope.hpp"
#include "toric/rational.hpp"

#include <optional>
#include <vector>

namespace toric {

struct ToricDivisor {
    Fan fan;
    std::vector<Rat> coeffs;  // one per fan ray, same indexing

    friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
};

ToricDivisor make_divisor(Fan fan, std::vector<Rat> coeffs);

/// The prime divisor D_i of a single ray.
ToricDivisor prime_divisor(const Fan& fan, int ray_index);

/// K_X = -sum D_i: every coefficient -1.
ToricDivisor canonical_divisor(const Fan& fan);

/// -K_X: every coefficient +1.
ToricDivisor anticanonical_divisor(const Fan& fan);

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);
ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b);
ToricDivisor operator*(const Rat& s, const ToricDivisor& d);
ToricDivisor operator-(const ToricDivisor& d);

bool is_effective(const ToricDivisor& d);
bool is_zero(const ToricDivisor& d);
bool is_prime(const ToricDivisor& d);

/// P_D = { m : <m, v_i> >= -a_i }.  Bounded whenever the fan is complete.
Polytope polytope_of_divisor(const ToricDivisor& d);

/// D + div(chi^m): a_i += <m, v_i>.  m may be rational (R-linear
/// equivalence); integral m realizes linear equivalence proper.
ToricDivisor shift_by_character(const ToricDivisor& d, const RatVec& m);

/// Vol_X(D) = dim! * Vol_{R^dim}(P_D).
Rat volume_of_divisor(const ToricDivisor& d);

/// Finds m with a = b + div(chi^m), i.e. a_i - b_i = <m, v_i> for all i.
/// Returns nullopt when the difference is not of that form.
std::optional<RatVec> linear_equivalence_character(const ToricDivisor& a,
                                                   const ToricDivisor& b);

/// Proper intersection of distinct prime torus-invariant divisors.  On a
/// complete smooth toric variety the supports of { D_{v_i} } meet exactly
/// when the rays span a cone of the fan, and in that case the local
/// equations form a regular sequence; the only failure mode left is a
/// repeated divisor.  Throws NotPrime unless every input is prime.
bool intersect_properly(const std::vector<ToricDivisor>& divisors);

/// An admissible torus-invariant flag: an ordered choice of dim rays
/// spanning a maximal cone.  Y_i = D_{ray_order[0]} cap ... cap
/// D_{ray_order[i-1]}.
struct TorusFlag {
    Fan fan;
    std::vector<int> ray_order;
};

TorusFlag make_flag(Fan fan, std::vector<int> ray_order);

/// Okounkov body of d with respect to the flag: the image of P_D under
/// u -> (<u, v_i>)_i over the flag rays, after the character shift that
/// trivializes d on the flag cone.  The map is unimodular on a smooth fan,
/// so the body has the same Euclidean volume as P_D.
Polytope okounkov_body(const ToricDivisor& d, const TorusFlag& flag);

}  // namespace toric
