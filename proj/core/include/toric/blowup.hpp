// Star subdivisions of smooth fans: the toric model of blowing up a
// torus-invariant smooth center.
//
// The subdivision at a cone sigma inserts the ray through the sum of
// sigma's primitive generators and replaces every maximal cone containing
// sigma by its star over the new ray.  The refined fan keeps smoothness and
// completeness; both are re-validated through make_fan.
//
// Convention: the new ray sits at index 0 of the refined fan and the
// original rays follow in their original order (ray i of the base fan is
// ray i+1 of the refined fan).
//
// Pullback uses the support-function rule: old coefficients are unchanged
// and the coefficient on the new ray is the sum of the divisor's
// coefficients over the center's rays.  Consequently P_{pullback(D)} = P_D
// as subsets of M_R: the new inequality is the sum of the center rows.

#pragma once

#include "toric/divisor.hpp"
#include "toric/fan.hpp"

#include <vector>

namespace toric {

struct BlowupMap {
    Fan source;  // refined fan
    Fan target;  // base fan
    Cone center;                           // ray indices of the base fan, sorted
    int new_ray_index = 0;                 // index of the exceptional ray in `source`
    std::vector<int> ray_correspondence;   // base ray i -> source ray index
    int codim = 0;                         // r = number of center rays
};

/// Errors: NotACone (center is not a cone of the fan), CodimensionOne
/// (center has a single ray; the subdivision would be the identity).
BlowupMap star_subdivision(const Fan& fan, const Cone& center);

/// The prime divisor of the new ray, on the source fan.
ToricDivisor exceptional_divisor(const BlowupMap& map);

/// Support-function pullback of a divisor on the target fan.
/// Linear: pullback(aD + bD') = a pullback(D) + b pullback(D').
ToricDivisor pullback(const BlowupMap& map, const ToricDivisor& d);

/// K_{X'} = pullback(K_X) + (r-1) E, coefficientwise.
bool canonical_relation_check(const BlowupMap& map);

/// A finite composition of star subdivisions.  maps[0] refines the base
/// fan, maps[k+1] refines maps[k].source.  An empty chain is the identity
/// on its base fan.
class BlowupChain {
public:
    explicit BlowupChain(Fan base);
    explicit BlowupChain(std::vector<BlowupMap> maps);

    const Fan& target() const { return target_; }
    const Fan& source() const { return maps_.empty() ? target_ : maps_.back().source; }
    std::size_t size() const { return maps_.size(); }
    const std::vector<BlowupMap>& maps() const { return maps_; }

    /// Pullback of a divisor on the base fan through the whole chain.
    ToricDivisor pullback_through(const ToricDivisor& d) const;

    /// Exceptional divisor of maps[k], pulled back through the later maps
    /// so that it lives on the final source fan.
    ToricDivisor exceptional_on_source(std::size_t k) const;

private:
    Fan target_;
    std::vector<BlowupMap> maps_;
};

}  // namespace toric
