#include "toric/blowup.hpp"

#include "toric/errors.hpp"

#include <algorithm>

namespace toric {

BlowupMap star_subdivision(const Fan& fan, const Cone& center) {
    Cone c = center;
    std::sort(c.ray_indices.begin(), c.ray_indices.end());
    c.ray_indices.erase(std::unique(c.ray_indices.begin(), c.ray_indices.end()),
                        c.ray_indices.end());
    if (c.ray_indices.size() != center.ray_indices.size())
        throw_toric("NotACone", "center has repeated ray indices");
    for (int idx : c.ray_indices)
        if (idx < 0 || idx >= static_cast<int>(fan.rays.size()))
            throw_toric("NotACone", "center ray index out of range", {{"index", idx}});
    if (c.ray_indices.size() < 2)
        throw_toric("CodimensionOne",
                    "center must have codimension >= 2; a one-ray center is the identity");
    if (!spans_cone(fan, c.ray_indices))
        throw_toric("NotACone", "center rays do not span a cone of the fan");

    LatticeVector new_ray(fan.dim, 0);
    for (int idx : c.ray_indices)
        for (int j = 0; j < fan.dim; ++j) new_ray[j] += fan.rays[idx][j];

    std::vector<LatticeVector> rays;
    rays.reserve(fan.rays.size() + 1);
    rays.push_back(new_ray);
    for (const LatticeVector& r : fan.rays) rays.push_back(r);

    auto to_source = [](int base_index) { return base_index + 1; };

    std::vector<Cone> cones;
    for (const Cone& sigma : fan.max_cones) {
        const bool contains_center =
            std::includes(sigma.ray_indices.begin(), sigma.ray_indices.end(),
                          c.ray_indices.begin(), c.ray_indices.end());
        if (!contains_center) {
            Cone shifted;
            for (int idx : sigma.ray_indices) shifted.ray_indices.push_back(to_source(idx));
            cones.push_back(std::move(shifted));
            continue;
        }
        // star: replace sigma by the cones (sigma \ {c}) + new ray, one per
        // center ray c
        for (int drop : c.ray_indices) {
            Cone star;
            star.ray_indices.push_back(0);
            for (int idx : sigma.ray_indices)
                if (idx != drop) star.ray_indices.push_back(to_source(idx));
            cones.push_back(std::move(star));
        }
    }

    BlowupMap map;
    map.target = fan;
    map.center = c;
    map.new_ray_index = 0;
    map.codim = static_cast<int>(c.ray_indices.size());
    map.ray_correspondence.resize(fan.rays.size());
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        map.ray_correspondence[i] = to_source(static_cast<int>(i));
    map.source = make_fan(fan.dim, std::move(rays), std::move(cones));
    return map;
}

ToricDivisor exceptional_divisor(const BlowupMap& map) {
    return prime_divisor(map.source, map.new_ray_index);
}

ToricDivisor pullback(const BlowupMap& map, const ToricDivisor& d) {
    if (!(d.fan == map.target))
        throw_toric("FanMismatch", "divisor does not live on the blow-up's target fan");
    std::vector<Rat> coeffs(map.source.rays.size(), Rat(0));
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
        coeffs[map.ray_correspondence[i]] = d.coeffs[i];
    Rat on_new = 0;
    for (int idx : map.center.ray_indices) on_new += d.coeffs[idx];
    coeffs[map.new_ray_index] = on_new;
    return make_divisor(map.source, std::move(coeffs));
}

bool canonical_relation_check(const BlowupMap& map) {
    const ToricDivisor lhs = canonical_divisor(map.source);
    const ToricDivisor rhs = pullback(map, canonical_divisor(map.target)) +
                             Rat(map.codim - 1) * exceptional_divisor(map);
    return lhs.coeffs == rhs.coeffs;
}

BlowupChain::BlowupChain(Fan base) : target_(std::move(base)) {}

BlowupChain::BlowupChain(std::vector<BlowupMap> maps) {
    if (maps.empty()) throw_toric("ChainMismatch", "empty chain needs a base fan");
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        if (!(maps[k + 1].target == maps[k].source))
            throw_toric("ChainMismatch",
                        "chain link target does not match previous source",
                        {{"link", k + 1}});
    }
    target_ = maps.front().target;
    maps_ = std::move(maps);
}

ToricDivisor BlowupChain::pullback_through(const ToricDivisor& d) const {
    if (!(d.fan == target_))
        throw_toric("FanMismatch", "divisor does not live on the chain's base fan");
    ToricDivisor cur = d;
    for (const BlowupMap& m : maps_) cur = pullback(m, cur);
    return cur;
}

ToricDivisor BlowupChain::exceptional_on_source(std::size_t k) const {
    if (k >= maps_.size())
        throw_toric("ChainMismatch", "chain stage out of range", {{"stage", k}});
    ToricDivisor e = exceptional_divisor(maps_[k]);
    for (std::size_t j = k + 1; j < maps_.size(); ++j) e = pullback(maps_[j], e);
    return e;
}

}  // namespace toric
