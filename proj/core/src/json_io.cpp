#include "toric/json_io.hpp"

#include <cstdio>

namespace toric {

namespace {

OJson rat_vec_json(const std::vector<Rat>& v) {
    OJson a = OJson::array();
    for (const Rat& r : v) a.push_back(rat_to_string(r));
    return a;
}

Rat rat_from_json(const OJson& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw_toric("InvalidJson", "expected a rational string");
}

}  // namespace

std::string float_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

OJson fan_to_json(const Fan& fan) {
    OJson j;
    j["dim"] = fan.dim;
    OJson rays = OJson::array();
    for (const LatticeVector& r : fan.rays) {
        OJson row = OJson::array();
        for (auto c : r) row.push_back(c);
        rays.push_back(std::move(row));
    }
    j["rays"] = std::move(rays);
    OJson cones = OJson::array();
    for (const Cone& c : fan.max_cones) {
        OJson row = OJson::array();
        for (int i : c.ray_indices) row.push_back(i);
        cones.push_back(std::move(row));
    }
    j["max_cones"] = std::move(cones);
    return j;
}

Fan fan_from_json(const OJson& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
        throw_toric("InvalidJson", "fan JSON needs dim, rays, max_cones");
    if (!j["dim"].is_number_integer())
        throw_toric("InvalidJson", "fan dim must be an integer");
    const int dim = j["dim"].get<int>();
    std::vector<LatticeVector> rays;
    for (const OJson& row : j["rays"]) {
        LatticeVector r;
        for (const OJson& c : row) {
            if (!c.is_number_integer())
                throw_toric("InvalidJson", "ray coordinates must be integers");
            r.push_back(c.get<std::int64_t>());
        }
        rays.push_back(std::move(r));
    }
    std::vector<Cone> cones;
    for (const OJson& row : j["max_cones"]) {
        Cone c;
        for (const OJson& i : row) {
            if (!i.is_number_integer())
                throw_toric("InvalidJson", "cone entries must be ray indices");
            c.ray_indices.push_back(i.get<int>());
        }
        cones.push_back(std::move(c));
    }
    return make_fan(dim, std::move(rays), std::move(cones));
}

OJson divisor_to_json(const ToricDivisor& d) {
    OJson j;
    j["coeffs"] = rat_vec_json(d.coeffs);
    return j;
}

ToricDivisor divisor_from_json(const Fan& fan, const OJson& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw_toric("InvalidJson", "divisor JSON needs a coeffs array");
    std::vector<Rat> coeffs;
    for (const OJson& c : j["coeffs"]) coeffs.push_back(rat_from_json(c));
    return make_divisor(fan, std::move(coeffs));
}

OJson polytope_to_json(const Polytope& p) {
    OJson j;
    j["dim"] = p.dim();
    OJson hs = OJson::array();
    for (const HalfSpace& h : p.halfspaces()) {
        OJson row;
        OJson n = OJson::array();
        for (auto c : h.normal) n.push_back(c);
        row["normal"] = std::move(n);
        row["offset"] = rat_to_string(h.offset);
        hs.push_back(std::move(row));
    }
    j["halfspaces"] = std::move(hs);
    OJson verts = OJson::array();
    for (const RatVec& v : p.vertices()) verts.push_back(rat_vec_json(v));
    j["vertices"] = std::move(verts);
    j["volume"] = rat_to_string(p.volume());
    OJson pts = OJson::array();
    const auto lattice = p.lattice_points();
    for (const auto& m : lattice) {
        OJson row = OJson::array();
        for (auto c : m) row.push_back(c);
        pts.push_back(std::move(row));
    }
    j["lattice_point_count"] = lattice.size();
    j["lattice_points"] = std::move(pts);
    return j;
}

OJson piecewise_to_json(const PiecewisePolynomial& f) {
    OJson j;
    j["breakpoints"] = rat_vec_json(f.breakpoints());
    OJson pieces = OJson::array();
    if (!f.degenerate()) {
        for (std::size_t i = 0; i < f.pieces().size(); ++i) {
            OJson piece;
            piece["interval"] = OJson::array(
                {rat_to_string(f.breakpoints()[i]), rat_to_string(f.breakpoints()[i + 1])});
            piece["coeffs"] = rat_vec_json(f.pieces()[i].coeffs());
            pieces.push_back(std::move(piece));
        }
    } else {
        OJson piece;
        piece["interval"] = OJson::array({"0", "0"});
        piece["coeffs"] = rat_vec_json(f.pieces().front().coeffs());
        pieces.push_back(std::move(piece));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

OJson beta_result_to_json(const BetaResult& r) {
    OJson j;
    j["beta"] = rat_to_string(r.beta);
    j["gamma_eff"] = rat_to_string(r.gamma_eff);
    j["volume_L"] = rat_to_string(r.volume_L);
    j["pieces"] = piecewise_to_json(r.volume_function)["pieces"];
    return j;
}

OJson blowup_to_json(const BlowupMap& map) {
    OJson j;
    j["source_fan"] = fan_to_json(map.source);
    j["target_fan"] = fan_to_json(map.target);
    OJson center = OJson::array();
    for (int i : map.center.ray_indices) center.push_back(i);
    j["center"] = std::move(center);
    j["codim"] = map.codim;
    j["new_ray_index"] = map.new_ray_index;
    OJson corr = OJson::array();
    for (int i : map.ray_correspondence) corr.push_back(i);
    j["ray_correspondence"] = std::move(corr);
    return j;
}

OJson hypotheses_to_json(const HypothesesReport& rep) {
    OJson j;
    j["anticanonical_ok"] = rep.anticanonical_ok;
    j["big"] = rep.big;
    j["anticanonical_volume"] = rat_to_string(rep.anticanonical_volume);
    OJson np = OJson::array();
    for (int i : rep.non_prime_pullbacks) np.push_back(i);
    j["non_prime_pullbacks"] = std::move(np);
    OJson pairs = OJson::array();
    for (const PairDiagnostic& d : rep.pairs) {
        OJson row;
        row["i"] = d.i;
        row["j"] = d.j;
        row["status"] = d.status;
        pairs.push_back(std::move(row));
    }
    j["pairs"] = std::move(pairs);
    j["all_verified"] = rep.all_verified;
    j["all_verified_or_assumed"] = rep.all_verified_or_assumed;
    return j;
}

OJson gcd_report_to_json(const GcdBoundReport& rep) {
    OJson j;
    j["gamma"] = rat_to_string(rep.gamma);
    j["delta"] = rat_to_string(rep.delta);
    j["r"] = rep.r;
    j["epsilon"] = rat_to_string(rep.epsilon);
    j["coeff_height"] = rat_to_string(rep.coeff_height);
    j["coeff_weil"] = rat_to_string(rep.coeff_weil);
    j["per_divisor_betas"] = rat_vec_json(rep.per_divisor_betas);
    j["betas_meet_del_pezzo_lower_bound"] = rep.betas_meet_del_pezzo_lower_bound;
    j["o1_constant"] = rep.o1_constant;
    j["exceptional_set"] = rep.exceptional_set;
    j["hypotheses"] = hypotheses_to_json(rep.hypotheses);
    return j;
}

OJson sweep_report_to_json(const heights::SweepReport& rep) {
    OJson j;
    j["grid"] = rep.grid;
    j["epsilon"] = rat_to_string(rep.epsilon);
    j["delta"] = rat_to_string(rep.delta);
    j["r"] = rep.r;
    j["samples"] = rep.samples;
    j["max_excess_float"] = float_str(rep.max_excess);
    j["max_ratio_float"] = float_str(rep.max_ratio);
    j["coprime_count"] = rep.coprime_count;
    j["coprime_violations"] = rep.coprime_violations;
    j["flagged_count"] = rep.flagged_count;
    OJson hist = OJson::array();
    for (const auto& [bin, count] : rep.excess_histogram) {
        OJson row;
        row["lo_float"] = float_str(bin * 0.5);
        row["hi_float"] = float_str((bin + 1) * 0.5);
        row["count"] = count;
        hist.push_back(std::move(row));
    }
    j["excess_histogram"] = std::move(hist);
    OJson flagged = OJson::array();
    for (const heights::SweepRow& row : rep.rows) {
        if (!row.z_suspect) continue;
        if (flagged.size() >= 25) break;
        OJson r;
        r["alpha"] = rat_to_string(row.alpha);
        r["beta"] = rat_to_string(row.beta);
        r["lhs_float"] = float_str(row.lhs);
        r["rhs_float"] = float_str(row.rhs);
        flagged.push_back(std::move(r));
    }
    j["flagged_examples"] = std::move(flagged);
    return j;
}

}  // namespace toric
