// toricgcd: exact toric geometry and gcd-height bounds from the command
// line.
//
// Subcommands: fan-validate, polytope, blowup, beta, gamma-eff, gcd-bound,
// gcd-check, examples.  All structured output is JSON on stdout with stable
// key order and rationals as "p/q" strings; errors go to stderr as
// {"code": ..., "message": ..., ...} with exit code 1, usage problems exit 2.
//
// Fans are JSON files ({"dim", "rays", "max_cones"}) or the builtin names
// p2, p1xp1, hirzebruch:<r>.  Divisors are selected by a small grammar
// relative to the working fan (the blown-up fan when --blowup-center is
// given):
//   anticanonical | canonical | prime:<ray> | pullback:<ray> | @coeffs.json
//   | pullback@coeffs.json
// where pullback forms refer to the blow-up's target fan.

#include "toric/blowup.hpp"
#include "toric/divisor.hpp"
#include "toric/errors.hpp"
#include "toric/fan.hpp"
#include "toric/gcd_bound.hpp"
#include "toric/heights.hpp"
#include "toric/json_io.hpp"
#include "toric/polytope.hpp"
#include "toric/volume_beta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace toric;

namespace {

OJson load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_toric("InvalidJson", "cannot open file", {{"path", path}});
    try {
        return OJson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw_toric("InvalidJson", std::string("JSON parse error: ") + e.what(),
                    {{"path", path}});
    }
}

Fan resolve_fan(const std::string& arg) {
    if (arg == "p2") return standard_fan(Surface::P2);
    if (arg == "p1xp1") return standard_fan(Surface::P1xP1);
    if (arg.rfind("hirzebruch:", 0) == 0)
        return hirzebruch_fan(std::stoi(arg.substr(11)));
    return fan_from_json(load_json(arg));
}

Cone parse_center(const std::string& arg) {
    Cone c;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            c.ray_indices.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw_toric("NotACone", "center must be a comma-separated list of ray indices",
                        {{"center", arg}});
        }
    }
    if (c.ray_indices.empty())
        throw_toric("NotACone", "empty center", {{"center", arg}});
    return c;
}

struct Workspace {
    Fan base;
    std::optional<BlowupMap> map;  // present when --blowup-center was given

    const Fan& working() const { return map ? map->source : base; }
};

Workspace make_workspace(const std::string& fan_arg, const std::string& center_arg) {
    Workspace ws{resolve_fan(fan_arg), std::nullopt};
    if (!center_arg.empty()) ws.map = star_subdivision(ws.base, parse_center(center_arg));
    return ws;
}

ToricDivisor resolve_divisor(const Workspace& ws, const std::string& spec) {
    const Fan& fan = ws.working();
    if (spec == "anticanonical") return anticanonical_divisor(fan);
    if (spec == "canonical") return canonical_divisor(fan);
    if (spec == "exceptional") {
        if (!ws.map)
            throw_toric("FanMismatch", "exceptional divisor needs --blowup-center");
        return exceptional_divisor(*ws.map);
    }
    if (spec.rfind("prime:", 0) == 0)
        return prime_divisor(fan, std::stoi(spec.substr(6)));
    if (spec.rfind("pullback:", 0) == 0) {
        const int ray = std::stoi(spec.substr(9));
        if (!ws.map) return prime_divisor(fan, ray);  // identity model
        return pullback(*ws.map, prime_divisor(ws.base, ray));
    }
    if (spec.rfind("pullback@", 0) == 0) {
        if (!ws.map)
            throw_toric("FanMismatch", "pullback@ needs --blowup-center");
        return pullback(*ws.map, divisor_from_json(ws.base, load_json(spec.substr(9))));
    }
    if (spec.rfind('@', 0) == 0)
        return divisor_from_json(fan, load_json(spec.substr(1)));
    throw_toric("InvalidJson", "unrecognized divisor spec", {{"spec", spec}});
}

void emit(const OJson& j) { std::cout << j.dump(2) << "\n"; }

void write_svg(const std::string& path, const Polytope& p) {
    if (p.dim() != 2)
        throw_toric("InvalidJson", "SVG emission is limited to 2-d polytopes");
    std::vector<std::pair<double, double>> pts;
    for (const RatVec& v : p.vertices())
        pts.emplace_back(rat_to_double(v[0]), rat_to_double(v[1]));
    if (pts.empty())
        throw_toric("InvalidJson", "nothing to draw: the polytope is empty");
    double cx = 0, cy = 0;
    for (auto& [x, y] : pts) {
        cx += x;
        cy += y;
    }
    cx /= pts.size();
    cy /= pts.size();
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        return std::atan2(a.second - cy, a.first - cx) <
               std::atan2(b.second - cy, b.first - cx);
    });
    double lo_x = pts[0].first, hi_x = pts[0].first, lo_y = pts[0].second, hi_y = pts[0].second;
    for (auto& [x, y] : pts) {
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    }
    const double margin = 0.1 * std::max(hi_x - lo_x, hi_y - lo_y) + 0.1;
    std::ofstream out(path);
    if (!out) throw_toric("InvalidJson", "cannot write SVG file", {{"path", path}});
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
        << float_str(lo_x - margin) << " " << float_str(lo_y - margin) << " "
        << float_str(hi_x - lo_x + 2 * margin) << " " << float_str(hi_y - lo_y + 2 * margin)
        << "\">\n  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << " ";
        // flip y so the lattice is drawn with the usual orientation
        out << float_str(pts[i].first) << "," << float_str(-pts[i].second + lo_y + hi_y);
    }
    out << "\" fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"0.05\"/>\n</svg>\n";
}

AnticanonicalDecomposition resolve_decomposition(const Fan& base, const std::string& spec) {
    if (spec == "primes") {
        std::vector<ToricDivisor> ds;
        for (std::size_t i = 0; i < base.rays.size(); ++i)
            ds.push_back(prime_divisor(base, static_cast<int>(i)));
        return make_decomposition(base, std::move(ds));
    }
    const OJson j = load_json(spec);
    if (!j.is_object() || !j.contains("divisors") || !j["divisors"].is_array())
        throw_toric("InvalidJson", "decomposition JSON needs a divisors array");
    std::vector<ToricDivisor> ds;
    for (const OJson& dj : j["divisors"]) ds.push_back(divisor_from_json(base, dj));
    return make_decomposition(base, std::move(ds));
}

std::vector<heights::Place> parse_places(const std::string& arg) {
    std::vector<heights::Place> out;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "inf" || tok == "infinity") out.push_back(heights::Place::inf());
        else out.push_back(heights::Place::finite(Int(tok)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// example reproductions

OJson example_p2_point(int a_only) {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P2), Cone{{0, 2}});
    OJson runs = OJson::array();
    std::vector<int> as = a_only > 0 ? std::vector<int>{a_only} : std::vector<int>{1, 2, 3};
    for (int a : as) {
        const ToricDivisor L = pullback(map, Rat(a) * prime_divisor(map.target, 1));
        const BetaResult r = beta(L, exceptional_divisor(map));
        OJson run;
        run["a"] = a;
        run["area"] = rat_to_string(r.volume_L);
        run["expected_area"] = rat_to_string(Rat(a * a, 2));
        run["gamma_eff"] = rat_to_string(r.gamma_eff);
        run["expected_gamma_eff"] = rat_to_string(Rat(a));
        run["pieces"] = piecewise_to_json(r.volume_function)["pieces"];
        run["beta"] = rat_to_string(r.beta);
        run["expected_beta"] = rat_to_string(Rat(2 * a, 3));
        run["match"] = (r.beta == Rat(2 * a, 3) && r.gamma_eff == a &&
                        r.volume_L == Rat(a * a, 2));
        runs.push_back(std::move(run));
    }
    OJson j;
    j["example"] = "p2-point";
    j["description"] = "projective plane blown up at a torus-fixed point; "
                       "expected order of vanishing of O(a) along E";
    j["runs"] = std::move(runs);
    return j;
}

OJson example_p1xp1_point(int a, int b) {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
    const ToricDivisor L = pullback(map, Rat(a) * prime_divisor(map.target, 2) +
                                             Rat(b) * prime_divisor(map.target, 3));
    const BetaResult r = beta(L, exceptional_divisor(map));
    OJson j;
    j["example"] = "p1xp1-point";
    j["a"] = a;
    j["b"] = b;
    j["area"] = rat_to_string(r.volume_L);
    j["expected_area"] = rat_to_string(Rat(a) * Rat(b));
    j["gamma_eff"] = rat_to_string(r.gamma_eff);
    j["expected_gamma_eff"] = rat_to_string(Rat(a + b));
    j["pieces"] = piecewise_to_json(r.volume_function)["pieces"];
    j["beta"] = rat_to_string(r.beta);
    j["expected_beta"] = rat_to_string(Rat(a + b, 2));
    j["match"] = (r.beta == Rat(a + b, 2) && r.gamma_eff == a + b);
    return j;
}

OJson example_p1xp1_gcd(const Rat& epsilon) {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
    std::vector<ToricDivisor> ds;
    for (int i = 0; i < 4; ++i) ds.push_back(prime_divisor(map.target, i));
    const auto decomp = make_decomposition(map.target, std::move(ds));

    const ToricDivisor antican = anticanonical_divisor(map.source);
    OJson j;
    j["example"] = "p1xp1-gcd";
    j["anticanonical_area"] = rat_to_string(polytope_of_divisor(antican).volume());
    j["expected_anticanonical_area"] = "7/2";
    j["anticanonical_volume"] = rat_to_string(volume_of_divisor(antican));
    j["expected_anticanonical_volume"] = "7";

    const GcdBoundReport rep = bound_report(map, decomp, epsilon);
    j["per_divisor_betas"] = OJson::array();
    for (const Rat& bt : rep.per_divisor_betas) j["per_divisor_betas"].push_back(rat_to_string(bt));
    j["expected_beta"] = "19/21";
    j["gamma"] = rat_to_string(rep.gamma);
    j["expected_gamma"] = "21/19";
    j["delta"] = rat_to_string(rep.delta);
    j["expected_delta"] = "2/19";
    j["epsilon"] = rat_to_string(epsilon);
    j["coeff_height"] = rat_to_string(rep.coeff_height);
    j["coeff_weil"] = rat_to_string(rep.coeff_weil);
    const GcdBoundReport formal = bound_report(map, decomp, Rat(0));
    j["coeff_height_at_formal_zero"] = rat_to_string(formal.coeff_height);
    j["expected_coeff_height_at_formal_zero"] = "2/21";
    j["report"] = gcd_report_to_json(rep);
    bool match = rep.gamma == Rat(21, 19) && rep.delta == Rat(2, 19) &&
                 formal.coeff_height == Rat(2, 21);
    for (const Rat& bt : rep.per_divisor_betas) match = match && bt == Rat(19, 21);
    j["match"] = match;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric geometry: divisor polytopes, blow-ups, volume "
                 "functions, asymptotic volume constants, gcd height bounds"};
    app.require_subcommand(1);

    std::string fan_arg, center_arg, blowup_center_arg, l_spec, f_spec = "exceptional";
    std::string divisor_spec = "anticanonical", svg_path, decomposition_arg = "primes";
    std::string epsilon_arg = "1/100", places_arg = "inf", csv_path, example_name;
    int grid = 50, random_samples = 0, example_a = 0, example_b = 0;
    std::uint64_t seed = 1;

    auto* fan_validate = app.add_subcommand("fan-validate", "validate a fan description");
    fan_validate->add_option("--fan", fan_arg, "fan JSON file or builtin name")->required();

    auto* polytope_cmd = app.add_subcommand("polytope", "divisor polytope data");
    polytope_cmd->add_option("--fan", fan_arg)->required();
    polytope_cmd->add_option("--blowup-center", blowup_center_arg,
                             "comma-separated ray indices to blow up first");
    polytope_cmd->add_option("--divisor", divisor_spec, "divisor spec (default anticanonical)");
    polytope_cmd->add_option("--svg", svg_path, "write the 2-d polytope as SVG");

    auto* blowup_cmd = app.add_subcommand("blowup", "star subdivision at a cone");
    blowup_cmd->add_option("--fan", fan_arg)->required();
    blowup_cmd->add_option("--center", center_arg, "comma-separated ray indices")->required();

    auto* beta_cmd = app.add_subcommand("beta", "asymptotic volume constant of (L, F)");
    beta_cmd->add_option("--fan", fan_arg)->required();
    beta_cmd->add_option("--blowup-center", blowup_center_arg);
    beta_cmd->add_option("--L", l_spec, "big divisor spec")->required();
    beta_cmd->add_option("--F", f_spec, "effective divisor spec (default exceptional)");

    auto* gamma_cmd = app.add_subcommand("gamma-eff", "pseudoeffective threshold of (L, F)");
    gamma_cmd->add_option("--fan", fan_arg)->required();
    gamma_cmd->add_option("--blowup-center", blowup_center_arg);
    gamma_cmd->add_option("--L", l_spec)->required();
    gamma_cmd->add_option("--F", f_spec);

    auto* bound_cmd = app.add_subcommand("gcd-bound", "height-bound constants for a blow-up");
    bound_cmd->add_option("--fan", fan_arg)->required();
    bound_cmd->add_option("--center", center_arg)->required();
    bound_cmd->add_option("--decomposition", decomposition_arg,
                          "decomposition JSON file, or 'primes' for all prime divisors");
    bound_cmd->add_option("--epsilon", epsilon_arg, "epsilon >= 0 as p/q (default 1/100)");

    auto* check_cmd = app.add_subcommand(
        "gcd-check", "empirical sweep of the gcd height inequality on the quadric instance");
    check_cmd->add_option("--grid", grid, "integer grid side (default 50)");
    check_cmd->add_option("--epsilon", epsilon_arg);
    check_cmd->add_option("--places", places_arg, "excluded place set S, e.g. inf or inf,2,3");
    check_cmd->add_option("--seed", seed);
    check_cmd->add_option("--random-samples", random_samples,
                          "extra seeded random rational pairs");
    check_cmd->add_option("--csv", csv_path, "write per-sample rows as CSV");

    auto* examples_cmd = app.add_subcommand("examples", "golden worked examples");
    examples_cmd->add_option("name", example_name, "p2-point | p1xp1-point | p1xp1-gcd")
        ->required();
    examples_cmd->add_option("--a", example_a);
    examples_cmd->add_option("--b", example_b);
    examples_cmd->add_option("--epsilon", epsilon_arg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        OJson err;
        err["code"] = "UsageError";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        if (*fan_validate) {
            const Fan fan = resolve_fan(fan_arg);
            OJson j;
            j["valid"] = true;
            j["smooth"] = is_smooth(fan);
            j["fan"] = fan_to_json(fan);
            emit(j);
        } else if (*polytope_cmd) {
            const Workspace ws = make_workspace(fan_arg, blowup_center_arg);
            const ToricDivisor d = resolve_divisor(ws, divisor_spec);
            const Polytope p = polytope_of_divisor(d);
            OJson j = polytope_to_json(p);
            j["volume_graded"] = rat_to_string(volume_of_divisor(d));
            if (!svg_path.empty()) {
                write_svg(svg_path, p);
                j["svg"] = svg_path;
            }
            emit(j);
        } else if (*blowup_cmd) {
            const Fan fan = resolve_fan(fan_arg);
            const BlowupMap map = star_subdivision(fan, parse_center(center_arg));
            emit(blowup_to_json(map));
        } else if (*beta_cmd || *gamma_cmd) {
            const Workspace ws = make_workspace(fan_arg, blowup_center_arg);
            const ToricDivisor L = resolve_divisor(ws, l_spec);
            const ToricDivisor F = resolve_divisor(ws, f_spec);
            if (*gamma_cmd) {
                OJson j;
                j["gamma_eff"] = rat_to_string(pseudoeffective_threshold(L, F));
                emit(j);
            } else {
                emit(beta_result_to_json(beta(L, F)));
            }
        } else if (*bound_cmd) {
            const Fan fan = resolve_fan(fan_arg);
            const BlowupMap map = star_subdivision(fan, parse_center(center_arg));
            const auto decomp = resolve_decomposition(fan, decomposition_arg);
            emit(gcd_report_to_json(bound_report(map, decomp, rat_from_string(epsilon_arg))));
        } else if (*check_cmd) {
            const BlowupMap map =
                star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
            std::vector<ToricDivisor> ds;
            for (int i = 0; i < 4; ++i) ds.push_back(prime_divisor(map.target, i));
            const GcdBoundReport rep = bound_report(
                map, make_decomposition(map.target, std::move(ds)), rat_from_string(epsilon_arg));
            heights::SweepParams params;
            params.grid = grid;
            params.random_samples = random_samples;
            params.seed = seed;
            params.excluded = parse_places(places_arg);
            const heights::SweepReport sweep = heights::sweep_inequality(rep, params);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) throw_toric("InvalidJson", "cannot write CSV", {{"path", csv_path}});
                heights::write_sweep_csv(csv, sweep);
            }
            OJson j = sweep_report_to_json(sweep);
            if (!csv_path.empty()) j["csv"] = csv_path;
            emit(j);
        } else if (*examples_cmd) {
            if (example_name == "p2-point") emit(example_p2_point(example_a));
            else if (example_name == "p1xp1-point")
                emit(example_p1xp1_point(example_a > 0 ? example_a : 1,
                                         example_b > 0 ? example_b : 1));
            else if (example_name == "p1xp1-gcd")
                emit(example_p1xp1_gcd(rat_from_string(epsilon_arg)));
            else
                throw_toric("UnknownExample", "no such example", {{"name", example_name}});
        }
    } catch (const ToricError& e) {
        std::cerr << e.to_json().dump() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        OJson err;
        err["code"] = "InvalidJson";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        OJson err;
        err["code"] = "InternalError";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
