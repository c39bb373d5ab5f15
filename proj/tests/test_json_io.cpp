#include "toric/json_io.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace toric;

TEST_CASE("fan JSON schema round trip") {
    const char* text = R"({"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]]})";
    const Fan fan = fan_from_json(OJson::parse(text));
    CHECK(fan == standard_fan(Surface::P2));
    const OJson out = fan_to_json(fan);
    CHECK(out["dim"] == 2);
    CHECK(out["rays"][2] == OJson::array({-1, -1}));
    CHECK(fan_from_json(out) == fan);
}

TEST_CASE("fan JSON surfaces make_fan errors") {
    const char* bad = R"({"dim": 2, "rays": [[2,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]]})";
    try {
        fan_from_json(OJson::parse(bad));
        FAIL("expected NonPrimitiveRay");
    } catch (const ToricError& e) {
        CHECK(e.code() == "NonPrimitiveRay");
        CHECK(e.to_json()["ray"] == OJson::array({2, 0}));
    }
    try {
        fan_from_json(OJson::parse(R"({"rays": []})"));
        FAIL("expected InvalidJson");
    } catch (const ToricError& e) {
        CHECK(e.code() == "InvalidJson");
    }
}

TEST_CASE("divisor JSON uses rational strings indexed by ray order") {
    const Fan q = standard_fan(Surface::P1xP1);
    const OJson j = OJson::parse(R"({"coeffs": ["1", "0", "-1/2", "0"]})");
    const ToricDivisor d = divisor_from_json(q, j);
    CHECK(d.coeffs == std::vector<Rat>{Rat(1), Rat(0), Rat(-1, 2), Rat(0)});
    CHECK(divisor_to_json(d)["coeffs"] == j["coeffs"]);
}

TEST_CASE("rational string canonical forms") {
    CHECK(rat_to_string(Rat(19, 21)) == "19/21");
    CHECK(rat_to_string(Rat(-7, 2)) == "-7/2");
    CHECK(rat_to_string(Rat(6, 3)) == "2");
    CHECK(rat_from_string("-19/21") == Rat(-19, 21));
    CHECK(rat_from_string("42") == 42);
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("x"));
    // round trip on random rationals
    testsupport::Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        const Rat r(testsupport::pick(rng, -5000, 5000), testsupport::pick(rng, 1, 999));
        CHECK(rat_from_string(rat_to_string(r)) == r);
    }
}

TEST_CASE("polytope and piecewise serialization shapes") {
    const Fan q = standard_fan(Surface::P1xP1);
    const OJson pj = polytope_to_json(polytope_of_divisor(anticanonical_divisor(q)));
    CHECK(pj["volume"] == "4");
    CHECK(pj["lattice_point_count"] == 9);
    CHECK(pj["vertices"].size() == 4);

    const PiecewisePolynomial pw({Rat(0), Rat(1), Rat(2)},
                                 {Polynomial({Rat(7, 2), Rat(-2)}),
                                  Polynomial({Rat(4), Rat(-3), Rat(1, 2)})});
    const OJson fj = piecewise_to_json(pw);
    CHECK(fj["pieces"].size() == 2);
    CHECK(fj["pieces"][0]["coeffs"] == OJson::array({"7/2", "-2"}));
    CHECK(fj["pieces"][1]["interval"] == OJson::array({"1", "2"}));
}

TEST_CASE("deterministic serialization of reports") {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
    std::vector<ToricDivisor> ds;
    for (int i = 0; i < 4; ++i) ds.push_back(prime_divisor(map.target, i));
    const GcdBoundReport rep = bound_report(map, make_decomposition(map.target, std::move(ds)), Rat(1, 100));
    const std::string once = gcd_report_to_json(rep).dump();
    const std::string twice = gcd_report_to_json(rep).dump();
    CHECK(once == twice);
    CHECK(once.find("\"gamma\":\"21/19\"") != std::string::npos);
    CHECK(once.find("\"delta\":\"2/19\"") != std::string::npos);
}
