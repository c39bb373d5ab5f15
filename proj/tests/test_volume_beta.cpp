#include "toric/volume_beta.hpp"

#include "toric/blowup.hpp"
#include "toric/errors.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace toric;

namespace {

struct Family {
    ToricDivisor L;
    ToricDivisor F;
};

// pullback of a O(a) to the plane blown up at a torus-fixed point, against E
Family p2_family(int a) {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P2), Cone{{0, 2}});
    return {pullback(map, Rat(a) * prime_divisor(map.target, 1)), exceptional_divisor(map)};
}

// a pi*D3 + b pi*D4 on the blown-up quadric, against E
Family quadric_family(int a, int b) {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
    const ToricDivisor d = Rat(a) * prime_divisor(map.target, 2) +
                           Rat(b) * prime_divisor(map.target, 3);
    return {pullback(map, d), exceptional_divisor(map)};
}

// -K of the blown-up quadric against pi*D_i
Family del_pezzo_family(int i) {
    const BlowupMap map = star_subdivision(standard_fan(Surface::P1xP1), Cone{{1, 2}});
    return {anticanonical_divisor(map.source), pullback(map, prime_divisor(map.target, i))};
}

Polynomial poly(std::vector<Rat> coeffs) { return Polynomial(std::move(coeffs)); }

}  // namespace

TEST_CASE("pseudoeffective thresholds of the worked families") {
    for (int i = 0; i < 4; ++i) {
        const Family f = del_pezzo_family(i);
        CHECK(pseudoeffective_threshold(f.L, f.F) == 2);
    }
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 7}}) {
        const Family f = quadric_family(a, b);
        CHECK(pseudoeffective_threshold(f.L, f.F) == a + b);
    }
    for (int a : {1, 2, 5}) {
        const Family f = p2_family(a);
        CHECK(pseudoeffective_threshold(f.L, f.F) == a);
    }
}

TEST_CASE("threshold rejects non-big L and non-effective F") {
    const Fan q = standard_fan(Surface::P1xP1);
    const ToricDivisor segment = prime_divisor(q, 2);  // Vol = 0
    try {
        pseudoeffective_threshold(segment, prime_divisor(q, 1));
        FAIL("expected NotBig");
    } catch (const ToricError& e) {
        CHECK(e.code() == "NotBig");
    }
    try {
        pseudoeffective_threshold(anticanonical_divisor(q), -prime_divisor(q, 1));
        FAIL("expected NotEffective");
    } catch (const ToricError& e) {
        CHECK(e.code() == "NotEffective");
    }
}

TEST_CASE("volume function of the del Pezzo instance has the two known pieces") {
    for (int i = 0; i < 4; ++i) {
        const Family f = del_pezzo_family(i);
        const PiecewisePolynomial vf = volume_function(f.L, f.F);
        REQUIRE(vf.breakpoints() == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
        CHECK(vf.pieces()[0] == poly({Rat(7, 2), Rat(-2)}));
        CHECK(vf.pieces()[1] == poly({Rat(4), Rat(-3), Rat(1, 2)}));
    }
}

TEST_CASE("volume function of the quadric families matches the three-case formula") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 1}, {3, 3}}) {
        const Family f = quadric_family(a, b);
        const PiecewisePolynomial vf = volume_function(f.L, f.F);
        // expected Euclidean pieces for a <= b:
        //   [0,a]   ab - t^2/2
        //   [a,b]   ab + a^2/2 - a t
        //   [b,a+b] (a+b-t)^2/2
        std::vector<Rat> breaks{Rat(0)};
        std::vector<Polynomial> pieces;
        pieces.push_back(poly({Rat(a * b), Rat(0), Rat(-1, 2)}));
        breaks.push_back(Rat(a));
        if (a != b) {
            pieces.push_back(poly({Rat(a * b) + Rat(a * a, 2), Rat(-a)}));
            breaks.push_back(Rat(b));
        }
        pieces.push_back(poly({Rat((a + b) * (a + b), 2), Rat(-(a + b)), Rat(1, 2)}));
        breaks.push_back(Rat(a + b));
        CHECK(vf.breakpoints() == breaks);
        CHECK(vf.pieces() == pieces);
    }
}

TEST_CASE("beta golden values") {
    for (int a : {1, 2, 3, 5}) {
        const Family f = p2_family(a);
        CHECK(beta(f.L, f.F).beta == Rat(2 * a, 3));
    }
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}, {3, 7}}) {
        const Family f = quadric_family(a, b);
        const BetaResult r = beta(f.L, f.F);
        CHECK(r.beta == Rat(a + b, 2));
        CHECK(r.volume_L == Rat(a * b));
    }
    for (int i = 0; i < 4; ++i) {
        const Family f = del_pezzo_family(i);
        const BetaResult r = beta(f.L, f.F);
        CHECK(r.beta == Rat(19, 21));
        CHECK(r.gamma_eff == 2);
        CHECK(r.volume_L == Rat(7, 2));
    }
}

TEST_CASE("a 3-fold check: blowing up a torus-fixed point of P^3") {
    const Fan p3 = projective_space_fan(3);
    const BlowupMap map = star_subdivision(p3, Cone{{0, 1, 2}});
    const ToricDivisor L = pullback(map, Rat(4) * prime_divisor(p3, 3));  // -K ~ 4H
    const BetaResult r = beta(L, exceptional_divisor(map));
    CHECK(r.gamma_eff == 4);
    CHECK(r.beta == 3);  // a - a/4 at a = 4
    REQUIRE(r.volume_function.breakpoints() == std::vector<Rat>{Rat(0), Rat(4)});
    // (64 - t^3) / 6
    CHECK(r.volume_function.pieces()[0] ==
          poly({Rat(32, 3), Rat(0), Rat(0), Rat(-1, 6)}));
}

TEST_CASE("degenerate families: L on the boundary of the effective cone") {
    const Fan q = standard_fan(Surface::P1xP1);
    const ToricDivisor segment = Rat(2) * prime_divisor(q, 2);  // P_L a segment
    // F cutting the segment instantly: gamma_eff = 0, single-point domain
    const PiecewisePolynomial stopped = volume_function(segment, prime_divisor(q, 1));
    CHECK(stopped.degenerate());
    CHECK(stopped.integrate() == 0);
    // F sliding along the segment: gamma_eff = 2 with zero volume throughout
    const PiecewisePolynomial sliding = volume_function(segment, prime_divisor(q, 2));
    CHECK_FALSE(sliding.degenerate());
    CHECK(sliding.domain_end() == 2);
    CHECK(sliding.integrate() == 0);
    try {
        beta(segment, prime_divisor(q, 2));
        FAIL("expected NotBig");
    } catch (const ToricError& e) {
        CHECK(e.code() == "NotBig");
    }
}

TEST_CASE("piecewise values equal exact polytope volumes at sampled points") {
    testsupport::Rng rng(2718);
    std::vector<Family> corpus;
    corpus.push_back(p2_family(2));
    corpus.push_back(quadric_family(1, 2));
    corpus.push_back(del_pezzo_family(3));
    for (int i = 0; i < 6; ++i) {
        const Fan fan = testsupport::random_smooth_fan(rng);
        const BlowupMap map = star_subdivision(fan, testsupport::random_center(fan, rng));
        corpus.push_back(Family{pullback(map, testsupport::random_big_divisor(fan, rng)),
                                exceptional_divisor(map)});
    }
    for (const Family& f : corpus) {
        const PiecewisePolynomial vf = volume_function(f.L, f.F);
        if (vf.degenerate()) continue;
        const Rat gamma = vf.domain_end();
        for (int s = 0; s < 20; ++s) {
            const Rat t = gamma * Rat(testsupport::pick(rng, 0, 1000), 1000);
            CHECK(vf.eval(t) == family_polytope(f.L, f.F, t).volume());
        }
        // monotonicity on a dyadic grid plus the breakpoints
        Rat prev = vf.eval(0);
        for (int s = 1; s <= 64; ++s) {
            const Rat t = gamma * Rat(s, 64);
            const Rat cur = vf.eval(t);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("beta stays within (0, gamma_eff] and is scale invariant") {
    testsupport::Rng rng(1618);
    int done = 0;
    while (done < 20) {
        const Fan fan = testsupport::random_smooth_fan(rng);
        const BlowupMap map = star_subdivision(fan, testsupport::random_center(fan, rng));
        const ToricDivisor L = pullback(map, testsupport::random_big_divisor(fan, rng));
        ToricDivisor F = exceptional_divisor(map);
        if (done % 3 == 1)
            F = pullback(map, testsupport::random_effective_divisor(fan, rng, 1));
        const BetaResult r = beta(L, F);
        CHECK(r.beta > 0);
        CHECK(r.beta <= r.gamma_eff);
        for (int k : {2, 3}) {
            const BetaResult rk = beta(Rat(k) * L, Rat(k) * F);
            CHECK(rk.beta == r.beta);
        }
        ++done;
    }
}

TEST_CASE("counting + Simpson oracle reproduces beta within 3 percent") {
    std::vector<Family> corpus;
    corpus.push_back(p2_family(2));
    corpus.push_back(quadric_family(1, 2));
    corpus.push_back(del_pezzo_family(3));
    for (const Family& f : corpus) {
        const BetaResult r = beta(f.L, f.F);
        const double gamma = rat_to_double(r.gamma_eff);
        const int k = 60;
        auto vol_est = [&](double t) {
            // snap t to a rational with a small denominator for exactness
            const Rat tr(static_cast<long long>(t * 720 + 0.5), 720);
            return testsupport::counting_volume(family_polytope(f.L, f.F, tr), k);
        };
        const double denom = vol_est(0.0);
        const double integral = testsupport::simpson(vol_est, 0.0, gamma, 24);
        const double approx = integral / denom;
        CHECK(std::abs(approx - rat_to_double(r.beta)) / rat_to_double(r.beta) < 0.03);
    }
}
