#include "toric/polytope.hpp"

#include "toric/errors.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <future>

using namespace toric;

namespace {

Polytope unit_square() {
    return Polytope(2, {{{1, 0}, Rat(0)}, {{0, 1}, Rat(0)}, {{-1, 0}, Rat(-1)}, {{0, -1}, Rat(-1)}});
}

// the del Pezzo pentagon: [-1,1]^2 cut by m1 + m2 >= -1
Polytope pentagon() {
    return Polytope(2, {{{1, 1}, Rat(-1)},
                        {{-1, 0}, Rat(-1)},
                        {{0, 1}, Rat(-1)},
                        {{1, 0}, Rat(-1)},
                        {{0, -1}, Rat(-1)}});
}

RatVec pt(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("unit square vertices, volume, lattice points") {
    const Polytope sq = unit_square();
    CHECK(sq.vertices() == std::vector<RatVec>{pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})});
    CHECK(sq.volume() == 1);
    CHECK(sq.lattice_points().size() == 4);
    CHECK(sq.scale(3).lattice_points().size() == 16);
    CHECK(sq.scale(3).volume() == 9);
}

TEST_CASE("pentagon of the blown-up quadric") {
    const Polytope p = pentagon();
    const std::vector<RatVec> expected = {pt({-1, 0}), pt({-1, 1}), pt({0, -1}),
                                          pt({1, -1}), pt({1, 1})};
    CHECK(p.vertices() == expected);
    CHECK(p.volume() == Rat(7, 2));
    CHECK(p.lattice_points().size() == 8);
    CHECK(p.scale(2).volume() == 14);
}

TEST_CASE("anticanonical triangle of the plane") {
    // m1 >= -1, m2 >= -1, -m1 - m2 >= -1
    const Polytope t(2, {{{1, 0}, Rat(-1)}, {{0, 1}, Rat(-1)}, {{-1, -1}, Rat(-1)}});
    CHECK(t.volume() == Rat(9, 2));
    CHECK(t.lattice_points().size() == 10);
}

TEST_CASE("unbounded and empty inputs") {
    const Polytope half(2, {{{1, 0}, Rat(0)}});
    CHECK_THROWS_WITH_AS(half.vertices(), "recession cone contains a nonzero vector",
                         ToricError);
    try {
        half.volume();
        FAIL("expected UnboundedPolytope");
    } catch (const ToricError& e) {
        CHECK(e.code() == "UnboundedPolytope");
    }

    const Polytope empty(1, {{{1}, Rat(1)}, {{-1}, Rat(0)}});
    CHECK(empty.vertices().empty());
    CHECK(empty.volume() == 0);
    CHECK(empty.lattice_points().empty());

    // empty trumps unbounded: an infeasible system with a nontrivial
    // recession cone is still the (bounded) empty set
    const Polytope empty2(2, {{{1, 0}, Rat(1)}, {{-1, 0}, Rat(0)}});
    CHECK(empty2.vertices().empty());
    CHECK(empty2.volume() == 0);
}

TEST_CASE("lower-dimensional polytopes have volume zero but are nonempty") {
    // segment m1 = 0, 0 <= m2 <= 1
    const Polytope seg(2, {{{1, 0}, Rat(0)}, {{-1, 0}, Rat(0)}, {{0, 1}, Rat(0)}, {{0, -1}, Rat(-1)}});
    CHECK(seg.volume() == 0);
    CHECK(seg.vertices().size() == 2);
    CHECK_FALSE(is_empty(seg.halfspaces(), 2));
}

TEST_CASE("is_empty on the moving pentagon family") {
    // offsets of -K - t*D4' at t: last row -m2 >= -1 + t
    auto at = [](const Rat& t) {
        return std::vector<HalfSpace>{{{1, 1}, Rat(-1)},
                                      {{-1, 0}, Rat(-1)},
                                      {{0, 1}, Rat(-1)},
                                      {{1, 0}, Rat(-1)},
                                      {{0, -1}, Rat(-1) + t}};
    };
    CHECK_FALSE(is_empty(at(Rat(2)), 2));
    CHECK(is_empty(at(Rat(5, 2)), 2));
    CHECK_FALSE(is_empty({}, 2));
}

TEST_CASE("3-d simplex volume and lattice count") {
    // m_i >= -1, -(m1+m2+m3) >= -1: anticanonical simplex of P^3
    const Polytope s(3, {{{1, 0, 0}, Rat(-1)},
                         {{0, 1, 0}, Rat(-1)},
                         {{0, 0, 1}, Rat(-1)},
                         {{-1, -1, -1}, Rat(-1)}});
    CHECK(s.volume() == Rat(32, 3));
    CHECK(s.lattice_points().size() == 35);

    const Polytope cube(3, {{{1, 0, 0}, Rat(0)},
                            {{0, 1, 0}, Rat(0)},
                            {{0, 0, 1}, Rat(0)},
                            {{-1, 0, 0}, Rat(-2)},
                            {{0, -1, 0}, Rat(-2)},
                            {{0, 0, -1}, Rat(-2)}});
    CHECK(cube.volume() == 8);
    CHECK(cube.lattice_points().size() == 27);
}

TEST_CASE("every vertex is cut out by at least dim active constraints") {
    testsupport::Rng rng(99);
    for (int i = 0; i < 20; ++i) {
        const Fan fan = testsupport::random_smooth_fan(rng);
        const auto d = testsupport::random_big_divisor(fan, rng);
        const Polytope p = polytope_of_divisor(d);
        for (const RatVec& v : p.vertices()) {
            int active = 0;
            for (const HalfSpace& h : p.halfspaces()) {
                Rat s = 0;
                for (int j = 0; j < p.dim(); ++j) s += v[j] * h.normal[j];
                if (s == h.offset) ++active;
                CHECK(s >= h.offset);
            }
            CHECK(active >= p.dim());
        }
    }
}

TEST_CASE("triangulated volume agrees with the shoelace oracle in 2d") {
    testsupport::Rng rng(1234);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
        const Fan fan = testsupport::random_smooth_fan(rng);
        if (fan.dim != 2) continue;
        const auto d = testsupport::random_big_divisor(fan, rng);
        const Polytope p = polytope_of_divisor(d);
        CHECK(p.volume() == testsupport::shoelace_area(p.vertices()));
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("volume is invariant under halfspace permutation and integer translation") {
    const Polytope p = pentagon();
    auto hs = p.halfspaces();
    std::rotate(hs.begin(), hs.begin() + 2, hs.end());
    std::swap(hs[0], hs[3]);
    CHECK(Polytope(2, hs).volume() == p.volume());

    // translate by w = (3, -2): offset += <w, normal>
    const std::int64_t w[2] = {3, -2};
    auto shifted = p.halfspaces();
    for (HalfSpace& h : shifted) h.offset += Rat(w[0] * h.normal[0] + w[1] * h.normal[1]);
    CHECK(Polytope(2, shifted).volume() == p.volume());
}

TEST_CASE("dilation scales volume by k^dim exactly") {
    testsupport::Rng rng(5150);
    for (int i = 0; i < 20; ++i) {
        const Fan fan = testsupport::random_smooth_fan(rng, true);
        const auto d = testsupport::random_big_divisor(fan, rng);
        const Polytope p = polytope_of_divisor(d);
        const Rat v = p.volume();
        for (int k : {2, 5}) {
            Rat factor = 1;
            for (int j = 0; j < p.dim(); ++j) factor *= k;
            CHECK(p.scale(k).volume() == factor * v);
        }
    }
}

TEST_CASE("lattice-count estimates converge to the exact volume") {
    const std::vector<Polytope> corpus = {unit_square(), pentagon()};
    for (const Polytope& p : corpus) {
        const double exact = rat_to_double(p.volume());
        double prev_err = 1e100;
        for (int k : {20, 40, 60}) {
            const double err = std::abs(testsupport::counting_volume(p, k) - exact);
            CHECK(err <= prev_err + 1e-12);
            prev_err = err;
        }
        CHECK(std::abs(testsupport::counting_volume(p, 60) - exact) / exact < 0.05);
    }
}

TEST_CASE("vertex cache is safe under concurrent first access") {
    const Polytope p = pentagon();
    auto task = [&p] { return p.vertices().size(); };
    auto f1 = std::async(std::launch::async, task);
    auto f2 = std::async(std::launch::async, task);
    auto f3 = std::async(std::launch::async, task);
    CHECK(f1.get() == 5);
    CHECK(f2.get() == 5);
    CHECK(f3.get() == 5);
}
