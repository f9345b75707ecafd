#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "syncmap/map.hpp"
#include "syncmap/rng.hpp"

using namespace syncmap;

TEST_CASE("parameter domain is the open interval (0, 1/6)") {
    CHECK_NOTHROW(MapParams(0.1));
    CHECK_NOTHROW(MapParams(1e-9));
    CHECK_NOTHROW(MapParams(1.0 / 6.0 - 1e-12));
    CHECK_THROWS_AS(MapParams(0.0), DomainError);
    CHECK_THROWS_AS(MapParams(1.0 / 6.0), DomainError);
    CHECK_THROWS_AS(MapParams(-0.1), DomainError);
    CHECK_THROWS_AS(MapParams(0.3), DomainError);
    CHECK_THROWS_AS(MapParams(std::nan("")), DomainError);
}

TEST_CASE("forward map spot values") {
    const MapParams mp(0.1);
    const PhasePoint fp = map_forward({kPi, kPi}, mp);
    CHECK(linf(fp - PhasePoint{kPi, kPi}) <= 1e-15);

    const PhasePoint origin = map_forward({0.0, 0.0}, mp);
    CHECK(origin.x == 0.0);
    CHECK(origin.y == 0.0);

    const PhasePoint q = map_forward({kPi / 2.0, kPi / 2.0}, mp);
    CHECK(q.x == doctest::Approx(kPi / 2.0 + 0.3).epsilon(1e-14));
    CHECK(q.y == doctest::Approx(kPi / 2.0 + 0.3).epsilon(1e-14));
}

TEST_CASE("non-finite input is a contract violation") {
    const MapParams mp(0.1);
    CHECK_THROWS_AS(map_forward({std::nan(""), 0.0}, mp), DomainError);
    CHECK_THROWS_AS(map_forward({0.0, HUGE_VAL}, mp), DomainError);
    CHECK_THROWS_AS(map_inverse({0.0, -HUGE_VAL}, mp), DomainError);
    CHECK_THROWS_AS(map_inverse({0.0, 0.0}, mp, 0.0), DomainError);
}

TEST_CASE("periodicity under 2pi shifts") {
    const MapParams mp(0.1);
    const CounterRng rng(11);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const PhasePoint p = rng.square_point(i);
        const PhasePoint base = map_forward(p, mp);
        for (int k = -2; k <= 2; ++k) {
            for (int m = -2; m <= 2; ++m) {
                const PhasePoint shift{kTwoPi * k, kTwoPi * m};
                const PhasePoint shifted = map_forward(p + shift, mp);
                CHECK(linf(shifted - (base + shift)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("jacobian spot values and finite-difference oracle") {
    const MapParams mp(0.1);
    const Mat2 at_pi = map_jacobian({kPi, kPi}, mp);
    CHECK(at_pi.a11 == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(at_pi.a12 == doctest::Approx(-0.1).epsilon(1e-14));
    CHECK(at_pi.a21 == doctest::Approx(-0.1).epsilon(1e-14));
    CHECK(at_pi.a22 == doctest::Approx(0.8).epsilon(1e-14));

    const Mat2 at_zero = map_jacobian({0.0, 0.0}, mp);
    CHECK(at_zero.a11 == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(at_zero.a12 == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(at_zero.a21 == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(at_zero.a22 == doctest::Approx(1.2).epsilon(1e-14));

    const MapParams mp12(0.12);
    const Mat2 exact = map_jacobian({1.3, 0.7}, mp12);
    const Mat2 fd = oracles::central_diff_jacobian({1.3, 0.7}, mp12, 1e-6);
    CHECK(std::fabs(exact.a11 - fd.a11) <= 1e-6);
    CHECK(std::fabs(exact.a12 - fd.a12) <= 1e-6);
    CHECK(std::fabs(exact.a21 - fd.a21) <= 1e-6);
    CHECK(std::fabs(exact.a22 - fd.a22) <= 1e-6);
}

TEST_CASE("jacobian determinant stays above the parameter bound") {
    for (const double a : {0.01, 0.1, 1.0 / 6.0 - 1e-9}) {
        const MapParams mp(a);
        const double bound = mp.jacobian_det_lower_bound();
        CHECK(bound > 0.0);
        const CounterRng rng(7);
        for (std::uint64_t i = 0; i < 10000; ++i) {
            const double det = map_jacobian(rng.square_point(i), mp).det();
            CHECK(det >= bound - 1e-12);
        }
    }
}

TEST_CASE("inverse map: fixed point, round trips, diagonal oracle") {
    const MapParams mp(0.1);

    const PhasePoint fp = map_inverse({kPi, kPi}, mp, 1e-12);
    CHECK(linf(fp - PhasePoint{kPi, kPi}) <= 1e-12);

    const PhasePoint p{1.0, 2.0};
    const PhasePoint round = map_inverse(map_forward(p, mp), mp, 1e-12);
    CHECK(linf(round - p) <= 1e-10);

    // On the diagonal the map reduces to x -> x + 3a sin x; invert that with
    // plain bisection and compare.
    const double target = kPi / 2.0 + 0.3;
    const double oracle = oracles::bisect(
        [&](double x) { return x + 0.3 * std::sin(x) - target; }, 0.0, kPi,
        1e-14);
    CHECK(std::fabs(oracle - kPi / 2.0) <= 1e-10);
    const PhasePoint inv = map_inverse({target, target}, mp, 1e-12);
    CHECK(std::fabs(inv.x - oracle) <= 1e-10);
    CHECK(std::fabs(inv.y - oracle) <= 1e-10);
    CHECK(std::fabs(inv.x - kPi / 2.0) <= 1e-10);
}

TEST_CASE("inverse round-trip property across the parameter range") {
    for (const double a : {0.01, 0.1, 0.16}) {
        const MapParams mp(a);
        const CounterRng rng(23);
        for (std::uint64_t i = 0; i < 10000; ++i) {
            const PhasePoint p = rng.square_point(i);
            const PhasePoint q = map_inverse(map_forward(p, mp), mp, 1e-12);
            CHECK(linf(q - p) <= 1e-10);
        }
    }
}

TEST_CASE("orbits: fixed point, diagonals, long-run convergence") {
    const MapParams mp(0.1);

    const OrbitTrace constant = iterate({kPi, kPi}, 5, mp);
    REQUIRE(constant.points.size() == 6);
    for (const PhasePoint& p : constant.points) {
        CHECK(linf(p - PhasePoint{kPi, kPi}) <= 1e-12);
    }

    // Both diagonals are forward invariant.
    const OrbitTrace diag = iterate({1.0, 1.0}, 200, mp);
    for (const PhasePoint& p : diag.points) {
        CHECK(std::fabs(p.y - p.x) <= 1e-12);
    }
    const OrbitTrace anti = iterate({1.0, kTwoPi - 1.0}, 200, mp);
    for (const PhasePoint& p : anti.points) {
        CHECK(std::fabs(p.y - (kTwoPi - p.x)) <= 1e-12);
    }

    const OrbitTrace run = iterate({3.0, 3.3}, 500, mp);
    CHECK(linf(run.points.back() - PhasePoint{kPi, kPi}) <= 1e-8);
}

TEST_CASE("orbit traces reconstruct in both directions") {
    const MapParams mp(0.1);

    const OrbitTrace fwd = iterate({0.8, 5.1}, 50, mp);
    REQUIRE(fwd.points.size() == 51);
    for (std::size_t n = 0; n + 1 < fwd.points.size(); ++n) {
        CHECK(linf(map_forward(fwd.points[n], mp) - fwd.points[n + 1]) <=
              1e-12);
    }

    const OrbitTrace bwd = iterate({2.9, 3.2}, 50, mp, OrbitDirection::Backward);
    REQUIRE(bwd.points.size() == 51);
    for (std::size_t n = 0; n + 1 < bwd.points.size(); ++n) {
        CHECK(linf(map_forward(bwd.points[n + 1], mp) - bwd.points[n]) <=
              1e-12);
    }

    const OrbitTrace empty = iterate({1.5, 0.5}, 0, mp);
    REQUIRE(empty.points.size() == 1);
    CHECK(empty.points.front().x == 1.5);
}

TEST_CASE("wrap is a view into the fundamental square") {
    const PhasePoint w = wrap({kTwoPi + 1.0, -1.0});
    CHECK(w.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w.y == doctest::Approx(kTwoPi - 1.0).epsilon(1e-14));
    CHECK(torus_distance({0.1, 0.0}, {kTwoPi - 0.1, 0.0}) ==
          doctest::Approx(0.2).epsilon(1e-12));
}
