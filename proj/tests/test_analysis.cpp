#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "syncmap/analysis.hpp"
#include "syncmap/rng.hpp"
#include "syncmap/symmetry.hpp"

using namespace syncmap;

namespace {
// 1 +- a sqrt(3), frozen for a = 0.1.
constexpr double kSaddleEigHi = 1.1732050807568877;
constexpr double kSaddleEigLo = 0.8267949192431123;

const FixedPointRecord* find_at(const std::vector<FixedPointRecord>& records,
                                PhasePoint where) {
    for (const FixedPointRecord& r : records) {
        if (linf(r.location - where) < 1e-6) return &r;
    }
    return nullptr;
}
} // namespace

TEST_CASE("nine fixed points, classified and hyperbolic") {
    const MapParams mp(0.1);
    const std::vector<FixedPointRecord> records = fixed_points(mp);
    REQUIRE(records.size() == 9);

    std::map<FixedPointKind, int> census;
    for (const FixedPointRecord& r : records) {
        CHECK(r.residual <= 1e-12);
        CHECK(linf(map_forward(r.location, mp) - r.location) <= 1e-12);
        CHECK(r.hyperbolic);
        census[r.kind] += 1;

        // Eigenvalues against the bisection oracle on the characteristic
        // polynomial, eigenvectors against the residual J v = lambda v.
        const auto [lo, hi] = oracles::eigenvalues_by_bisection(r.jacobian);
        const double big = std::max(std::fabs(lo), std::fabs(hi));
        const double small = std::min(std::fabs(lo), std::fabs(hi));
        CHECK(std::fabs(std::fabs(r.eigenvalue_1) - big) <= 1e-12);
        CHECK(std::fabs(std::fabs(r.eigenvalue_2) - small) <= 1e-12);
        for (int k = 0; k < 2; ++k) {
            const double lambda = k == 0 ? r.eigenvalue_1 : r.eigenvalue_2;
            const PhasePoint v = k == 0 ? r.eigenvector_1 : r.eigenvector_2;
            CHECK(std::fabs(std::hypot(v.x, v.y) - 1.0) <= 1e-12);
            CHECK(linf(r.jacobian.apply(v) - lambda * v) <= 1e-12);
        }
    }
    CHECK(census[FixedPointKind::Source] == 4);
    CHECK(census[FixedPointKind::Saddle] == 4);
    CHECK(census[FixedPointKind::Sink] == 1);

    for (const PhasePoint corner :
         {PhasePoint{0, 0}, {0, kTwoPi}, {kTwoPi, 0}, {kTwoPi, kTwoPi}}) {
        REQUIRE(find_at(records, corner) != nullptr);
        CHECK(find_at(records, corner)->kind == FixedPointKind::Source);
    }
    for (const PhasePoint mid :
         {PhasePoint{kPi, 0}, {0, kPi}, {kTwoPi, kPi}, {kPi, kTwoPi}}) {
        REQUIRE(find_at(records, mid) != nullptr);
        CHECK(find_at(records, mid)->kind == FixedPointKind::Saddle);
    }
    REQUIRE(find_at(records, {kPi, kPi}) != nullptr);
    CHECK(find_at(records, {kPi, kPi})->kind == FixedPointKind::Sink);
}

TEST_CASE("sink eigendata: 1 - a along the antidiag, 1 - 3a along the diag") {
    const MapParams mp(0.1);
    const FixedPointRecord* sink = find_at(fixed_points(mp), {kPi, kPi});
    REQUIRE(sink != nullptr);
    CHECK(std::fabs(sink->eigenvalue_1 - 0.9) <= 1e-12);
    CHECK(std::fabs(sink->eigenvalue_2 - 0.7) <= 1e-12);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // 1 - a pairs with (1, -1)/sqrt(2), 1 - 3a with (1, 1)/sqrt(2).
    CHECK(std::fabs(sink->eigenvector_1.x - inv_sqrt2) <= 1e-12);
    CHECK(std::fabs(sink->eigenvector_1.y + inv_sqrt2) <= 1e-12);
    CHECK(std::fabs(sink->eigenvector_2.x - inv_sqrt2) <= 1e-12);
    CHECK(std::fabs(sink->eigenvector_2.y - inv_sqrt2) <= 1e-12);
}

TEST_CASE("saddle eigendata at (pi, 0)") {
    const MapParams mp(0.1);
    const FixedPointRecord* saddle = find_at(fixed_points(mp), {kPi, 0.0});
    REQUIRE(saddle != nullptr);
    CHECK(saddle->jacobian.a11 == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(saddle->jacobian.a12 == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(saddle->jacobian.a21 == doctest::Approx(-0.1).epsilon(1e-14));
    CHECK(saddle->jacobian.a22 == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(std::fabs(saddle->eigenvalue_1 - kSaddleEigHi) <= 1e-12);
    CHECK(std::fabs(saddle->eigenvalue_2 - kSaddleEigLo) <= 1e-12);
}

TEST_CASE("classification is stable across the parameter interval") {
    for (const double a : {0.01, 0.05, 0.1, 0.166}) {
        const MapParams mp(a);
        std::map<FixedPointKind, int> census;
        for (const FixedPointRecord& r : fixed_points(mp)) {
            CHECK(r.hyperbolic);
            census[r.kind] += 1;
        }
        CHECK(census[FixedPointKind::Source] == 4);
        CHECK(census[FixedPointKind::Saddle] == 4);
        CHECK(census[FixedPointKind::Sink] == 1);
    }
}

TEST_CASE("heteroclinic arcs: endpoints and invariance") {
    const MapParams mp(0.1);
    const ManifoldArc eta1 = trace_heteroclinic(HeteroclinicLabel::Eta1, mp, 0.005);
    REQUIRE(eta1.polyline.size() > 50);

    // Polylines run from the source end to the saddle end.
    CHECK(std::hypot(eta1.polyline.front().x - 0.0,
                     eta1.polyline.front().y - 0.0) <= 1e-6);
    CHECK(std::hypot(eta1.polyline.back().x - kPi, eta1.polyline.back().y) <=
          1e-6);

    // Segment lengths honor the step bound.
    for (std::size_t i = 0; i + 1 < eta1.polyline.size(); ++i) {
        const PhasePoint d = eta1.polyline[i + 1] - eta1.polyline[i];
        CHECK(std::hypot(d.x, d.y) <= 0.005 + 1e-9);
    }

    // Forward images of vertices stay on the arc.
    for (std::size_t i = 0; i < eta1.polyline.size(); i += 5) {
        const PhasePoint image = map_forward(eta1.polyline[i], mp);
        CHECK(distance_to_polyline(image, eta1.polyline) <= 1e-5);
    }

    // The rotation by pi around (pi, pi) carries eta1 onto eta5.
    const ManifoldArc eta5 = trace_heteroclinic(HeteroclinicLabel::Eta5, mp, 0.005);
    const SymmetryMap phi3 = symmetry(SymmetryId::Phi3);
    for (std::size_t i = 0; i < eta1.polyline.size(); i += 7) {
        CHECK(distance_to_polyline(phi3(eta1.polyline[i]), eta5.polyline) <=
              1e-5);
    }

    CHECK_THROWS_AS(trace_heteroclinic(HeteroclinicLabel::Eta1, mp, 0.0),
                    DomainError);
}

TEST_CASE("all eight arcs reach their named endpoints") {
    const MapParams mp(0.1);
    for (const HeteroclinicLabel label : kAllHeteroclinics) {
        const ManifoldArc arc = trace_heteroclinic(label, mp, 0.02);
        const HeteroclinicEndpoints ends = heteroclinic_endpoints(label);
        REQUIRE_FALSE(arc.polyline.empty());
        CHECK(std::hypot(arc.polyline.front().x - ends.source.x,
                         arc.polyline.front().y - ends.source.y) <= 1e-6);
        CHECK(std::hypot(arc.polyline.back().x - ends.saddle.x,
                         arc.polyline.back().y - ends.saddle.y) <= 1e-6);
    }
}

TEST_CASE("basin membership of degenerate samples") {
    const MapParams mp(0.1);
    CHECK(converges_to_sink({kPi, kPi}, mp, 10, 1e-6));
    CHECK_FALSE(converges_to_sink({0.0, 0.0}, mp, 10000, 1e-6));
}

TEST_CASE("basin estimates: determinism, monotonicity, coverage") {
    const MapParams mp(0.1);
    const BasinEstimate est = estimate_basin(mp, 2000, 10000, 1e-6, 99);
    CHECK(est.samples == 2000);
    CHECK(est.fraction >= 0.999);
    CHECK(est.fraction <= 1.0);

    const BasinEstimate parallel = estimate_basin(mp, 2000, 10000, 1e-6, 99, 3);
    CHECK(parallel.converged == est.converged);

    const BasinEstimate short_run = estimate_basin(mp, 2000, 50, 1e-6, 99);
    CHECK(short_run.converged <= est.converged);

    CHECK_THROWS_AS(estimate_basin(mp, 0, 10, 1e-6, 1), DomainError);
    CHECK_THROWS_AS(estimate_basin(mp, 10, 10, 0.0, 1), DomainError);
}

TEST_CASE("contraction rates") {
    const MapParams mp(0.1);

    // Generic initial condition: the slow eigenvalue 1 - a dominates.
    CHECK(std::fabs(contraction_rate(mp, {2.9, 3.5}) - 0.9) <= 0.01);

    // On the diagonal y = x the dynamics is x -> x + 3a sin x, so the rate
    // is 1 + 3a cos(pi) = 1 - 3a.
    CHECK(std::fabs(contraction_rate(mp, {3.0, 3.0}) - 0.7) <= 0.01);

    // On the antidiagonal y = 2pi - x the rate is 1 - a.
    CHECK(std::fabs(contraction_rate(mp, {kPi - 0.4, kPi + 0.4}) - 0.9) <=
          0.01);

    CHECK_THROWS_AS(contraction_rate(mp, {kPi, kPi}), DegenerateOrbitError);
    CHECK_THROWS_AS(contraction_rate(mp, {1.0, 1.0}, 1), DomainError);
    // A fixed source never converges.
    CHECK_THROWS_AS(contraction_rate(mp, {0.0, 0.0}), NotConvergingError);
}
