#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mipslsh/core.hpp"
#include "mipslsh/rng.hpp"
#include "mipslsh/sampling.hpp"

using namespace mipslsh;

TEST_CASE("normalize_queries scales to unit norm and keeps direction") {
    QuerySet qs = QuerySet::from_points({{3.0, 4.0}, {1.0, 0.0}});
    QuerySet out = normalize_queries(qs);
    CHECK(out.normalized);
    CHECK(out.points[0][0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(out.points[0][1] == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(out.points[1][0] == 1.0);
    CHECK(out.points[1][1] == 0.0);
}

TEST_CASE("normalize_queries rejects a zero-norm query by index") {
    QuerySet qs = QuerySet::from_points({{1.0, 0.0}, {0.0, 0.0}});
    CHECK_THROWS_WITH_AS(normalize_queries(qs), doctest::Contains("query 1"),
                         std::invalid_argument);
}

TEST_CASE("rescale_dataset divides by the max norm only when needed") {
    SUBCASE("max norm 2") {
        auto [ds, scale] = rescale_dataset(Dataset::from_points({{2.0, 0.0}, {0.0, 1.0}}));
        CHECK(scale == 2.0);
        CHECK(ds.points[0][0] == 1.0);
        CHECK(ds.points[1][1] == 0.5);
        CHECK(ds.norm_bound_ok);
    }
    SUBCASE("already bounded") {
        auto [ds, scale] = rescale_dataset(Dataset::from_points({{0.5, 0.0}, {0.0, 0.5}}));
        CHECK(scale == 1.0);
        CHECK(ds.points[0][0] == 0.5);
    }
    SUBCASE("zero vector") {
        auto [ds, scale] = rescale_dataset(Dataset::from_points({{0.0, 0.0}}));
        CHECK(scale == 1.0);
        CHECK(ds.points[0][0] == 0.0);
    }
}

TEST_CASE("rescaling never changes the argmax of q.x") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 2 + trial % 5;
        std::vector<Vec> pts;
        for (int i = 0; i < 12; ++i) {
            Vec p = random_ball_vec(rng, d);
            for (double& x : p) x *= 3.0;  // force rescaling
            pts.push_back(std::move(p));
        }
        const Vec q = random_unit_vec(rng, d);
        auto [scaled, scale] = rescale_dataset(Dataset::from_points(pts));
        CHECK(scale > 1.0);
        std::size_t best_before = 0, best_after = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (dot(q, pts[i]) > dot(q, pts[best_before])) best_before = i;
            if (dot(q, scaled.points[i]) > dot(q, scaled.points[best_after])) best_after = i;
        }
        CHECK(best_before == best_after);
    }
}

TEST_CASE("hashing_quality basics") {
    CHECK(hashing_quality({0.5, 0.25}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(hashing_quality({0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(hashing_quality({1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(hashing_quality({0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("hashing_quality is monotone in each argument") {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const double p2 = 0.05 + 0.8 * rng.next_unit();
        const double p1 = p2 + (0.999 - p2) * (0.1 + 0.8 * rng.next_unit());
        const double rho = hashing_quality({p1, p2});
        CHECK(rho > 0.0);
        CHECK(rho < 1.0);
        const double bump_p2 = std::min(0.9999 * p1, p2 * 1.01);
        if (bump_p2 > p2) CHECK(hashing_quality({p1, bump_p2}) > rho);
        const double bump_p1 = std::min(0.99999, p1 * 1.01);
        if (bump_p1 > p1 && bump_p1 < 1.0) CHECK(hashing_quality({bump_p1, p2}) < rho);
    }
}

TEST_CASE("domain type validation") {
    CHECK_THROWS_AS(Dataset::from_points({}), std::invalid_argument);
    CHECK_THROWS_AS(Dataset::from_points({{1.0, 0.0}, {1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Dataset::from_points({{std::nan(""), 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(ThresholdPair(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ThresholdPair(1.2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ThresholdPair(0.5, 1.0), std::invalid_argument);
    CHECK_NOTHROW(ThresholdPair(1.0, 0.5));
    CHECK_THROWS_AS(CollisionPair(1.5, 0.2), std::invalid_argument);

    const Dataset ok = Dataset::from_points({{0.5, 0.5}});
    CHECK(ok.norm_bound_ok);
    const Dataset big = Dataset::from_points({{3.0, 4.0}});
    CHECK_FALSE(big.norm_bound_ok);
    const QuerySet unit = QuerySet::from_points({{0.6, 0.8}});
    CHECK(unit.normalized);
    const QuerySet short_q = QuerySet::from_points({{0.5, 0.0}});
    CHECK_FALSE(short_q.normalized);
}
