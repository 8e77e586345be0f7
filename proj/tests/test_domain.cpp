#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holderlie/domain.hpp"

using namespace holderlie;

namespace {
Vec v1(double a) {
    Vec v(1);
    v[0] = a;
    return v;
}
Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}
}  // namespace

TEST_CASE("ball diameter") {
    auto d = Domain::ball(v1(0.0), 0.5);
    CHECK(d.diameter() == doctest::Approx(1.0));
    CHECK(d.dim() == 1);
    CHECK(d.inradius() == doctest::Approx(0.5));
}

TEST_CASE("box diameter is the Euclidean diagonal") {
    auto d = Domain::box(v2(0.0, 0.0), v2(0.5, 0.5));
    CHECK(d.diameter() == doctest::Approx(std::sqrt(0.5)));
    CHECK(d.incenter().isApprox(v2(0.25, 0.25)));
}

TEST_CASE("diameter above 1 is rejected") {
    CHECK_THROWS_AS(Domain::ball(v1(0.0), 0.6), DiameterExceeded);
    CHECK_THROWS_AS(Domain::box(v2(0, 0), v2(1.0, 1.0)), DiameterExceeded);
}

TEST_CASE("degenerate domains are rejected") {
    CHECK_THROWS_AS(Domain::ball(v1(0.0), 0.0), EmptyDomain);
    CHECK_THROWS_AS(Domain::box(v1(0.5), v1(0.5)), EmptyDomain);
    CHECK_THROWS_AS(Domain::box(v1(0.0), v2(1, 1)), DimensionMismatch);
}

TEST_CASE("3-point grid on ball(0, 0.5) in R^1") {
    auto d = Domain::ball(v1(0.0), 0.5);
    auto pts = sample_points(d, SamplePlan::grid(3));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0][0] == doctest::Approx(-0.25));
    CHECK(pts[1][0] == doctest::Approx(0.0));
    CHECK(pts[2][0] == doctest::Approx(0.25));
}

TEST_CASE("sampling is deterministic") {
    auto d = Domain::box(v2(0, 0), v2(0.5, 0.5));
    for (auto p : {SamplePlan::grid(5), SamplePlan::quasirandom(100, 7)}) {
        auto a = sample_points(d, p);
        auto b = sample_points(d, p);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("quasirandom points are interior") {
    auto d = Domain::ball(v2(0, 0), 0.5);
    auto pts = sample_points(d, SamplePlan::quasirandom(100, 7));
    REQUIRE(pts.size() == 100);
    for (const auto& x : pts) CHECK(d.contains(x));
}

TEST_CASE("all grid points are strictly interior") {
    auto d = Domain::box(v1(0.0), v1(1.0));
    for (const auto& x : sample_points(d, SamplePlan::grid(50))) {
        CHECK(d.contains(x));
        CHECK(d.boundary_distance(x) > 0.0);
    }
}

TEST_CASE("3-point grid gives 3 unordered pairs") {
    auto d = Domain::ball(v1(0.0), 0.5);
    auto pairs = sample_pairs(d, SamplePlan::grid(3));
    CHECK(pairs.size() == 3);
    for (const auto& [x, y] : pairs) CHECK((x - y).norm() <= d.diameter() + 1e-15);
}

TEST_CASE("min_pair_separation filters close pairs") {
    auto d = Domain::ball(v1(0.0), 0.5);
    auto pairs = sample_pairs(d, SamplePlan::grid(9, 0.1));
    CHECK(!pairs.empty());
    for (const auto& [x, y] : pairs) CHECK((x - y).norm() >= 0.1);
}

TEST_CASE("single-point plan cannot form pairs") {
    auto d = Domain::ball(v1(0.0), 0.5);
    CHECK_THROWS_AS(sample_pairs(d, SamplePlan::grid(1)), DegeneratePlan);
}

TEST_CASE("dense grids stay under the pair budget") {
    auto d = Domain::box(v1(0.0), v1(1.0));
    SamplePlan p = SamplePlan::grid(10000);
    auto pairs = sample_pairs(d, p);
    CHECK(pairs.size() <= static_cast<std::size_t>(p.max_pairs));
    CHECK(pairs.size() > 1000);
}
