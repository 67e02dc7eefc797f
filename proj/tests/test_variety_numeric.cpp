#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexlat/variety_numeric.hpp"

#include <cmath>

using namespace hexlat;

TEST_CASE("arc_solution at t=1 reduces to the closed form r = -1/(2 cos nu)") {
    TraceResult tr = arc_solution(1.0);
    CHECK(tr.max_residual < 1e-10);
    CHECK(tr.endpoint_deviation < 1e-9);
    CHECK(tr.injectivity_violations == 0);
    CHECK(tr.r0 == doctest::Approx(0.5).epsilon(1e-9)); // r + r = 1
    for (const TraceSample& s : tr.samples) {
        if (std::abs(std::cos(s.nu)) < 1e-6) continue;
        CHECK(s.r == doctest::Approx(-1.0 / (2.0 * std::cos(s.nu))).epsilon(1e-6));
    }
}

TEST_CASE("arc_solution at t=2 finds the golden-ratio root") {
    TraceResult tr = arc_solution(2.0);
    double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK(std::abs(tr.r0 - golden) < 1e-10);
    // the arccos near the junction amplifies the root error by a square root
    CHECK(tr.endpoint_deviation < 1e-7);
}

TEST_CASE("arc endpoints hit the sixth roots of unity for several t") {
    for (double t : {1.0, 1.5, 2.0, 3.0, 4.0, 7.0}) {
        TraceResult tr = arc_solution(t);
        CHECK(tr.endpoint_deviation < 1e-6);
        CHECK(tr.max_residual < 1e-9);
    }
}

TEST_CASE("rd_slice closed forms") {
    auto [r0, r1] = rd_slice(3, 0.5);
    double q0 = (-0.25 + std::sqrt(1.0 / 16 + 2.0)) / 2.0;
    double q1 = (0.25 + std::sqrt(1.0 / 16 + 2.0)) / 2.0;
    CHECK(std::abs(r0 - q0) < 1e-9);
    CHECK(std::abs(r1 - q1) < 1e-9);

    auto [p0, p1] = rd_slice(2, 1.0);
    CHECK(std::abs(p0 - 0.5) < 1e-9);
    CHECK(p1 == 1.0);

    // slices stay nonempty across the interval
    for (int i = 1; i <= 20; ++i) {
        auto [a, b] = rd_slice(4, i / 20.0);
        CHECK(a < b);
    }
}

TEST_CASE("sigma point counts and matches") {
    CHECK(sigma_points(3).size() == 6);
    CHECK(sigma_points(4).size() == 14);
    CHECK(sigma_points(5).size() == 26);
}

TEST_CASE("H1 traces land on the exact shadows") {
    for (std::int64_t d : {3, 4, 5}) {
        auto traces = trace_h1_arcs(d);
        CHECK((std::int64_t)traces.size() == d * d - 3 * d + 3);
        for (auto& tr : traces) {
            CHECK(tr.max_residual < 1e-9);
            CHECK(tr.endpoint_deviation < 1e-6);
        }
    }
}

TEST_CASE("regular-value check") {
    for (std::int64_t d : {2, 3, 4, 5}) {
        SmoothnessReport rep = smoothness_check(d, 10000);
        INFO("d=", d, " min|df|=", rep.min_gradient, " crit=", rep.min_critical_residual,
             " n=", rep.accepted);
        CHECK(rep.min_gradient > 0.1);
        CHECK(rep.min_critical_residual > 0.05);
    }
}

TEST_CASE("solution counts over the interior of R_d") {
    for (std::int64_t d : {2, 3, 4, 5, 6}) {
        RdCountReport rep = count_rd_solutions(d, 50);
        INFO("d=", d, " grid=", rep.grid_points, " bad=", rep.bad_points);
        CHECK(rep.grid_points > 0);
        CHECK(rep.bad_points == 0);
    }
}
