#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "sitnikov/dynamics.hpp"
#include "sitnikov/period.hpp"
#include "sitnikov/sync.hpp"
#include "test_util.hpp"

using namespace sitnikov;

TEST_CASE("sync holds for the small balanced families") {
    for (const auto& config :
         {make_polygon(4), make_polygon(3), make_collinear_cc(0.5),
          make_rhombus_cc(1.0, 0.5)}) {
        const auto report = sync_check(config);
        CHECK(report.holds);
        CHECK(report.lhs < report.rhs);
        REQUIRE(report.c.has_value());
        CHECK(*report.c > 0.0);
        // the solved height satisfies the apex equation to 1e-12 relative
        double apex = 0.0;
        for (std::size_t i = 0; i < config.size(); ++i) {
            const double s = config.radii()[i];
            const double d2 = s * s + *report.c * *report.c;
            apex += config.masses()[i] / (d2 * std::sqrt(d2));
        }
        CHECK(std::abs(apex - report.lambda) <= 1e-12 * report.lambda);
    }
}

TEST_CASE("sync fails beyond the polygon boundary") {
    const auto report = sync_check(make_polygon(500));
    CHECK_FALSE(report.holds);
    CHECK_FALSE(report.c.has_value());
}

TEST_CASE("sync rejects non-central configurations") {
    const PlanarConfiguration skew({1.0, 1.0, 2.0},
                                   {{1.0, 0.0}, {1.0, 2.0}, {-1.0, -1.0}});
    CHECK_THROWS_AS(sync_check(skew), std::domain_error);
}

TEST_CASE("both formulations of the inequality agree") {
    for (const auto& config : testutil::sample_balanced_configs(10, 99)) {
        const auto report = sync_check(config);
        CHECK(report.holds == (report.lambda < report.lambda_bound));
    }
    for (int n : {100, 460, 472, 473, 500}) {
        const auto report = sync_check(make_polygon(n));
        CHECK(report.holds == (report.lambda < report.lambda_bound));
    }
}

TEST_CASE("pyramid residual") {
    SUBCASE("solved height gives a tiny residual") {
        for (const auto& config : {make_polygon(4), make_rhombus_cc(1.0, 0.5)}) {
            const auto report = sync_check(config);
            REQUIRE(report.c.has_value());
            CHECK(verify_pcc(config, *report.c) <= 1e-10);
        }
    }
    SUBCASE("c = 0 degenerates: planar part vanishes, axial part fails") {
        const auto config = make_polygon(3);
        const auto report = sync_check(config);
        // at c=0 the axial equation would require lambda = sum m/s^3
        CHECK(verify_pcc(config, 0.0) ==
              doctest::Approx((report.lambda_bound - report.lambda) / report.lambda));
        CHECK(verify_pcc(config, 0.0) > 1e-3);
    }
}

TEST_CASE("polygon sum") {
    CHECK(polygon_sum(2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(polygon_sum(472) < 4.0);
    CHECK(polygon_sum(473) >= 4.0);
    CHECK(polygon_sum(842) >= polygon_lower_bound(M_PI / 842));
    CHECK(polygon_sum(842) > 4.0);
}

TEST_CASE("analytic bound") {
    CHECK(polygon_lower_bound(M_PI / 842) == doctest::Approx(4.0006).epsilon(2e-4));
    double prev = polygon_lower_bound(M_PI / 100);
    for (int n = 101; n <= 2000; n += 7) {
        const double cur = polygon_lower_bound(M_PI / n);
        CHECK(cur > prev);  // decreasing in x means increasing in n
        prev = cur;
    }
}

TEST_CASE("polygon scan") {
    const auto scan = polygon_scan(1000);
    CHECK(scan.boundary == 472);
    CHECK(scan.bound_decreasing);
    // contiguity: holds exactly for n <= 472
    for (const auto& row : scan.rows) CHECK(row.holds == (row.n <= 472));
    CHECK(polygon_scan(100).boundary == 100);
}

TEST_CASE("moulton quintic endpoints and root") {
    CHECK(moulton_quintic(0.0, 0.5) == doctest::Approx(-3.5).epsilon(1e-15));
    CHECK(moulton_quintic(1.0, 0.5) == doctest::Approx(17.5).epsilon(1e-15));
    for (double mu : {0.05, 0.3, 0.5, 0.7, 0.95}) {
        const double r = moulton_root(mu);
        CHECK(r > 0.0);
        CHECK(r < 1.0);
        CHECK(std::abs(moulton_quintic(r, mu)) <= 1e-12);
    }
}

TEST_CASE("euler collinear configuration is central but unbalanced") {
    for (double mu : {0.1, 0.5, 0.9}) {
        const auto config = make_euler_collinear(mu);
        CHECK(cc_residual(config).is_central);
        CHECK_FALSE(is_balanced(config).balanced);
    }
}

TEST_CASE("euler equilibrium example") {
    const auto eq = euler_equilibrium();
    CHECK(eq.mu > 0.0);
    CHECK(eq.mu < 1.0);
    CHECK(eq.field_residual <= 1e-12);
    CHECK(std::abs(euler_field(eq.mu, eq.center)) <= 1e-12);

    // the field at the center changes sign across (0,1)
    const double f0 = euler_field(1e-9, (1e-9 + moulton_root(1e-9) + 3.0) / 7.0);
    const double f1 =
        euler_field(1.0 - 1e-9, (1.0 - 1e-9 + moulton_root(1.0 - 1e-9) + 3.0) / 7.0);
    CHECK(f0 * f1 < 0.0);

    // 4-point CC with one zero mass: primaries central, massless point at rest
    const auto config = make_euler_collinear(eq.mu);
    CHECK(cc_residual(config).is_central);
    CHECK(restricted_cc_residual(config, {0.0, 0.0}) <= 1e-10);
}

TEST_CASE("sync verdict is scale invariant") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto& config : {make_polygon(4), make_collinear_cc(0.3),
                               make_polygon(480), make_rhombus_cc(2.0, 1.0)}) {
        const bool base = sync_check(config).holds;
        for (int k = 0; k < 5; ++k) {
            const double r = std::exp(std::log(0.1) + std::log(100.0) * unit(rng));
            const double mu = std::exp(std::log(0.1) + std::log(100.0) * unit(rng));
            const auto scaled = scale_config(config, r, mu);
            CHECK(sync_check(scaled).holds == base);
            CHECK(is_balanced(scaled).balanced == is_balanced(config).balanced);
        }
    }
}

TEST_CASE("synchronous orbit closes at the primary period") {
    const auto config = make_polygon(4);
    const auto report = sync_check(config);
    REQUIRE(report.holds);
    const double T = 2.0 * M_PI / std::sqrt(report.lambda);
    const double E = energy_of_period(config, T);
    CHECK(std::abs(ode_period(config, E) - T) <= 1e-6 * T);
}
