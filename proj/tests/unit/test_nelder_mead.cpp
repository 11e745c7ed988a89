#include "riskkit/calibration/nelder_mead.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

using namespace riskkit::calibration;

TEST(NelderMead, QuadraticBowl) {
    const std::array lo{-10.0, -10.0};
    const std::array hi{10.0, 10.0};
    const auto r = nelder_mead(
        [](std::span<const double> x) { return (x[0] - 1.5) * (x[0] - 1.5) + 3 * (x[1] + 2) * (x[1] + 2) + 1; },
        {5.0, 5.0}, lo, hi);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.x[0], 1.5, 1e-3);
    EXPECT_NEAR(r.x[1], -2.0, 1e-3);
    EXPECT_NEAR(r.value, 1.0, 1e-6);
}

TEST(NelderMead, Rosenbrock) {
    const std::array lo{-5.0, -5.0};
    const std::array hi{5.0, 5.0};
    NelderMeadOptions o;
    o.relative_tolerance = 1e-10;
    o.max_iterations = 20000;
    const auto r = nelder_mead(
        [](std::span<const double> x) {
            return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
        },
        {-1.2, 1.0}, lo, hi, o);
    EXPECT_NEAR(r.x[0], 1.0, 1e-3);
    EXPECT_NEAR(r.x[1], 1.0, 2e-3);
}

TEST(NelderMead, RespectsBoxWhenOptimumOutside) {
    const std::array lo{0.0};
    const std::array hi{1.0};
    const auto r = nelder_mead([](std::span<const double> x) { return (x[0] - 3) * (x[0] - 3); }, {0.5}, lo, hi);
    EXPECT_LE(r.x[0], 1.0);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
}

TEST(NelderMead, Deterministic) {
    const std::array lo{-3.0, -3.0, -3.0};
    const std::array hi{3.0, 3.0, 3.0};
    const auto f = [](std::span<const double> x) {
        return std::cos(x[0]) + x[1] * x[1] + std::abs(x[2] - 0.3);
    };
    const auto a = nelder_mead(f, {1.0, 1.0, 1.0}, lo, hi);
    const auto b = nelder_mead(f, {1.0, 1.0, 1.0}, lo, hi);
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.evaluations, b.evaluations);
}
