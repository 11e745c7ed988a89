#include "riskkit/error.hpp"
#include "riskkit/lottery.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using riskkit::Branch;
using riskkit::Lottery;

TEST(Lottery, RejectsEmptyAndBadProbabilities) {
    EXPECT_THROW(Lottery({}), riskkit::ValidationError);
    EXPECT_THROW(Lottery({{0.5, 1.0}, {0.4, 2.0}}), riskkit::ValidationError);
    EXPECT_THROW(Lottery({{-0.1, 1.0}, {1.1, 2.0}}), riskkit::ValidationError);
    EXPECT_THROW(Lottery({{1.0, std::numeric_limits<double>::quiet_NaN()}}), riskkit::ValidationError);
    EXPECT_THROW(Lottery({{1.0, std::numeric_limits<double>::infinity()}}), riskkit::ValidationError);
}

TEST(Lottery, AcceptsSumWithinTolerance) {
    EXPECT_NO_THROW(Lottery({{0.1, 1.0}, {0.2, 2.0}, {0.7 + 5e-10, 3.0}}));
    EXPECT_THROW(Lottery({{0.1, 1.0}, {0.2, 2.0}, {0.7 + 5e-9, 3.0}}), riskkit::ValidationError);
}

TEST(Lottery, BinaryDropsZeroProbabilityBranches) {
    EXPECT_EQ(Lottery::binary(1.0, 5.0, 3.0).size(), 1u);
    EXPECT_EQ(Lottery::binary(0.0, 5.0, 3.0).branches()[0].outcome, 3.0);
    EXPECT_EQ(Lottery::binary(0.3, 5.0, 3.0).size(), 2u);
}

TEST(Lottery, ExpectedValueAndHull) {
    const Lottery l({{0.5, 200.0}, {0.5, -100.0}});
    EXPECT_DOUBLE_EQ(l.expected_value(), 50.0);
    EXPECT_EQ(l.min_outcome(), -100.0);
    EXPECT_EQ(l.max_outcome(), 200.0);
    EXPECT_FALSE(l.is_degenerate());
    EXPECT_TRUE(Lottery::sure(7.0).is_degenerate());
    EXPECT_TRUE(Lottery({{0.5, 3.0}, {0.5, 3.0}}).is_degenerate());
}

TEST(Lottery, CanonicalMergesSortsAndDropsZeros) {
    const Lottery l({{0.2, 5.0}, {0.0, 9.0}, {0.3, 1.0}, {0.5, 5.0}});
    const auto c = l.canonical();
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.branches()[0], (Branch{0.3, 1.0}));
    EXPECT_EQ(c.branches()[1].outcome, 5.0);
    EXPECT_NEAR(c.branches()[1].probability, 0.7, 1e-15);
}

TEST(Lottery, ShiftAndMixture) {
    const Lottery a = Lottery::binary(0.5, 10.0, 0.0);
    const Lottery b = Lottery::sure(4.0);
    EXPECT_DOUBLE_EQ(a.shifted(3.0).expected_value(), 8.0);
    const auto m = a.mixed_with(b, 0.25);
    EXPECT_NEAR(m.expected_value(), 0.25 * 5.0 + 0.75 * 4.0, 1e-12);
    EXPECT_THROW(a.mixed_with(b, 1.5), riskkit::ValidationError);
    EXPECT_EQ(a.mixed_with(b, 1.0).canonical(), a.canonical());
}
