#include "oracles.hpp"

#include "riskkit/error.hpp"
#include "riskkit/models/evaluate.hpp"
#include "riskkit/models/functions.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace riskkit;
using namespace riskkit::models;
namespace t = riskkit::testing;

namespace {

const Lottery kCoin({{0.5, 200.0}, {0.5, -100.0}});
const Lottery kLadder({{0.25, 1.0}, {0.25, 2.0}, {0.5, 3.0}});
const auto kLinear = UtilityFunction::linear();

double id(double x) { return x; }

} // namespace

TEST(ExpectedUtility, EqualValueBets) {
    EXPECT_NEAR(expected_utility(Lottery::binary(0.5, 10.0, -1.0), kLinear), 4.5, 1e-12);
    EXPECT_NEAR(expected_utility(Lottery({{0.65, 100.0}, {0.35, -100.0}}), kLinear), 30.0, 1e-12);
    EXPECT_NEAR(expected_utility(Lottery({{0.8, -200.0}, {0.2, 0.0}}), kLinear), -160.0, 1e-12);
    EXPECT_DOUBLE_EQ(expected_utility(Lottery::sure(9.0), UtilityFunction::power(0.5)), 3.0);
}

TEST(ExpectedUtility, DomainErrorNamesBranch) {
    try {
        expected_utility(Lottery({{0.5, 4.0}, {0.5, -1.0}}), UtilityFunction::power(0.5));
        FAIL() << "expected a domain error";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("branch 1"), std::string::npos) << e.what();
    }
}

TEST(RankForm, Examples) {
    EXPECT_NEAR(expected_utility_rank_form(kCoin, kLinear), 50.0, 1e-12);
    EXPECT_DOUBLE_EQ(expected_utility_rank_form(Lottery::sure(7.0), kLinear), 7.0);
    EXPECT_NEAR(expected_utility_rank_form(kLadder, kLinear), t::oracle_eu(kLadder, id), 1e-12);
    EXPECT_NEAR(expected_utility_rank_form(kLadder, kLinear), 2.25, 1e-12);
}

TEST(RankForm, MatchesExpectedUtilityOnRandomLotteries) {
    Rng rng(101);
    for (int i = 0; i < 10000; ++i) {
        const auto l = i % 2 == 0 ? t::random_lottery(rng, 1, 8, -500.0, 500.0) : t::random_grid_lottery(rng, 6, 5);
        ASSERT_NEAR(expected_utility_rank_form(l, kLinear), expected_utility(l, kLinear), 1e-9) << i;
    }
    const auto u = UtilityFunction::power(0.6);
    for (int i = 0; i < 2000; ++i) {
        const auto l = t::random_lottery(rng, 1, 8, 0.0, 1000.0);
        ASSERT_NEAR(expected_utility_rank_form(l, u), expected_utility(l, u), 1e-9) << i;
    }
}

TEST(Reu, CoinBetWorkedExample) {
    EXPECT_NEAR(reu(kCoin, kLinear, RiskFunction::power(2.0)), -25.0, 1e-9);
    EXPECT_NEAR(reu(kCoin, kLinear, RiskFunction::identity()), 50.0, 1e-9);
}

TEST(Reu, LadderAgainstDecisionWeightOracle) {
    const double expected = t::oracle_reu(kLadder, id, [](double p) { return p * p; });
    EXPECT_NEAR(expected, 1.8125, 1e-12);
    EXPECT_NEAR(reu(kLadder, kLinear, RiskFunction::power(2.0)), expected, 1e-12);
}

TEST(Reu, RandomLotteriesAgainstOracle) {
    Rng rng(7);
    for (int i = 0; i < 3000; ++i) {
        const double k = rng.uniform(0.2, 5.0);
        const double a = rng.uniform(0.2, 1.0);
        const auto l = t::random_grid_lottery(rng, 6, 8);
        const double got = reu(l, UtilityFunction::power(a), RiskFunction::power(k));
        const double want = t::oracle_reu(
            l, [a](double x) { return std::pow(x, a); }, [k](double p) { return std::pow(p, k); });
        ASSERT_NEAR(got, want, 1e-9) << i;
    }
}

TEST(Reu, IdentityRiskEqualsExpectedUtility) {
    Rng rng(8);
    for (int i = 0; i < 2000; ++i) {
        const auto l = t::random_lottery(rng, 1, 7, -100.0, 100.0);
        ASSERT_NEAR(reu(l, kLinear, RiskFunction::identity()), expected_utility(l, kLinear), 1e-9);
    }
}

TEST(Reu, ExponentDirection) {
    const double eu = expected_utility(kCoin, kLinear);
    EXPECT_LT(reu(kCoin, kLinear, RiskFunction::power(1.5)), eu);
    EXPECT_GT(reu(kCoin, kLinear, RiskFunction::power(0.5)), eu);
}

TEST(Wlu, QuarticExampleAgainstSpreadsheetOracle) {
    const Lottery l({{0.5, 0.0}, {0.5, 16.0}});
    EXPECT_NEAR(OutcomeWeightFunction::quartic_root_damping()(16.0), 1.0 / 3.0, 1e-15);
    const double want = t::oracle_wlu(l, id, t::quartic_weight);
    EXPECT_NEAR(want, 4.0, 1e-12);
    EXPECT_NEAR(wlu(l, kLinear, OutcomeWeightFunction::quartic_root_damping()), want, 1e-12);
    EXPECT_DOUBLE_EQ(wlu(Lottery::sure(16.0), kLinear, OutcomeWeightFunction::quartic_root_damping()), 16.0);
}

TEST(Wlu, ConstantWeightEqualsExpectedUtility) {
    Rng rng(9);
    for (int i = 0; i < 2000; ++i) {
        const auto l = t::random_lottery(rng, 1, 7, -100.0, 100.0);
        const auto w = OutcomeWeightFunction::constant(rng.uniform(0.1, 10.0));
        ASSERT_NEAR(wlu(l, kLinear, w), expected_utility(l, kLinear), 1e-9);
    }
}

TEST(Wlu, RandomLotteriesAgainstOracle) {
    Rng rng(10);
    for (int i = 0; i < 2000; ++i) {
        const auto l = t::random_lottery(rng, 1, 7, 0.0, 1e6);
        ASSERT_NEAR(wlu(l, kLinear, OutcomeWeightFunction::quartic_root_damping()),
                    t::oracle_wlu(l, id, t::quartic_weight), 1e-9 * std::max(1.0, l.max_outcome()));
    }
}

TEST(Wlu, Errors) {
    EXPECT_THROW(wlu(Lottery::binary(0.5, 1.0, -1.0), kLinear, OutcomeWeightFunction::quartic_root_damping()),
                 DomainError);
    EXPECT_THROW(OutcomeWeightFunction::constant(0.0), ValidationError);
    EXPECT_THROW(OutcomeWeightFunction::table({0.0, 1.0}, {1.0, -1.0}), ValidationError);
}

TEST(ProspectTheory, Examples) {
    ProspectSpec spec;
    spec.reference_point = 3.0;
    EXPECT_DOUBLE_EQ(pt_value(Lottery::sure(3.0), spec), 0.0);
    spec.reference_point = 0.0;
    spec.loss_aversion = 2.0;
    EXPECT_NEAR(pt_value(Lottery::binary(0.5, 10.0, -10.0), spec), -5.0, 1e-12);
    spec.loss_aversion = 1.0;
    EXPECT_NEAR(pt_value(Lottery::binary(0.5, 10.0, -10.0), spec), 0.0, 1e-12);
}

TEST(ProspectTheory, ReferencePointShiftsOutcomes) {
    ProspectSpec spec;
    spec.loss_aversion = 2.0;
    spec.reference_point = 5.0;
    // Gains of 5 and losses of 5 relative to the reference.
    EXPECT_NEAR(pt_value(Lottery::binary(0.5, 10.0, 0.0), spec), 0.5 * 5.0 - 0.5 * 2.0 * 5.0, 1e-12);
}

TEST(ProspectTheory, ValueShape) {
    ProspectSpec spec{0.0, 0.7, 0.8, 2.25, ProbabilityWeighting::identity()};
    for (double d = 0.5; d < 100.0; d += 0.5) {
        const double gain = spec.value(d + 0.5) - 2 * spec.value(d) + spec.value(d - 0.5);
        const double loss = spec.value(-d + 0.5) - 2 * spec.value(-d) + spec.value(-d - 0.5);
        ASSERT_LE(gain, 1e-12) << d;
        ASSERT_GE(loss, -1e-12) << d;
        ASSERT_GE(std::abs(spec.value(-d)), spec.value(d)) << d;
    }
    EXPECT_EQ(spec.value(0.0), 0.0);
}

TEST(ProspectTheory, MergesEqualOutcomesBeforeWeighting) {
    ProspectSpec spec;
    spec.weighting = ProbabilityWeighting::inverse_s(0.6);
    const Lottery split({{0.25, 10.0}, {0.25, 10.0}, {0.5, 0.0}});
    EXPECT_NEAR(pt_value(split, spec), pt_value(Lottery::binary(0.5, 10.0, 0.0), spec), 1e-12);
}

TEST(ProbabilityWeighting, EndpointsAndMonotone) {
    for (const double g : {0.3, 0.61, 0.9, 1.0}) {
        const auto w = ProbabilityWeighting::inverse_s(g);
        EXPECT_EQ(w(0.0), 0.0);
        EXPECT_NEAR(w(1.0), 1.0, 1e-15);
        double prev = 0.0;
        for (int i = 1; i <= 1000; ++i) {
            const double v = w(i / 1000.0);
            ASSERT_GT(v, prev);
            prev = v;
        }
    }
    EXPECT_THROW(ProbabilityWeighting::inverse_s(0.0), ValidationError);
    EXPECT_THROW(ProbabilityWeighting::inverse_s(1.2), ValidationError);
    // Inverse-S: small probabilities overweighted, large ones underweighted.
    const auto w = ProbabilityWeighting::inverse_s(0.6);
    EXPECT_GT(w(0.01), 0.01);
    EXPECT_LT(w(0.95), 0.95);
}

TEST(Functions, UtilityDomainsAndTables) {
    EXPECT_THROW(UtilityFunction::power(0.5)(-1.0), DomainError);
    EXPECT_THROW(UtilityFunction::power(0.0), ValidationError);
    const auto table = UtilityFunction::table({0.0, 10.0, 20.0}, {0.0, 5.0, 6.0});
    EXPECT_DOUBLE_EQ(table(5.0), 2.5);
    EXPECT_DOUBLE_EQ(table(15.0), 5.5);
    EXPECT_THROW(table(25.0), DomainError);
    EXPECT_THROW(UtilityFunction::table({0.0, 10.0}, {1.0, 1.0}), ValidationError);
    const auto r = RiskFunction::power(2.0);
    EXPECT_EQ(r(0.0), 0.0);
    EXPECT_EQ(r(1.0), 1.0);
    EXPECT_THROW(RiskFunction::power(-1.0), ValidationError);
}

TEST(Properties, ShiftingOutcomesUpRaisesEveryModel) {
    Rng rng(12);
    ProspectSpec pt{0.0, 0.8, 0.9, 2.0, ProbabilityWeighting::inverse_s(0.7)};
    for (int i = 0; i < 2000; ++i) {
        const auto l = t::random_lottery(rng, 1, 6, 0.0, 500.0);
        const double delta = rng.uniform(0.01, 50.0);
        const auto up = l.shifted(delta);
        const auto u = UtilityFunction::power(rng.uniform(0.2, 1.0));
        const auto r = RiskFunction::power(rng.uniform(0.2, 5.0));
        ASSERT_GT(expected_utility(up, u), expected_utility(l, u));
        ASSERT_GT(reu(up, u, r), reu(l, u, r));
        ASSERT_GT(wlu(up, u, OutcomeWeightFunction::quartic_root_damping()),
                  wlu(l, u, OutcomeWeightFunction::quartic_root_damping()));
        ASSERT_GT(pt_value(up, pt), pt_value(l, pt));
    }
}

TEST(Properties, SplittingABranchChangesNothing) {
    Rng rng(13);
    ProspectSpec pt{0.0, 0.8, 0.9, 2.0, ProbabilityWeighting::inverse_s(0.7)};
    for (int i = 0; i < 2000; ++i) {
        const auto l = t::random_lottery(rng, 1, 6, 0.0, 500.0);
        std::vector<Branch> split(l.branches().begin(), l.branches().end());
        const auto j = rng.index(split.size());
        const Branch half{split[j].probability / 2, split[j].outcome};
        split[j] = half;
        split.push_back(half);
        const Lottery s(split);
        const auto u = UtilityFunction::power(0.7);
        const auto r = RiskFunction::power(2.0);
        const auto w = OutcomeWeightFunction::quartic_root_damping();
        ASSERT_NEAR(expected_utility(s, u), expected_utility(l, u), 1e-9);
        ASSERT_NEAR(reu(s, u, r), reu(l, u, r), 1e-9);
        ASSERT_NEAR(wlu(s, u, w), wlu(l, u, w), 1e-9);
        ASSERT_NEAR(pt_value(s, pt), pt_value(l, pt), 1e-9);
    }
}

TEST(Properties, AllaisAlgebraHoldsForEveryUtilityAssignment) {
    Rng rng(14);
    for (int i = 0; i < 10000; ++i) {
        const double u1 = rng.uniform(0.001, 100.0);
        const double u5 = u1 + rng.uniform(0.0, 100.0);
        const auto u = UtilityFunction::table({0.0, 1e6, 5e6}, {0.0, u1, u5 + 1e-9});
        const double a = expected_utility(Lottery::sure(1e6), u);
        const double b = expected_utility(Lottery({{0.89, 1e6}, {0.01, 0.0}, {0.10, 5e6}}), u);
        const double c = expected_utility(Lottery({{0.89, 0.0}, {0.11, 1e6}}), u);
        const double d = expected_utility(Lottery({{0.9, 0.0}, {0.1, 5e6}}), u);
        // a - b and c - d are the same quantity .11u(1M) - .10u(5M) - .01u(0).
        ASSERT_NEAR(a - b, c - d, 1e-9 * std::max(1.0, u5));
    }
}
