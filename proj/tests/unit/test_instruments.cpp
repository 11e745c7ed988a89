#include "riskkit/error.hpp"
#include "riskkit/elicitation/instruments.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

using namespace riskkit;
using namespace riskkit::elicitation;

namespace {

std::vector<Choice> pattern(std::string_view s) {
    std::vector<Choice> out;
    for (const char c : s) {
        out.push_back(c == 'A' ? Choice::A : Choice::B);
    }
    return out;
}

} // namespace

TEST(HoltLaury, PrintedDifferences) {
    const std::array<double, 10> printed{1.17, 0.83, 0.50, 0.16, -0.18, -0.51, -0.85, -1.18, -1.52, -1.85};
    const auto list = holt_laury_list(1.0);
    ASSERT_EQ(list.rows.size(), 10u);
    for (std::size_t i = 0; i < 10; ++i) {
        const double d = list.rows[i].ev_difference();
        // Exact differences sit on the half cent; the printed table rounds them away from zero.
        EXPECT_LE(std::abs(d - printed[i]), 0.005 + 1e-9) << "row " << i + 1;
        EXPECT_DOUBLE_EQ(round_to_cents(d), printed[i]) << "row " << i + 1;
    }
    EXPECT_EQ(list.rows[9].option_a, Lottery::sure(2.0));
    EXPECT_EQ(list.rows[9].option_b, Lottery::sure(3.85));
}

TEST(HoltLaury, RowsMatchFormulaAndScale) {
    const auto list = holt_laury_list(20.0);
    for (int i = 1; i <= 10; ++i) {
        const auto& row = list.rows[static_cast<std::size_t>(i - 1)];
        const double p = i / 10.0;
        EXPECT_NEAR(row.option_a.expected_value(), p * 40.0 + (1 - p) * 32.0, 1e-9);
        EXPECT_NEAR(row.option_b.expected_value(), p * 77.0 + (1 - p) * 2.0, 1e-9);
    }
    EXPECT_NO_THROW(list.validate());
    EXPECT_THROW(holt_laury_list(0.0), ValidationError);
    EXPECT_THROW(holt_laury_list(-1.0), ValidationError);
    EXPECT_EQ(list.questions()[2].id, "mpl-row-3");
}

TEST(RoundToCents, HalvesAwayFromZero) {
    EXPECT_DOUBLE_EQ(round_to_cents(1.165), 1.17);
    EXPECT_DOUBLE_EQ(round_to_cents(-0.175), -0.18);
    EXPECT_DOUBLE_EQ(round_to_cents(0.164), 0.16);
    EXPECT_DOUBLE_EQ(round_to_cents(-1.514), -1.51);
}

TEST(SwitchPoint, Examples) {
    auto s = switch_point(pattern("AAAABBBBBB"));
    EXPECT_EQ(s.switch_row, 5);
    EXPECT_EQ(s.attitude, RiskAttitude::Neutral);
    s = switch_point(pattern("AAAAAAABBB"));
    EXPECT_EQ(s.switch_row, 8);
    EXPECT_EQ(s.attitude, RiskAttitude::Averse);
    s = switch_point(pattern("ABABBBBBBB"));
    EXPECT_FALSE(s.switch_row.has_value());
    EXPECT_EQ(s.crossovers, 2);
    EXPECT_EQ(s.attitude, RiskAttitude::Inconsistent);
    s = switch_point(pattern("AABBBBBBBB"));
    EXPECT_EQ(s.attitude, RiskAttitude::Seeking);
    s = switch_point(pattern("AAAAAAAAAA"));
    EXPECT_EQ(s.switch_row, 11);
    EXPECT_EQ(s.attitude, RiskAttitude::Averse);
    EXPECT_THROW(switch_point(pattern("AAAB")), ValidationError);
}

TEST(SwitchPoint, EvMaximiserSwitchesAtRowFive) {
    std::vector<Choice> choices;
    for (const auto& row : holt_laury_list(1.0).rows) {
        choices.push_back(row.option_a.expected_value() >= row.option_b.expected_value() ? Choice::A : Choice::B);
    }
    EXPECT_EQ(switch_point(choices).switch_row, 5);
}

TEST(RandomPair, DeterministicAndValid) {
    const std::array outcomes{0.0, 10.0, 50.0, 100.0};
    const std::array probabilities{0.2, 0.5, 0.8};
    const auto a = random_pair(42, outcomes, probabilities);
    const auto b = random_pair(42, outcomes, probabilities);
    EXPECT_EQ(a, b);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto [x, y] = random_pair(seed, outcomes, probabilities);
        ASSERT_NE(x.canonical(), y.canonical()) << seed;
    }
}

TEST(RandomPair, DegenerateGridsAreErrors) {
    const std::array one{5.0};
    const std::array sure{1.0};
    const std::array two{0.0, 1.0};
    const std::array<double, 0> none{};
    EXPECT_THROW(random_pair(1, one, sure), ValidationError);
    EXPECT_THROW(random_pair(1, none, sure), ValidationError);
    EXPECT_THROW(random_pair(1, two, none), ValidationError);
    const std::array bad{1.5};
    EXPECT_THROW(random_pair(1, two, bad), ValidationError);
}

TEST(OrderedMenu, Options) {
    const auto inv = ordered_menu(MenuKind::Investment);
    ASSERT_EQ(inv.size(), 6u);
    EXPECT_EQ(inv[0].lottery, Lottery::sure(100000.0));
    EXPECT_EQ(inv[5].lottery.canonical(), Lottery({{0.5, 50000.0}, {0.5, 200000.0}}));
    EXPECT_EQ(inv[2].lottery.canonical(), Lottery({{0.5, 80000.0}, {0.5, 140000.0}}));
    const auto abs = ordered_menu(MenuKind::Abstract);
    ASSERT_EQ(abs.size(), 3u);
    EXPECT_EQ(abs[2].lottery, Lottery::sure(4.0));
    EXPECT_DOUBLE_EQ(abs[0].lottery.expected_value(), 10.0);
    EXPECT_DOUBLE_EQ(abs[1].lottery.expected_value(), 5.5);
    EXPECT_THROW(parse_menu_kind("bonds"), ValidationError);
}

TEST(Dohmen, PartitionOfAllScores) {
    const std::array<RiskCategory, 11> expected{
        RiskCategory::ExtremeAversion, RiskCategory::ExtremeAversion, RiskCategory::AdditionalAversion,
        RiskCategory::AdditionalAversion, RiskCategory::Default, RiskCategory::Default,
        RiskCategory::Default, RiskCategory::AdditionalLove, RiskCategory::AdditionalLove,
        RiskCategory::ExtremeLove, RiskCategory::ExtremeLove};
    for (int s = 0; s <= 10; ++s) {
        const auto c = dohmen_classify(s);
        EXPECT_EQ(c.category, expected[static_cast<std::size_t>(s)]) << s;
        EXPECT_LE(c.score_min, s);
        EXPECT_GE(c.score_max, s);
    }
    int covered = 0;
    int next = 0;
    for (const auto& c : risk_classes()) {
        EXPECT_EQ(c.score_min, next);
        next = c.score_max + 1;
        covered += c.score_max - c.score_min + 1;
    }
    EXPECT_EQ(covered, 11);
    EXPECT_THROW(dohmen_classify(-1), ValidationError);
    EXPECT_THROW(dohmen_classify(11), ValidationError);
}

TEST(SwitchRowClass, NeutralRowIsDefault) {
    EXPECT_EQ(risk_class_for_switch_row(5).category, RiskCategory::Default);
    EXPECT_EQ(risk_class_for_switch_row(1).category, RiskCategory::ExtremeLove);
    EXPECT_EQ(risk_class_for_switch_row(4).category, RiskCategory::AdditionalLove);
    EXPECT_EQ(risk_class_for_switch_row(7).category, RiskCategory::AdditionalAversion);
    EXPECT_EQ(risk_class_for_switch_row(11).category, RiskCategory::ExtremeAversion);
}

TEST(Allais, BatteryBets) {
    const auto q = allais_battery();
    EXPECT_EQ(q[0].option_a, Lottery::sure(1e6));
    EXPECT_EQ(q[0].option_b.canonical(), Lottery({{0.01, 0.0}, {0.89, 1e6}, {0.10, 5e6}}));
    EXPECT_EQ(q[1].option_a.canonical(), Lottery({{0.89, 0.0}, {0.11, 1e6}}));
    EXPECT_EQ(q[1].option_b.canonical(), Lottery({{0.9, 0.0}, {0.1, 5e6}}));
}

TEST(Allais, ConsistencyFlagsExactlyTheCrossingPatterns) {
    EXPECT_FALSE(allais_consistency(Choice::A, Choice::B).eu_consistent);
    EXPECT_EQ(allais_consistency(Choice::A, Choice::B).pattern, "AD");
    EXPECT_TRUE(allais_consistency(Choice::A, Choice::A).eu_consistent);
    EXPECT_TRUE(allais_consistency(Choice::B, Choice::B).eu_consistent);
    EXPECT_FALSE(allais_consistency(Choice::B, Choice::A).eu_consistent);
    EXPECT_EQ(allais_consistency(Choice::B, Choice::A).pattern, "BC");
    for (const auto x : {Choice::A, Choice::B}) {
        for (const auto y : {Choice::A, Choice::B}) {
            const auto flip = [](Choice c) { return c == Choice::A ? Choice::B : Choice::A; };
            EXPECT_EQ(allais_consistency(x, y).eu_consistent,
                      allais_consistency(flip(x), flip(y)).eu_consistent);
        }
    }
    EXPECT_THROW(allais_consistency(Choice::A, std::nullopt), ValidationError);
}
