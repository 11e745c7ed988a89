#include "riskkit/calibration/simulation.hpp"
#include "riskkit/elicitation/instruments.hpp"
#include "riskkit/error.hpp"

#include <gtest/gtest.h>

using namespace riskkit;
using namespace riskkit::calibration;
using namespace riskkit::elicitation;

namespace {

std::vector<Choice> choices_on_price_list(const models::ModelSpec& model) {
    SimAgent agent;
    agent.model = model;
    agent.sharpness = SimAgent::kDeterministic;
    const auto questions = holt_laury_list(1.0).questions();
    std::vector<Choice> out;
    for (const auto& r : simulate_battery(agent, questions)) {
        out.push_back(r.chosen);
    }
    return out;
}

} // namespace

TEST(Simulation, DeterministicEvMaximiserPicksAFourTimes) {
    const auto c = choices_on_price_list(models::ModelSpec::eu());
    const std::vector<Choice> expected{Choice::A, Choice::A, Choice::A, Choice::A, Choice::B,
                                       Choice::B, Choice::B, Choice::B, Choice::B, Choice::B};
    EXPECT_EQ(c, expected);
}

TEST(Simulation, ReuAgentSwitchesLater) {
    const auto neutral = switch_point(choices_on_price_list(models::ModelSpec::eu()));
    const auto averse = switch_point(choices_on_price_list(models::ModelSpec::reu(1.0, 2.0)));
    ASSERT_TRUE(averse.switch_row.has_value());
    EXPECT_GT(*averse.switch_row, *neutral.switch_row);
    EXPECT_EQ(averse.attitude, RiskAttitude::Averse);
}

TEST(Simulation, SameSeedSameRecords) {
    SimAgent agent;
    agent.model = models::ModelSpec::reu(0.8, 2.0);
    agent.sharpness = 0.5;
    agent.seed = 77;
    const auto q = question_bank(QuestionBank::Gains, 100, 3);
    const auto a = simulate_battery(agent, q);
    const auto b = simulate_battery(agent, q);
    ASSERT_EQ(a.size(), 100u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].chosen, b[i].chosen);
        EXPECT_EQ(a[i].timestamp, b[i].timestamp);
    }
    agent.seed = 78;
    const auto c = simulate_battery(agent, q);
    int differ = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        differ += a[i].chosen != c[i].chosen ? 1 : 0;
    }
    EXPECT_GT(differ, 0);
}

TEST(Simulation, ChoiceFrequencyTracksProbability) {
    SimAgent agent;
    agent.model = models::ModelSpec::eu();
    agent.sharpness = 0.02;
    agent.seed = 5;
    const std::vector<BinaryQuestion> q(20000, BinaryQuestion{"q", Lottery::binary(0.5, 200.0, -100.0),
                                                              Lottery::sure(0.0)});
    int a = 0;
    for (const auto& r : simulate_battery(agent, q)) {
        a += r.chosen == Choice::A ? 1 : 0;
    }
    EXPECT_NEAR(a / 20000.0, 0.7311, 0.015);
}

TEST(QuestionBank, SizesAndDeterminism) {
    for (const auto kind : {QuestionBank::HoltLaury, QuestionBank::Gains, QuestionBank::MixedSign}) {
        const auto a = question_bank(kind, 57, 9);
        const auto b = question_bank(kind, 57, 9);
        ASSERT_EQ(a.size(), 57u);
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i].option_a, b[i].option_a);
            EXPECT_EQ(a[i].option_b, b[i].option_b);
        }
    }
    bool has_loss = false;
    for (const auto& q : question_bank(QuestionBank::MixedSign, 30, 1)) {
        has_loss = has_loss || q.option_a.min_outcome() < 0 || q.option_b.min_outcome() < 0;
    }
    EXPECT_TRUE(has_loss);
    EXPECT_EQ(parse_question_bank("hl"), QuestionBank::HoltLaury);
    EXPECT_THROW(parse_question_bank("nope"), ValidationError);
}
