#include "riskkit/error.hpp"
#include "riskkit/elicitation/session.hpp"

#include <gtest/gtest.h>

using namespace riskkit;
using namespace riskkit::elicitation;

namespace {

Question next_question(const SessionState& s) {
    const auto step = adaptive_next_question(s);
    EXPECT_TRUE(std::holds_alternative<Question>(step));
    return std::get<Question>(step);
}

void ask_and_answer(SessionState& s, std::string_view response) {
    const auto q = next_question(s);
    mark_asked(s, q);
    apply_answer(s, q.id, response, "2000-01-01T00:00:00Z");
}

/// Drives an MPL session answering row r with script[r - 1]; returns the number of questions.
int run_mpl(SessionState& s, std::string_view script) {
    int asked = 0;
    while (s.status == SessionStatus::Open) {
        const auto q = next_question(s);
        mark_asked(s, q);
        apply_answer(s, q.id, std::string(1, script[static_cast<std::size_t>(q.row - 1)]), "t");
        ++asked;
    }
    return asked;
}

} // namespace

TEST(MplSession, BisectionExamples) {
    auto s = new_session("s", Protocol::MPL);
    auto q = next_question(s);
    EXPECT_EQ(q.row, 5);
    EXPECT_EQ(q.id, "mpl-row-5");
    mark_asked(s, q);
    apply_answer(s, q.id, "A", "t");
    EXPECT_EQ(s.bracket_low, 6);
    EXPECT_EQ(s.bracket_high, 10);
    EXPECT_EQ(next_question(s).row, 8);
}

TEST(MplSession, PendingQuestionIsReturnedAgain) {
    auto s = new_session("s", Protocol::MPL);
    const auto q = next_question(s);
    mark_asked(s, q);
    EXPECT_EQ(next_question(s).id, q.id);
    mark_asked(s, q); // idempotent
    EXPECT_EQ(s.asked.size(), 1u);
}

TEST(MplSession, FindsEverySingleCrossoverPatternWithinFiveQuestions) {
    for (int switch_row = 1; switch_row <= 11; ++switch_row) {
        std::string script(10, 'B');
        for (int r = 1; r < switch_row; ++r) {
            script[static_cast<std::size_t>(r - 1)] = 'A';
        }
        auto s = new_session("s", Protocol::MPL);
        const int asked = run_mpl(s, script);
        EXPECT_LE(asked, 5) << script;
        const auto results = summarize(s);
        ASSERT_TRUE(results.switch_point.has_value()) << script;
        EXPECT_EQ(results.switch_point->switch_row, switch_row) << script;
        const auto direct = switch_point(std::vector<Choice>(
            [&] {
                std::vector<Choice> c;
                for (const char ch : script) {
                    c.push_back(ch == 'A' ? Choice::A : Choice::B);
                }
                return c;
            }()));
        EXPECT_EQ(results.switch_point->attitude, direct.attitude);
    }
}

TEST(MplSession, NeutralPatternGivesDefaultClass) {
    auto s = new_session("s", Protocol::MPL);
    run_mpl(s, "AAAABBBBBB");
    const auto r = summarize(s);
    EXPECT_EQ(r.switch_point->attitude, RiskAttitude::Neutral);
    EXPECT_EQ(r.risk_class->category, RiskCategory::Default);
    ASSERT_TRUE(r.fit.has_value());
    EXPECT_EQ(r.fit->model.family(), models::Family::REU);
}

TEST(Session, BudgetExhaustionEndsSession) {
    SessionOptions o;
    o.budget = 2;
    auto s = new_session("s", Protocol::MPL, o);
    ask_and_answer(s, "A");
    EXPECT_EQ(s.status, SessionStatus::Open);
    ask_and_answer(s, "A");
    EXPECT_EQ(s.status, SessionStatus::Complete);
    EXPECT_THROW(adaptive_next_question(s), ConflictError);
    EXPECT_FALSE(summarize(s).switch_point.has_value());
}

TEST(Session, AnswerValidation) {
    auto s = new_session("s", Protocol::MPL);
    EXPECT_THROW(apply_answer(s, "mpl-row-5", "A", "t"), ValidationError); // not asked
    const auto q = next_question(s);
    mark_asked(s, q);
    EXPECT_THROW(apply_answer(s, q.id, "C", "t"), ValidationError);
    EXPECT_TRUE(s.answers.empty());
    apply_answer(s, q.id, "b", "t");
    EXPECT_EQ(s.answers.back().response, "B");
    EXPECT_THROW(apply_answer(s, q.id, "A", "t"), ConflictError);
    EXPECT_THROW(new_session("x", Protocol::MPL, SessionOptions{1, 0, 1.0, MenuKind::Investment}),
                 ValidationError);
}

TEST(Session, CompleteSessionRejectsAnswers) {
    auto s = new_session("s", Protocol::GeneralRisk);
    ask_and_answer(s, "7");
    EXPECT_EQ(s.status, SessionStatus::Complete);
    EXPECT_THROW(apply_answer(s, "general-1", "3", "t"), ConflictError);
    const auto r = summarize(s);
    EXPECT_EQ(r.general_risk_score, 7);
    EXPECT_EQ(r.risk_class->category, RiskCategory::AdditionalLove);
}

TEST(Session, GeneralRiskRejectsOutOfRangeAndFractions) {
    auto s = new_session("s", Protocol::GeneralRisk);
    const auto q = next_question(s);
    EXPECT_EQ(q.kind, Question::Kind::Scale);
    EXPECT_EQ(q.prompt, kGeneralRiskPrompt);
    mark_asked(s, q);
    EXPECT_THROW(apply_answer(s, q.id, "11", "t"), ValidationError);
    EXPECT_THROW(apply_answer(s, q.id, "4.5", "t"), ValidationError);
}

TEST(Session, OrderedMenuClasses) {
    const std::array<RiskCategory, 6> investment{RiskCategory::ExtremeAversion, RiskCategory::AdditionalAversion,
                                                 RiskCategory::Default,         RiskCategory::Default,
                                                 RiskCategory::AdditionalLove,  RiskCategory::ExtremeLove};
    for (int i = 0; i < 6; ++i) {
        auto s = new_session("s", Protocol::OrderedMenu);
        ask_and_answer(s, std::to_string(i));
        EXPECT_EQ(s.status, SessionStatus::Complete);
        EXPECT_EQ(summarize(s).risk_class->category, investment[static_cast<std::size_t>(i)]) << i;
    }
    SessionOptions o;
    o.menu = MenuKind::Abstract;
    auto s = new_session("s", Protocol::OrderedMenu, o);
    ask_and_answer(s, "C");
    EXPECT_EQ(summarize(s).menu_choice, "C");
    EXPECT_EQ(summarize(s).risk_class->category, RiskCategory::ExtremeAversion);
}

TEST(Session, AllaisTwoQuestions) {
    auto s = new_session("s", Protocol::Allais);
    ask_and_answer(s, "A");
    ask_and_answer(s, "B");
    EXPECT_EQ(s.status, SessionStatus::Complete);
    const auto r = summarize(s);
    ASSERT_TRUE(r.allais.has_value());
    EXPECT_EQ(r.allais->pattern, "AD");
    EXPECT_FALSE(r.allais->eu_consistent);
}

TEST(PairsSession, SelectsInformativePairsAndFits) {
    SessionOptions o;
    o.seed = 99;
    o.budget = 6;
    auto s = new_session("s", Protocol::RandomPairs, o);
    auto again = new_session("s", Protocol::RandomPairs, o);
    const auto first = next_question(s);
    EXPECT_EQ(first.id, next_question(again).id);
    EXPECT_EQ(first.options[0].lottery, next_question(again).options[0].lottery);
    while (s.status == SessionStatus::Open) {
        const auto q = next_question(s);
        mark_asked(s, q);
        // Answer as an expected-value maximiser.
        apply_answer(s, q.id,
                     q.options[0].lottery.expected_value() >= q.options[1].lottery.expected_value() ? "A" : "B",
                     "t");
        ASSERT_TRUE(s.current_fit.has_value());
    }
    EXPECT_EQ(s.answers.size(), 6u);
    EXPECT_EQ(choice_records(s).size(), 6u);
    EXPECT_TRUE(summarize(s).risk_class.has_value());
}

TEST(RiskClassForModel, NeutralAndAverse) {
    EXPECT_EQ(risk_class_for_model(models::ModelSpec::eu()).category, RiskCategory::Default);
    EXPECT_EQ(risk_class_for_model(models::ModelSpec::reu(1.0, 3.0)).category, RiskCategory::ExtremeAversion);
}
