#pragma once

#include "riskkit/calibration/fit.hpp"
#include "riskkit/elicitation/choice_record.hpp"
#include "riskkit/elicitation/instruments.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace riskkit::elicitation {

enum class SessionStatus { Open, Complete };

std::string_view to_string(SessionStatus s) noexcept;
SessionStatus parse_session_status(std::string_view text);

struct Question {
    enum class Kind { Binary, Menu, Scale };

    std::string id;
    Kind kind = Kind::Binary;
    std::string prompt;
    /// Binary questions carry options "A" and "B"; menus carry the ordered menu.
    std::vector<MenuOption> options;
    int scale_min = 0;
    int scale_max = 10;
    /// 1-based price-list row for MPL questions, 0 otherwise.
    int row = 0;
};

std::string_view to_string(Question::Kind k) noexcept;

struct Answer {
    std::string question_id;
    /// "A"/"B" for binary questions, an option index for menus, an integer for scales.
    std::string response;
    std::string timestamp;
};

inline constexpr int kDefaultQuestionBudget = 20;

struct SessionOptions {
    std::uint64_t seed = 1;
    int budget = kDefaultQuestionBudget;
    /// Payoff multiplier for the price list.
    double scale = 1.0;
    MenuKind menu = MenuKind::Investment;
};

/// Mutable state of one elicitation session (single writer).
struct SessionState {
    std::string id;
    Protocol protocol = Protocol::MPL;
    SessionOptions options;
    std::vector<Question> asked;
    std::vector<Answer> answers;
    /// MPL: rows whose answer is still unknown. Rows below are A, above are B;
    /// the switch row lies in [bracket_low, bracket_high + 1].
    int bracket_low = 1;
    int bracket_high = kHoltLauryRows;
    /// RandomPairs: current fitted model used to choose the next pair.
    std::optional<calibration::FitResult> current_fit;
    SessionStatus status = SessionStatus::Open;
};

SessionState new_session(std::string id, Protocol protocol, SessionOptions options = {});

struct Done {};
using NextStep = std::variant<Question, Done>;

/// Next question for an open session, or Done when the protocol has what it
/// needs or the question budget is spent. An asked-but-unanswered question is
/// returned again. MPL bisects the unknown rows; RandomPairs picks, among
/// seeded candidate pairs, the one whose predicted choice probability under
/// the current fit is nearest 0.5. Throws ConflictError for a complete session.
NextStep adaptive_next_question(const SessionState& state);

/// Records `question` as asked unless it is already the pending question.
void mark_asked(SessionState& state, const Question& question);

/// Validates and records a response to an asked question, updates the
/// adaptive summary and closes the session once nothing remains to ask.
void apply_answer(SessionState& state, std::string_view question_id, std::string_view response,
                  std::string timestamp);

/// Binary-choice answers as records (menu and scale answers are not choices between two options).
std::vector<ChoiceRecord> choice_records(const SessionState& state);

struct SessionResults {
    std::optional<SwitchPoint> switch_point;
    std::optional<int> general_risk_score;
    std::optional<std::string> menu_choice;
    std::optional<RiskClass> risk_class;
    std::optional<AllaisResult> allais;
    std::optional<calibration::FitResult> fit;
};

/// Results available from the answers recorded so far.
SessionResults summarize(const SessionState& state);

/// Class of a model through the switch row it produces on the ten-row price
/// list as a deterministic maximiser (ties to A).
RiskClass risk_class_for_model(const models::ModelSpec& model);

/// Fit options used for session profiles (smaller grid than the batch default).
calibration::FitOptions session_fit_options();

} // namespace riskkit::elicitation
