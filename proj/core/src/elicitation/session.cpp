#include "riskkit/elicitation/session.hpp"

#include "riskkit/calibration/choice_model.hpp"
#include "riskkit/error.hpp"
#include "riskkit/random.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace riskkit::elicitation {
namespace {

constexpr int kPairCandidates = 16;
constexpr std::array kPairOutcomes{0.0, 5.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 80.0, 100.0};
constexpr std::array kPairProbabilities{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

Question binary_question(std::string id, std::string prompt, Lottery a, Lottery b, int row = 0) {
    Question q;
    q.id = std::move(id);
    q.kind = Question::Kind::Binary;
    q.prompt = std::move(prompt);
    q.options = {{"A", std::move(a)}, {"B", std::move(b)}};
    q.row = row;
    return q;
}

Question mpl_question(const SessionState& s, int row) {
    const auto list = holt_laury_list(s.options.scale);
    const auto& r = list.rows[static_cast<std::size_t>(row - 1)];
    return binary_question(fmt::format("mpl-row-{}", row), "Which option do you prefer?", r.option_a,
                           r.option_b, row);
}

Question pairs_question(const SessionState& s) {
    const auto k = s.answers.size();
    const auto model = s.current_fit ? s.current_fit->model : models::ModelSpec::eu();
    const double sharpness = s.current_fit ? s.current_fit->choice_sharpness : 1.0;
    std::optional<std::pair<Lottery, Lottery>> chosen;
    double best_gap = 2.0;
    for (int c = 0; c < kPairCandidates; ++c) {
        auto pair = random_pair(derive_seed(s.options.seed, k, static_cast<std::uint64_t>(c)),
                                kPairOutcomes, kPairProbabilities);
        const double gap =
            std::abs(calibration::choice_probability(pair.first, pair.second, model, sharpness) - 0.5);
        if (gap < best_gap) {
            best_gap = gap;
            chosen = std::move(pair);
        }
    }
    return binary_question(fmt::format("pairs-{}", k + 1), "Which option do you prefer?",
                           std::move(chosen->first), std::move(chosen->second));
}

/// Next step ignoring any pending question.
NextStep plan_next(const SessionState& s) {
    if (static_cast<int>(s.answers.size()) >= s.options.budget) {
        return Done{};
    }
    switch (s.protocol) {
    case Protocol::MPL:
        if (s.bracket_low > s.bracket_high) {
            return Done{};
        }
        return mpl_question(s, (s.bracket_low + s.bracket_high) / 2);
    case Protocol::RandomPairs:
        return pairs_question(s);
    case Protocol::OrderedMenu: {
        if (!s.answers.empty()) {
            return Done{};
        }
        Question q;
        q.id = "menu-1";
        q.kind = Question::Kind::Menu;
        q.prompt = s.options.menu == MenuKind::Investment
                       ? "You win 100,000 euros. How much would you invest in an asset that doubles or "
                         "halves with equal chances?"
                       : "Which of these options do you prefer?";
        q.options = ordered_menu(s.options.menu);
        return q;
    }
    case Protocol::GeneralRisk: {
        if (!s.answers.empty()) {
            return Done{};
        }
        Question q;
        q.id = "general-1";
        q.kind = Question::Kind::Scale;
        q.prompt = std::string(kGeneralRiskPrompt);
        return q;
    }
    case Protocol::Allais: {
        if (s.answers.size() >= 2) {
            return Done{};
        }
        const auto battery = allais_battery();
        const auto& bq = battery[s.answers.size()];
        return binary_question(bq.id, "Which bet do you prefer?", bq.option_a, bq.option_b);
    }
    }
    return Done{};
}

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ValidationError(fmt::format("{} must be an integer, got '{}'", what, text));
    }
    return value;
}

const Question* find_question(const SessionState& s, std::string_view id) {
    const auto it = std::find_if(s.asked.begin(), s.asked.end(),
                                 [id](const Question& q) { return q.id == id; });
    return it == s.asked.end() ? nullptr : &*it;
}

const Answer* find_answer(const SessionState& s, std::string_view id) {
    const auto it = std::find_if(s.answers.begin(), s.answers.end(),
                                 [id](const Answer& a) { return a.question_id == id; });
    return it == s.answers.end() ? nullptr : &*it;
}

/// Canonical response text after validation against the question.
std::string normalize_response(const Question& q, std::string_view response) {
    switch (q.kind) {
    case Question::Kind::Binary:
        return std::string(1, to_char(parse_choice(response)));
    case Question::Kind::Menu: {
        for (std::size_t i = 0; i < q.options.size(); ++i) {
            if (q.options[i].label == response) {
                return std::to_string(i);
            }
        }
        const int index = parse_int(response, "menu response");
        if (index < 0 || index >= static_cast<int>(q.options.size())) {
            throw ValidationError(
                fmt::format("menu response {} outside 0..{}", index, q.options.size() - 1));
        }
        return std::to_string(index);
    }
    case Question::Kind::Scale: {
        const int score = parse_int(response, "scale response");
        if (score < q.scale_min || score > q.scale_max) {
            throw ValidationError(
                fmt::format("scale response {} outside {}..{}", score, q.scale_min, q.scale_max));
        }
        return std::to_string(score);
    }
    }
    return std::string(response);
}

} // namespace

std::string_view to_string(SessionStatus s) noexcept {
    return s == SessionStatus::Open ? "open" : "complete";
}

SessionStatus parse_session_status(std::string_view text) {
    if (text == "open") {
        return SessionStatus::Open;
    }
    if (text == "complete") {
        return SessionStatus::Complete;
    }
    throw ValidationError(fmt::format("unknown session status '{}'", text));
}

std::string_view to_string(Question::Kind k) noexcept {
    switch (k) {
    case Question::Kind::Binary: return "binary";
    case Question::Kind::Menu: return "menu";
    case Question::Kind::Scale: return "scale";
    }
    return "?";
}

SessionState new_session(std::string id, Protocol protocol, SessionOptions options) {
    if (options.budget < 1) {
        throw ValidationError(fmt::format("question budget must be >= 1, got {}", options.budget));
    }
    if (!(options.scale > 0.0)) {
        throw ValidationError(fmt::format("price list scale must be > 0, got {}", options.scale));
    }
    SessionState s;
    s.id = std::move(id);
    s.protocol = protocol;
    s.options = options;
    return s;
}

NextStep adaptive_next_question(const SessionState& state) {
    if (state.status == SessionStatus::Complete) {
        throw ConflictError(fmt::format("session {} is complete", state.id));
    }
    if (state.asked.size() > state.answers.size()) {
        return state.asked.back();
    }
    return plan_next(state);
}

void mark_asked(SessionState& state, const Question& question) {
    if (state.status == SessionStatus::Complete) {
        throw ConflictError(fmt::format("session {} is complete", state.id));
    }
    if (state.asked.size() > state.answers.size()) {
        if (state.asked.back().id == question.id) {
            return;
        }
        throw ConflictError(fmt::format("question {} is still pending", state.asked.back().id));
    }
    if (find_question(state, question.id) != nullptr) {
        throw ConflictError(fmt::format("question {} was already asked", question.id));
    }
    state.asked.push_back(question);
}

void apply_answer(SessionState& state, std::string_view question_id, std::string_view response,
                  std::string timestamp) {
    if (state.status == SessionStatus::Complete) {
        throw ConflictError(fmt::format("session {} is complete and accepts no answers", state.id));
    }
    const Question* q = find_question(state, question_id);
    if (q == nullptr) {
        throw ValidationError(
            fmt::format("question '{}' was not asked in session {}", question_id, state.id));
    }
    if (find_answer(state, question_id) != nullptr) {
        throw ConflictError(fmt::format("question '{}' was already answered", question_id));
    }
    const std::string normalized = normalize_response(*q, response);
    const int row = q->row;
    state.answers.push_back({std::string(question_id), normalized, std::move(timestamp)});

    if (state.protocol == Protocol::MPL && row > 0) {
        if (normalized == "A") {
            state.bracket_low = std::max(state.bracket_low, row + 1);
        } else {
            state.bracket_high = std::min(state.bracket_high, row - 1);
        }
    }
    if (state.protocol == Protocol::RandomPairs) {
        const auto records = choice_records(state);
        state.current_fit = calibration::fit(records, models::Family::REU, session_fit_options());
    }
    if (std::holds_alternative<Done>(plan_next(state))) {
        state.status = SessionStatus::Complete;
    }
}

std::vector<ChoiceRecord> choice_records(const SessionState& state) {
    std::vector<ChoiceRecord> out;
    for (const auto& a : state.answers) {
        const Question* q = find_question(state, a.question_id);
        if (q == nullptr || q->kind != Question::Kind::Binary) {
            continue;
        }
        out.push_back({state.id, q->id, state.protocol, q->options[0].lottery, q->options[1].lottery,
                       parse_choice(a.response), a.timestamp});
    }
    return out;
}

calibration::FitOptions session_fit_options() {
    calibration::FitOptions options;
    options.grid_points = 8;
    options.sharpness_grid_points = 8;
    options.refine_starts = 1;
    return options;
}

RiskClass risk_class_for_model(const models::ModelSpec& model) {
    const auto list = holt_laury_list(1.0);
    int safe_choices = 0;
    for (const auto& row : list.rows) {
        if (model.value(row.option_a) >= model.value(row.option_b)) {
            ++safe_choices;
        }
    }
    return risk_class_for_switch_row(safe_choices + 1);
}

SessionResults summarize(const SessionState& state) {
    SessionResults r;
    switch (state.protocol) {
    case Protocol::MPL: {
        if (state.bracket_low > state.bracket_high) {
            std::vector<Choice> implied(kHoltLauryRows, Choice::B);
            std::fill_n(implied.begin(), state.bracket_low - 1, Choice::A);
            r.switch_point = switch_point(implied);
            r.risk_class = risk_class_for_switch_row(*r.switch_point->switch_row);
        }
        const auto records = choice_records(state);
        if (!records.empty()) {
            r.fit = calibration::fit(records, models::Family::REU, session_fit_options());
        }
        break;
    }
    case Protocol::RandomPairs:
        r.fit = state.current_fit;
        if (r.fit) {
            r.risk_class = risk_class_for_model(r.fit->model);
        }
        break;
    case Protocol::OrderedMenu:
        if (!state.answers.empty() && !state.asked.empty()) {
            const auto index = std::stoul(state.answers.front().response);
            const auto& options = state.asked.front().options;
            r.menu_choice = options.at(index).label;
            // Menu position mapped onto the 0-10 willingness scale: the
            // investment menu runs safe to risky, the abstract one risky to safe.
            const int last = static_cast<int>(options.size()) - 1;
            const int riskiness = state.options.menu == MenuKind::Investment
                                      ? static_cast<int>(index)
                                      : last - static_cast<int>(index);
            r.risk_class = dohmen_classify(static_cast<int>(std::lround(10.0 * riskiness / last)));
        }
        break;
    case Protocol::GeneralRisk:
        if (!state.answers.empty()) {
            r.general_risk_score = parse_int(state.answers.front().response, "score");
            r.risk_class = dohmen_classify(*r.general_risk_score);
        }
        break;
    case Protocol::Allais:
        if (state.answers.size() == 2) {
            std::optional<Choice> first, second;
            for (const auto& a : state.answers) {
                (a.question_id == "allais-1" ? first : second) = parse_choice(a.response);
            }
            r.allais = allais_consistency(first, second);
        }
        break;
    }
    return r;
}

} // namespace riskkit::elicitation
