#pragma once

#include "riskkit/lottery.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace riskkit::elicitation {

enum class Choice { A, B };

char to_char(Choice c) noexcept;
/// Accepts "A"/"B" in either case; throws ValidationError otherwise.
Choice parse_choice(std::string_view text);

/// A two-option question. Option A is the safe/left option by convention.
struct BinaryQuestion {
    std::string id;
    Lottery option_a;
    Lottery option_b;
};

struct PriceListRow {
    Lottery option_a;
    Lottery option_b;

    double ev_difference() const { return option_a.expected_value() - option_b.expected_value(); }
};

/// Ordered safe-vs-risky pairs whose EV advantage for A shrinks down the list.
struct PriceList {
    std::string label;
    double scale = 1.0;
    std::vector<PriceListRow> rows;

    /// At least two rows; EV(A) - EV(B) strictly decreasing.
    void validate() const;
    /// Row i (1-based) as a question with id "<label>-row-<i>".
    std::vector<BinaryQuestion> questions() const;
};

/// Ten-row low-payoff list: row i pays A = {i/10: 2.00, rest: 1.60},
/// B = {i/10: 3.85, rest: 0.10}, all multiplied by scale.
PriceList holt_laury_list(double scale = 1.0);

/// Rounds to the cent, halves away from zero. Amounts within 1e-9 of a half
/// cent count as the half (1.165 prints as 1.17 although its double is below).
double round_to_cents(double amount);

inline constexpr int kHoltLauryRows = 10;
/// Switch row of an expected-value maximiser on the ten-row list.
inline constexpr int kNeutralSwitchRow = 5;

enum class RiskAttitude { Averse, Neutral, Seeking, Inconsistent };

std::string_view to_string(RiskAttitude a) noexcept;

struct SwitchPoint {
    /// First row answered B (1-based); rows + 1 if B was never chosen.
    /// Empty when the answers cross more than once.
    std::optional<int> switch_row;
    /// Number of A-to-B transitions.
    int crossovers = 0;
    RiskAttitude attitude = RiskAttitude::Inconsistent;
};

/// Classifies one answer per row of a price list with `rows` rows. Any
/// return from B to A makes the pattern inconsistent.
SwitchPoint switch_point(std::span<const Choice> choices, std::size_t rows = kHoltLauryRows,
                         int neutral_row = kNeutralSwitchRow);

/// Two distinct two-branch lotteries {p: x1, 1-p: x2} drawn from the grids.
/// Throws ValidationError on an empty grid, probabilities outside [0, 1],
/// or an outcome grid with fewer than two distinct values (no distinct pair exists).
std::pair<Lottery, Lottery> random_pair(std::uint64_t seed, std::span<const double> outcome_grid,
                                        std::span<const double> probability_grid);

enum class MenuKind { Abstract, Investment };

struct MenuOption {
    std::string label;
    Lottery lottery;
};

/// Abstract: three bets from long shot to sure thing. Investment: invest
/// 0..100k of a 100k windfall in steps of 20k, the stake doubling or
/// halving with equal chance.
std::vector<MenuOption> ordered_menu(MenuKind kind);
MenuKind parse_menu_kind(std::string_view text);

enum class RiskCategory { ExtremeAversion, AdditionalAversion, Default, AdditionalLove, ExtremeLove };

std::string_view to_string(RiskCategory c) noexcept;
RiskCategory parse_risk_category(std::string_view text);

struct RiskClass {
    RiskCategory category;
    int score_min;
    int score_max;

    friend bool operator==(const RiskClass&, const RiskClass&) = default;
};

/// The five classes ordered from most averse to most risk-loving.
std::span<const RiskClass> risk_classes();
RiskClass risk_class(RiskCategory category);

inline constexpr std::string_view kGeneralRiskPrompt =
    "How willing are you to take risks, in general? Answer from 0 (completely unwilling) "
    "to 10 (completely willing).";

/// Maps a 0-10 self-reported willingness to take risks to a class.
RiskClass dohmen_classify(int score);

/// Class implied by a price-list switch row: 4 safe choices is the default
/// class; 5-6 and 7+ are additional and extreme aversion; 2-3 and 0-1 are
/// additional and extreme love.
RiskClass risk_class_for_switch_row(int switch_row);

/// Question 1 is A vs B, question 2 is C vs D (C and D carried as options A and B).
std::array<BinaryQuestion, 2> allais_battery();

struct AllaisResult {
    bool eu_consistent = false;
    /// Two letters, e.g. "AD": the first from {A,B}, the second from {C,D}.
    std::string pattern;
};

/// True iff the first choice and the second point the same way (A with C, B with D).
AllaisResult allais_consistency(std::optional<Choice> first, std::optional<Choice> second);

} // namespace riskkit::elicitation
