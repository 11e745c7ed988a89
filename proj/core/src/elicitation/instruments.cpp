#include "riskkit/elicitation/instruments.hpp"

#include "riskkit/error.hpp"
#include "riskkit/random.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace riskkit::elicitation {
namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

Lottery two_branch(double p, double first, double q, double second) {
    std::vector<Branch> branches;
    if (p > 0.0) {
        branches.push_back({p, first});
    }
    if (q > 0.0) {
        branches.push_back({q, second});
    }
    return Lottery(std::move(branches));
}

constexpr std::array kRiskClasses{
    RiskClass{RiskCategory::ExtremeAversion, 0, 1},
    RiskClass{RiskCategory::AdditionalAversion, 2, 3},
    RiskClass{RiskCategory::Default, 4, 6},
    RiskClass{RiskCategory::AdditionalLove, 7, 8},
    RiskClass{RiskCategory::ExtremeLove, 9, 10},
};

} // namespace

char to_char(Choice c) noexcept { return c == Choice::A ? 'A' : 'B'; }

Choice parse_choice(std::string_view text) {
    if (text == "A" || text == "a") {
        return Choice::A;
    }
    if (text == "B" || text == "b") {
        return Choice::B;
    }
    throw ValidationError(fmt::format("choice must be A or B, got '{}'", text));
}

void PriceList::validate() const {
    if (rows.size() < 2) {
        throw ValidationError("price list needs at least two rows");
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].ev_difference() < rows[i - 1].ev_difference())) {
            throw ValidationError(fmt::format(
                "EV(A) - EV(B) must strictly decrease down the list (rows {} and {})", i, i + 1));
        }
    }
}

std::vector<BinaryQuestion> PriceList::questions() const {
    std::vector<BinaryQuestion> out;
    out.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.push_back({fmt::format("{}-row-{}", label, i + 1), rows[i].option_a, rows[i].option_b});
    }
    return out;
}

double round_to_cents(double amount) {
    const double scaled = amount * 100.0;
    return std::round(scaled + std::copysign(1e-7, scaled)) / 100.0;
}

PriceList holt_laury_list(double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw ValidationError(fmt::format("price list scale must be > 0, got {}", scale));
    }
    PriceList list{"mpl", scale, {}};
    list.rows.reserve(kHoltLauryRows);
    for (int i = 1; i <= kHoltLauryRows; ++i) {
        const double p = i / 10.0;
        const double q = (kHoltLauryRows - i) / 10.0;
        list.rows.push_back({two_branch(p, 2.00 * scale, q, 1.60 * scale),
                             two_branch(p, 3.85 * scale, q, 0.10 * scale)});
    }
    list.validate();
    return list;
}

std::string_view to_string(RiskAttitude a) noexcept {
    switch (a) {
    case RiskAttitude::Averse: return "averse";
    case RiskAttitude::Neutral: return "neutral";
    case RiskAttitude::Seeking: return "seeking";
    case RiskAttitude::Inconsistent: return "inconsistent";
    }
    return "?";
}

SwitchPoint switch_point(std::span<const Choice> choices, std::size_t rows, int neutral_row) {
    if (choices.size() != rows) {
        throw ValidationError(
            fmt::format("expected one choice per row ({}), got {}", rows, choices.size()));
    }
    SwitchPoint result;
    bool reversed = false;
    for (std::size_t i = 1; i < choices.size(); ++i) {
        if (choices[i - 1] == Choice::A && choices[i] == Choice::B) {
            ++result.crossovers;
        } else if (choices[i - 1] == Choice::B && choices[i] == Choice::A) {
            reversed = true;
        }
    }
    if (reversed) {
        result.attitude = RiskAttitude::Inconsistent;
        return result;
    }
    const auto first_b = std::find(choices.begin(), choices.end(), Choice::B);
    const int row = static_cast<int>(first_b - choices.begin()) + 1;
    result.switch_row = row;
    result.attitude = row == neutral_row ? RiskAttitude::Neutral
                      : row > neutral_row ? RiskAttitude::Averse
                                          : RiskAttitude::Seeking;
    return result;
}

std::pair<Lottery, Lottery> random_pair(std::uint64_t seed, std::span<const double> outcome_grid,
                                        std::span<const double> probability_grid) {
    if (outcome_grid.empty() || probability_grid.empty()) {
        throw ValidationError("random_pair needs nonempty outcome and probability grids");
    }
    for (double p : probability_grid) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError(fmt::format("probability grid value {} outside [0, 1]", p));
        }
    }
    const std::set<double> distinct(outcome_grid.begin(), outcome_grid.end());
    if (distinct.size() < 2) {
        throw ValidationError("outcome grid has a single value; no two distinct lotteries exist");
    }
    Rng rng(seed);
    const auto draw = [&] {
        const double p = probability_grid[rng.index(probability_grid.size())];
        const double x1 = outcome_grid[rng.index(outcome_grid.size())];
        const double x2 = outcome_grid[rng.index(outcome_grid.size())];
        return Lottery::binary(p, x1, x2);
    };
    Lottery first = draw();
    // Distinct outcomes guarantee a distinct draw exists; the cap only bounds
    // pathological grids such as {0, 1} probabilities with near-equal outcomes.
    for (int attempt = 0; attempt < 4096; ++attempt) {
        Lottery second = draw();
        if (second.canonical() != first.canonical()) {
            return {std::move(first), std::move(second)};
        }
    }
    throw ValidationError("could not draw two distinct lotteries from the grids");
}

std::vector<MenuOption> ordered_menu(MenuKind kind) {
    if (kind == MenuKind::Abstract) {
        return {
            {"A", Lottery({{0.1, 100.0}, {0.9, 0.0}})},
            {"B", Lottery({{0.5, 10.0}, {0.5, 1.0}})},
            {"C", Lottery::sure(4.0)},
        };
    }
    constexpr double kWindfall = 100000.0;
    std::vector<MenuOption> out;
    for (int step = 0; step <= 5; ++step) {
        const double invested = 20000.0 * step;
        const double kept = kWindfall - invested;
        Lottery lottery = invested == 0.0
                              ? Lottery::sure(kWindfall)
                              : Lottery({{0.5, kept + 2.0 * invested}, {0.5, kept + 0.5 * invested}});
        out.push_back({fmt::format("invest {}", static_cast<long>(invested)), std::move(lottery)});
    }
    return out;
}

MenuKind parse_menu_kind(std::string_view text) {
    const auto s = lower(text);
    if (s == "abstract") {
        return MenuKind::Abstract;
    }
    if (s == "investment") {
        return MenuKind::Investment;
    }
    throw ValidationError(fmt::format("unknown menu kind '{}' (abstract or investment)", text));
}

std::string_view to_string(RiskCategory c) noexcept {
    switch (c) {
    case RiskCategory::ExtremeAversion: return "ExtremeAversion";
    case RiskCategory::AdditionalAversion: return "AdditionalAversion";
    case RiskCategory::Default: return "Default";
    case RiskCategory::AdditionalLove: return "AdditionalLove";
    case RiskCategory::ExtremeLove: return "ExtremeLove";
    }
    return "?";
}

RiskCategory parse_risk_category(std::string_view text) {
    for (const auto& rc : kRiskClasses) {
        if (lower(to_string(rc.category)) == lower(text)) {
            return rc.category;
        }
    }
    throw ValidationError(fmt::format("unknown risk class '{}'", text));
}

std::span<const RiskClass> risk_classes() { return kRiskClasses; }

RiskClass risk_class(RiskCategory category) {
    return kRiskClasses[static_cast<std::size_t>(category)];
}

RiskClass dohmen_classify(int score) {
    for (const auto& rc : kRiskClasses) {
        if (score >= rc.score_min && score <= rc.score_max) {
            return rc;
        }
    }
    throw ValidationError(fmt::format("general risk score must be an integer in 0..10, got {}", score));
}

RiskClass risk_class_for_switch_row(int switch_row) {
    if (switch_row < 1) {
        throw ValidationError(fmt::format("switch row must be >= 1, got {}", switch_row));
    }
    const int safe_choices = switch_row - 1;
    if (safe_choices <= 1) {
        return risk_class(RiskCategory::ExtremeLove);
    }
    if (safe_choices <= 3) {
        return risk_class(RiskCategory::AdditionalLove);
    }
    if (safe_choices == 4) {
        return risk_class(RiskCategory::Default);
    }
    if (safe_choices <= 6) {
        return risk_class(RiskCategory::AdditionalAversion);
    }
    return risk_class(RiskCategory::ExtremeAversion);
}

std::array<BinaryQuestion, 2> allais_battery() {
    constexpr double kMillion = 1e6;
    return {{
        {"allais-1", Lottery::sure(kMillion),
         Lottery({{0.89, kMillion}, {0.01, 0.0}, {0.10, 5 * kMillion}})},
        {"allais-2", Lottery({{0.89, 0.0}, {0.11, kMillion}}),
         Lottery({{0.9, 0.0}, {0.1, 5 * kMillion}})},
    }};
}

AllaisResult allais_consistency(std::optional<Choice> first, std::optional<Choice> second) {
    if (!first || !second) {
        throw ValidationError("Allais consistency needs answers to both questions");
    }
    AllaisResult r;
    r.pattern = fmt::format("{}{}", to_char(*first), *second == Choice::A ? 'C' : 'D');
    r.eu_consistent = *first == *second;
    return r;
}

} // namespace riskkit::elicitation
