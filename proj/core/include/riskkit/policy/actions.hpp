#pragma once

#include "riskkit/lottery.hpp"
#include "riskkit/models/model_spec.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace riskkit::policy {

/// Ordered from safest to riskiest.
enum class RiskLabel { ExtremelySafe, Safe, Moderate, Risky, ExtremelyRisky };

std::string_view to_string(RiskLabel label) noexcept;
RiskLabel parse_risk_label(std::string_view text);

struct Action {
    std::string id;
    Lottery lottery;
    RiskLabel label = RiskLabel::Moderate;
};

struct ActionMenu {
    std::string domain;
    std::vector<Action> actions;

    /// Throws ValidationError for an empty menu or duplicate action ids.
    void validate() const;
};

/// Id of the action with the highest model value. Values within a relative
/// 1e-12 of each other count as tied and go to the safer label, then to menu order.
std::string choose_action(const ActionMenu& menu, const models::ModelSpec& model);

struct ActionSamples {
    std::string id;
    std::vector<double> samples;
};

/// Sample quantile with linear interpolation between order statistics
/// (Hyndman-Fan type 7). q in [0, 1].
double sample_quantile(std::span<const double> samples, double q);

inline constexpr double kDefaultWorstCaseQuantile = 0.05;

/// Labels actions by their worst-case quantile: a higher q-quantile is safer.
/// Ties at the first q are broken by the following entries of `q_grid`, then
/// by smaller sample standard deviation, then by input order. Ranks are
/// spread evenly over the five labels (a single action is extremely safe).
std::vector<RiskLabel> quantile_action_label(std::span<const ActionSamples> actions,
                                             std::span<const double> q_grid);
std::vector<RiskLabel> quantile_action_label(std::span<const ActionSamples> actions);

} // namespace riskkit::policy
