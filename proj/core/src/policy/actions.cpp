#include "riskkit/policy/actions.hpp"

#include "riskkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

namespace riskkit::policy {
namespace {

constexpr std::array<std::string_view, 5> kLabelNames{"extremely safe", "safe", "moderate", "risky",
                                                      "extremely risky"};

double sample_sd(std::span<const double> xs) {
    if (xs.size() < 2) {
        return 0.0;
    }
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    double ss = 0.0;
    for (const double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

} // namespace

std::string_view to_string(RiskLabel label) noexcept {
    return kLabelNames[static_cast<std::size_t>(label)];
}

RiskLabel parse_risk_label(std::string_view text) {
    for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
        if (kLabelNames[i] == text) {
            return static_cast<RiskLabel>(i);
        }
    }
    throw ValidationError(fmt::format("unknown risk label '{}'", text));
}

void ActionMenu::validate() const {
    if (actions.empty()) {
        throw ValidationError(fmt::format("action menu '{}' is empty", domain));
    }
    std::set<std::string_view> ids;
    for (const auto& a : actions) {
        if (!ids.insert(a.id).second) {
            throw ValidationError(fmt::format("duplicate action id '{}' in menu '{}'", a.id, domain));
        }
    }
}

std::string choose_action(const ActionMenu& menu, const models::ModelSpec& model) {
    menu.validate();
    std::vector<double> values;
    values.reserve(menu.actions.size());
    for (const auto& a : menu.actions) {
        values.push_back(model.value(a.lottery));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double scale = std::max({1.0, std::abs(values[i]), std::abs(values[best])});
        const double diff = values[i] - values[best];
        if (diff > 1e-12 * scale) {
            best = i;
        } else if (std::abs(diff) <= 1e-12 * scale && menu.actions[i].label < menu.actions[best].label) {
            best = i;
        }
    }
    return menu.actions[best].id;
}

double sample_quantile(std::span<const double> samples, double q) {
    if (samples.empty()) {
        throw ValidationError("quantile of an empty sample");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw ValidationError(fmt::format("quantile level {} outside [0, 1]", q));
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::vector<RiskLabel> quantile_action_label(std::span<const ActionSamples> actions,
                                             std::span<const double> q_grid) {
    if (actions.empty()) {
        throw ValidationError("no actions to label");
    }
    if (q_grid.empty()) {
        throw ValidationError("quantile grid is empty");
    }
    struct Key {
        std::vector<double> quantiles;
        double sd;
    };
    std::vector<Key> keys;
    keys.reserve(actions.size());
    for (const auto& a : actions) {
        if (a.samples.empty()) {
            throw ValidationError(fmt::format("action '{}' has no outcome samples", a.id));
        }
        Key k{{}, sample_sd(a.samples)};
        for (const double q : q_grid) {
            k.quantiles.push_back(sample_quantile(a.samples, q));
        }
        keys.push_back(std::move(k));
    }
    std::vector<std::size_t> order(actions.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a].quantiles != keys[b].quantiles) {
            return std::greater<>{}(keys[a].quantiles, keys[b].quantiles);
        }
        return keys[a].sd < keys[b].sd;
    });
    std::vector<RiskLabel> labels(actions.size(), RiskLabel::ExtremelySafe);
    const auto n = actions.size();
    for (std::size_t rank = 0; rank < n && n > 1; ++rank) {
        const auto tier = std::lround(4.0 * static_cast<double>(rank) / static_cast<double>(n - 1));
        labels[order[rank]] = static_cast<RiskLabel>(tier);
    }
    return labels;
}

std::vector<RiskLabel> quantile_action_label(std::span<const ActionSamples> actions) {
    constexpr std::array grid{kDefaultWorstCaseQuantile};
    return quantile_action_label(actions, grid);
}

} // namespace riskkit::policy
