#include "riskkit/models/evaluate.hpp"

#include "riskkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace riskkit::models {
namespace {

struct Ranked {
    double utility;
    double probability;
};

double checked_utility(const UtilityFunction& u, const Branch& b, std::size_t index) {
    if (!u.in_domain(b.outcome)) {
        throw DomainError(fmt::format("branch {} (outcome {}) lies outside the utility domain", index,
                                      b.outcome));
    }
    return u(b.outcome);
}

/// Ascending by utility, equal utilities merged.
std::vector<Ranked> rank_by_utility(const Lottery& lottery, const UtilityFunction& u) {
    std::vector<Ranked> ranked;
    ranked.reserve(lottery.size());
    const auto branches = lottery.branches();
    for (std::size_t i = 0; i < branches.size(); ++i) {
        ranked.push_back({checked_utility(u, branches[i], i), branches[i].probability});
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const Ranked& a, const Ranked& b) { return a.utility < b.utility; });
    std::vector<Ranked> merged;
    merged.reserve(ranked.size());
    for (const auto& r : ranked) {
        if (!merged.empty() && merged.back().utility == r.utility) {
            merged.back().probability += r.probability;
        } else {
            merged.push_back(r);
        }
    }
    return merged;
}

template <class TailTransform>
double rank_dependent(const std::vector<Ranked>& ranked, TailTransform transform) {
    // tails[i] = sum of probabilities from i upward, accumulated top-down.
    std::vector<double> tails(ranked.size());
    double tail = 0.0;
    for (std::size_t i = ranked.size(); i-- > 0;) {
        tail += ranked[i].probability;
        tails[i] = tail;
    }
    // The worst outcome is received with certainty.
    double value = ranked.front().utility;
    for (std::size_t i = 1; i < ranked.size(); ++i) {
        value += transform(tails[i]) * (ranked[i].utility - ranked[i - 1].utility);
    }
    return value;
}

} // namespace

double expected_utility(const Lottery& lottery, const UtilityFunction& u) {
    double total = 0.0;
    const auto branches = lottery.branches();
    for (std::size_t i = 0; i < branches.size(); ++i) {
        total += branches[i].probability * checked_utility(u, branches[i], i);
    }
    return total;
}

double expected_utility_rank_form(const Lottery& lottery, const UtilityFunction& u) {
    return rank_dependent(rank_by_utility(lottery, u), [](double p) { return p; });
}

double reu(const Lottery& lottery, const UtilityFunction& u, const RiskFunction& r) {
    return rank_dependent(rank_by_utility(lottery, u), [&r](double p) { return r(p); });
}

double wlu(const Lottery& lottery, const UtilityFunction& u, const OutcomeWeightFunction& w) {
    const auto branches = lottery.branches();
    std::vector<double> weights(branches.size());
    double denominator = 0.0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        try {
            weights[i] = w(branches[i].outcome);
        } catch (const DomainError& e) {
            throw DomainError(fmt::format("branch {}: {}", i, e.what()));
        }
        denominator += weights[i] * branches[i].probability;
    }
    if (!(denominator > 0.0) || !std::isfinite(denominator)) {
        throw DegenerateWeightError(
            fmt::format("relative-weight denominator is {}, expected > 0", denominator));
    }
    double total = 0.0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        total += (weights[i] / denominator) * branches[i].probability *
                 checked_utility(u, branches[i], i);
    }
    return total;
}

double pt_value(const Lottery& lottery, const ProspectSpec& spec) {
    spec.validate();
    const auto sum = [&spec](std::span<const Branch> branches) {
        double total = 0.0;
        for (const auto& b : branches) {
            total += spec.weighting(b.probability) * spec.value(b.outcome);
        }
        return total;
    };
    const auto branches = lottery.branches();
    // Strictly ascending outcomes with positive probabilities are already combined.
    const bool canonical = std::adjacent_find(branches.begin(), branches.end(),
                                              [](const Branch& a, const Branch& b) {
                                                  return b.outcome <= a.outcome;
                                              }) == branches.end() &&
                           std::all_of(branches.begin(), branches.end(),
                                       [](const Branch& b) { return b.probability > 0.0; });
    return canonical ? sum(branches) : sum(lottery.canonical().branches());
}

} // namespace riskkit::models
