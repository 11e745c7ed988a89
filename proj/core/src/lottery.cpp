#include "riskkit/lottery.hpp"

#include "riskkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>

namespace riskkit {

Lottery::Lottery(std::vector<Branch> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) {
        throw ValidationError("lottery must have at least one branch");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        const auto& b = branches_[i];
        if (!std::isfinite(b.probability) || b.probability < 0.0 || b.probability > 1.0) {
            throw ValidationError(
                fmt::format("branch {} has probability {} outside [0, 1]", i, b.probability));
        }
        if (!std::isfinite(b.outcome)) {
            throw ValidationError(fmt::format("branch {} has non-finite outcome", i));
        }
        total += b.probability;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
        throw ValidationError(fmt::format("lottery probabilities sum to {:.12g}, expected 1", total));
    }
}

Lottery Lottery::sure(double outcome) { return Lottery({{1.0, outcome}}); }

Lottery Lottery::binary(double p, double first, double second) {
    if (p >= 1.0) {
        return sure(first);
    }
    if (p <= 0.0) {
        return sure(second);
    }
    return Lottery({{p, first}, {1.0 - p, second}});
}

double Lottery::expected_value() const noexcept {
    double ev = 0.0;
    for (const auto& b : branches_) {
        ev += b.probability * b.outcome;
    }
    return ev;
}

double Lottery::min_outcome() const noexcept {
    return std::min_element(branches_.begin(), branches_.end(),
                            [](const Branch& a, const Branch& b) { return a.outcome < b.outcome; })
        ->outcome;
}

double Lottery::max_outcome() const noexcept {
    return std::max_element(branches_.begin(), branches_.end(),
                            [](const Branch& a, const Branch& b) { return a.outcome < b.outcome; })
        ->outcome;
}

bool Lottery::is_degenerate() const noexcept {
    const double first = branches_.front().outcome;
    return std::all_of(branches_.begin(), branches_.end(), [first](const Branch& b) {
        return b.probability == 0.0 || b.outcome == first;
    });
}

Lottery Lottery::canonical() const {
    std::map<double, double> merged;
    for (const auto& b : branches_) {
        if (b.probability > 0.0) {
            merged[b.outcome] += b.probability;
        }
    }
    std::vector<Branch> out;
    out.reserve(merged.size());
    for (const auto& [x, p] : merged) {
        out.push_back({p, x});
    }
    return Lottery(std::move(out));
}

Lottery Lottery::shifted(double delta) const {
    auto out = branches_;
    for (auto& b : out) {
        b.outcome += delta;
    }
    return Lottery(std::move(out));
}

Lottery Lottery::mixed_with(const Lottery& other, double weight) const {
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw ValidationError(fmt::format("mixture weight {} outside [0, 1]", weight));
    }
    std::vector<Branch> out;
    out.reserve(branches_.size() + other.branches_.size());
    for (const auto& b : branches_) {
        out.push_back({weight * b.probability, b.outcome});
    }
    for (const auto& b : other.branches_) {
        out.push_back({(1.0 - weight) * b.probability, b.outcome});
    }
    return Lottery(std::move(out));
}

} // namespace riskkit
