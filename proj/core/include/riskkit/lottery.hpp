#pragma once

#include <span>
#include <vector>

namespace riskkit {

struct Branch {
    double probability = 0.0;
    double outcome = 0.0;

    friend bool operator==(const Branch&, const Branch&) = default;
};

/// Finite probability distribution over monetary outcomes.
///
/// Construction validates: at least one branch, every probability in [0, 1],
/// probabilities summing to 1 within kProbabilityTolerance. Branch order is
/// preserved as given; evaluators that need a ranking sort internally.
class Lottery {
public:
    static constexpr double kProbabilityTolerance = 1e-9;

    explicit Lottery(std::vector<Branch> branches);

    static Lottery sure(double outcome);
    /// Two-branch lottery {p: high, 1-p: low}; zero-probability branches are dropped.
    static Lottery binary(double p, double first, double second);

    std::span<const Branch> branches() const noexcept { return branches_; }
    std::size_t size() const noexcept { return branches_.size(); }

    double expected_value() const noexcept;
    double min_outcome() const noexcept;
    double max_outcome() const noexcept;
    bool is_degenerate() const noexcept;

    /// Branches with identical outcomes merged, sorted ascending by outcome.
    Lottery canonical() const;
    Lottery shifted(double delta) const;
    /// Probabilistic mixture weight*this + (1-weight)*other.
    Lottery mixed_with(const Lottery& other, double weight) const;

    friend bool operator==(const Lottery&, const Lottery&) = default;

private:
    std::vector<Branch> branches_;
};

} // namespace riskkit
