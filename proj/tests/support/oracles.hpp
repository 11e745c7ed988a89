#pragma once

// Reference computations written directly from the textbook definitions,
// deliberately in a different shape from the library code they check.

#include "riskkit/lottery.hpp"
#include "riskkit/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

namespace riskkit::testing {

using Fn = std::function<double(double)>;

inline double oracle_eu(const Lottery& l, const Fn& u) {
    double total = 0.0;
    for (const auto& b : l.branches()) {
        total += b.probability * u(b.outcome);
    }
    return total;
}

/// Decision-weight form: each distinct utility level gets r(P(U >= u)) - r(P(U > u)).
inline double oracle_reu(const Lottery& l, const Fn& u, const Fn& r) {
    std::map<double, double> mass; // utility -> probability
    for (const auto& b : l.branches()) {
        mass[u(b.outcome)] += b.probability;
    }
    double total = 0.0;
    for (const auto& [level, p] : mass) {
        double at_least = 0.0;
        double above = 0.0;
        for (const auto& [other, q] : mass) {
            if (other >= level) {
                at_least += q;
            }
            if (other > level) {
                above += q;
            }
        }
        total += (r(std::min(at_least, 1.0)) - r(std::min(above, 1.0))) * level;
    }
    return total;
}

inline double oracle_wlu(const Lottery& l, const Fn& u, const Fn& w) {
    double num = 0.0;
    double den = 0.0;
    for (const auto& b : l.branches()) {
        num += w(b.outcome) * b.probability * u(b.outcome);
        den += w(b.outcome) * b.probability;
    }
    return num / den;
}

inline double quartic_weight(double x) { return 1.0 / (1.0 + std::pow(x, 0.25)); }

/// Type-7 quantile through nth_element.
inline double oracle_quantile(std::vector<double> xs, double q) {
    const double h = q * static_cast<double>(xs.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    std::nth_element(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(lo), xs.end());
    const double a = xs[lo];
    if (lo + 1 >= xs.size()) {
        return a;
    }
    const double b = *std::min_element(xs.begin() + static_cast<std::ptrdiff_t>(lo) + 1, xs.end());
    return a + (h - static_cast<double>(lo)) * (b - a);
}

inline double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

/// Random lottery with n in [min_branches, max_branches] and outcomes in [lo, hi].
/// Probabilities are normalised random weights with the last branch taking the remainder.
inline Lottery random_lottery(Rng& rng, std::size_t min_branches, std::size_t max_branches, double lo,
                              double hi) {
    const auto n = min_branches + rng.index(max_branches - min_branches + 1);
    std::vector<double> weights(n);
    double total = 0.0;
    for (auto& w : weights) {
        w = rng.uniform(0.05, 1.0);
        total += w;
    }
    std::vector<Branch> branches;
    double used = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = i + 1 == n ? std::max(0.0, 1.0 - used) : weights[i] / total;
        used += p;
        branches.push_back({p, rng.uniform(lo, hi)});
    }
    return Lottery(std::move(branches));
}

/// Like random_lottery but outcomes drawn from a small integer grid so ties occur.
inline Lottery random_grid_lottery(Rng& rng, std::size_t max_branches, int grid) {
    const auto n = 1 + rng.index(max_branches);
    std::vector<Branch> branches;
    double used = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = i + 1 == n ? std::max(0.0, 1.0 - used) : (1.0 - used) * rng.uniform(0.1, 0.9);
        used += p;
        branches.push_back({p, static_cast<double>(rng.index(static_cast<std::size_t>(grid)))});
    }
    return Lottery(std::move(branches));
}

} // namespace riskkit::testing
