#pragma once

#include <functional>
#include <span>
#include <vector>

namespace riskkit::calibration {

struct NelderMeadOptions {
    /// Stop when the spread of simplex values and the simplex diameter are
    /// both below this, relative to their magnitudes.
    double relative_tolerance = 1e-6;
    int max_iterations = 5000;
    /// Initial edge length as a fraction of each box width.
    double initial_step = 0.1;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
    /// Largest vertex distance from the best vertex at termination.
    double simplex_size = 0.0;
    bool converged = false;
};

/// Box-constrained Nelder-Mead minimisation; trial points are clamped into
/// [lower, upper]. Deterministic for a given start.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, std::span<const double> lower,
                             std::span<const double> upper, const NelderMeadOptions& options = {});

} // namespace riskkit::calibration
