#include "riskkit/calibration/nelder_mead.hpp"

#include "riskkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace riskkit::calibration {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, std::span<const double> lower,
                             std::span<const double> upper, const NelderMeadOptions& options) {
    const std::size_t n = start.size();
    if (lower.size() != n || upper.size() != n) {
        throw ValidationError("Nelder-Mead bounds must match the start dimension");
    }
    NelderMeadResult result;
    const auto clamp = [&](std::vector<double>& x) {
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = std::clamp(x[j], lower[j], upper[j]);
        }
    };
    const auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        const double f = objective(x);
        return std::isnan(f) ? std::numeric_limits<double>::infinity() : f;
    };
    clamp(start);
    if (n == 0) {
        result.value = eval(start);
        result.x = std::move(start);
        result.converged = true;
        return result;
    }

    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t j = 0; j < n; ++j) {
        const double width = upper[j] - lower[j];
        double step = options.initial_step * (width > 0.0 ? width : std::max(1.0, std::abs(start[j])));
        if (start[j] + step > upper[j]) {
            step = -step;
        }
        simplex[j + 1][j] += step;
        clamp(simplex[j + 1]);
    }
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        values[i] = eval(simplex[i]);
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    const auto point = [&](double t, std::vector<double>& out, const std::vector<double>& worst) {
        for (std::size_t j = 0; j < n; ++j) {
            out[j] = centroid[j] + t * (worst[j] - centroid[j]);
        }
        clamp(out);
    };
    const auto scaled_size = [&](std::size_t best) {
        double size = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double width = upper[j] - lower[j];
                const double scale = width > 0.0 ? width : 1.0;
                size = std::max(size, std::abs(simplex[i][j] - simplex[best][j]) / scale);
            }
        }
        return size;
    };

    for (result.iterations = 0; result.iterations < options.max_iterations; ++result.iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[n - 1];

        const double f_best = values[best];
        const double f_worst = values[worst];
        const double f_spread = f_worst - f_best;
        const double size = scaled_size(best);
        if (std::isfinite(f_best) &&
            f_spread <= options.relative_tolerance * (std::abs(f_best) + 1e-12) &&
            size <= options.relative_tolerance) {
            result.converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                centroid[j] += simplex[i][j] / static_cast<double>(n);
            }
        }

        point(-1.0, trial, simplex[worst]);
        const double f_reflect = eval(trial);
        if (f_reflect < f_best) {
            point(-2.0, trial2, simplex[worst]);
            const double f_expand = eval(trial2);
            if (f_expand < f_reflect) {
                simplex[worst] = trial2;
                values[worst] = f_expand;
            } else {
                simplex[worst] = trial;
                values[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = f_reflect;
            continue;
        }
        // Contraction: outside if the reflection improved on the worst, inside otherwise.
        const bool outside = f_reflect < f_worst;
        point(outside ? -0.5 : 0.5, trial2, simplex[worst]);
        const double f_contract = eval(trial2);
        if (f_contract < (outside ? f_reflect : f_worst)) {
            simplex[worst] = trial2;
            values[worst] = f_contract;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
            }
            values[i] = eval(simplex[i]);
        }
    }

    const auto best_it = std::min_element(values.begin(), values.end());
    const auto best = static_cast<std::size_t>(best_it - values.begin());
    result.x = simplex[best];
    result.value = *best_it;
    result.simplex_size = scaled_size(best);
    return result;
}

} // namespace riskkit::calibration
