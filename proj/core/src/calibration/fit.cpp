#include "riskkit/calibration/fit.hpp"

#include "riskkit/calibration/choice_model.hpp"
#include "riskkit/calibration/nelder_mead.hpp"
#include "riskkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

namespace riskkit::calibration {
namespace {

using elicitation::ChoiceRecord;
using models::Family;
using models::ModelSpec;

struct Observation {
    Lottery chosen;
    Lottery rejected;
};

struct Candidate {
    std::vector<double> x;
    double nll;
};

bool uses_power_utility(Family f) { return f != Family::PT; }

bool has_negative_outcome(std::span<const ChoiceRecord> records) {
    const auto negative = [](const Lottery& l) { return l.min_outcome() < 0.0; };
    return std::any_of(records.begin(), records.end(), [&](const ChoiceRecord& r) {
        return negative(r.option_a) || negative(r.option_b);
    });
}

ModelSpec base_model(Family family, const FitOptions& options) {
    std::vector<double> defaults;
    for (const auto& p : models::parameter_info(family)) {
        defaults.push_back(p.default_value);
    }
    auto model = ModelSpec::from_parameters(family, defaults);
    if (family == Family::PT) {
        model = model.with_reference_point(options.reference_point);
    }
    if (family == Family::WLU && options.wlu_weight) {
        model = model.with_weight(*options.wlu_weight);
    }
    return model;
}

/// Maps the optimiser vector (free parameters, then log sharpness) onto a model.
class Objective {
public:
    Objective(std::span<const Observation> observations, ModelSpec base, std::vector<std::size_t> free)
        : observations_(observations), base_(std::move(base)), free_(std::move(free)),
          full_(base_.parameters().begin(), base_.parameters().end()),
          diffs_(observations.size()) {}

    ModelSpec model_at(std::span<const double> x) const {
        std::vector<double> full = full_;
        for (std::size_t i = 0; i < free_.size(); ++i) {
            full[free_[i]] = x[i];
        }
        return base_.with_parameters(full);
    }

    /// Value differences (chosen minus rejected) for the model part of x.
    void compute_differences(std::span<const double> x) {
        const auto model = model_at(x);
        for (std::size_t i = 0; i < observations_.size(); ++i) {
            diffs_[i] = model.value(observations_[i].chosen) - model.value(observations_[i].rejected);
        }
    }

    double nll_from_differences(double sharpness) const {
        double total = 0.0;
        for (double d : diffs_) {
            total -= log_choice_probability(d, sharpness);
        }
        return total;
    }

    double operator()(std::span<const double> x) {
        compute_differences(x);
        return nll_from_differences(std::exp(x.back()));
    }

private:
    std::span<const Observation> observations_;
    ModelSpec base_;
    std::vector<std::size_t> free_;
    std::vector<double> full_;
    std::vector<double> diffs_;
};

std::vector<double> linear_grid(double lo, double hi, int points, bool include_ends) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = include_ends ? (points == 1 ? 0.5 : static_cast<double>(i) / (points - 1))
                                      : (i + 0.5) / points;
        out.push_back(lo + t * (hi - lo));
    }
    return out;
}

} // namespace

FitResult fit(std::span<const ChoiceRecord> records, Family family, const FitOptions& options) {
    if (records.empty()) {
        throw ValidationError("cannot fit a model to an empty record set");
    }
    if (options.grid_points < 8) {
        throw ValidationError(fmt::format("grid_points must be >= 8, got {}", options.grid_points));
    }
    if (!(options.sharpness_min > 0.0 && options.sharpness_max > options.sharpness_min)) {
        throw ValidationError("sharpness bounds must satisfy 0 < min < max");
    }

    FitDiagnostics diagnostics;
    std::vector<Observation> observations;
    observations.reserve(records.size());
    bool all_identical = true;
    for (const auto& r : records) {
        Observation o{r.chosen_option().canonical(), r.rejected_option().canonical()};
        all_identical = all_identical && o.chosen == o.rejected;
        observations.push_back(std::move(o));
    }
    if (all_identical) {
        diagnostics.warnings.emplace_back(
            "identifiability: every record offers identical options; choice sharpness is not identified");
    }

    const auto info = models::parameter_info(family);
    const bool pin_alpha = uses_power_utility(family) && has_negative_outcome(records);
    std::vector<std::size_t> free;
    std::vector<double> lower, upper;
    for (std::size_t i = 0; i < info.size(); ++i) {
        if (pin_alpha && info[i].name == "alpha") {
            diagnostics.pinned.emplace_back("alpha=1 (records contain losses; power utility requires "
                                            "nonnegative outcomes)");
            continue;
        }
        free.push_back(i);
        // Open lower bounds are approached but not attained.
        lower.push_back(info[i].lower_open ? info[i].lower + 1e-9 : info[i].lower);
        upper.push_back(info[i].upper);
    }
    lower.push_back(std::log(options.sharpness_min));
    upper.push_back(std::log(options.sharpness_max));

    Objective objective(observations, base_model(family, options), free);

    // Coarse grid: value differences depend only on the model parameters, so
    // each parameter point is evaluated once for the whole sharpness grid.
    std::vector<std::vector<double>> axes;
    for (std::size_t d = 0; d < free.size(); ++d) {
        axes.push_back(linear_grid(lower[d], upper[d], options.grid_points, false));
    }
    const auto log_sharpness =
        linear_grid(lower.back(), upper.back(), options.sharpness_grid_points, true);

    std::vector<Candidate> best;
    const auto keep = [&](std::vector<double> x, double nll) {
        if (!std::isfinite(nll)) {
            return;
        }
        best.push_back({std::move(x), nll});
        std::stable_sort(best.begin(), best.end(),
                         [](const Candidate& a, const Candidate& b) { return a.nll < b.nll; });
        if (best.size() > static_cast<std::size_t>(std::max(1, options.refine_starts))) {
            best.pop_back();
        }
    };

    std::vector<std::size_t> cursor(free.size(), 0);
    std::vector<double> x(free.size() + 1);
    for (bool more = true; more;) {
        for (std::size_t d = 0; d < free.size(); ++d) {
            x[d] = axes[d][cursor[d]];
        }
        objective.compute_differences(x);
        for (double ls : log_sharpness) {
            x.back() = ls;
            ++diagnostics.grid_evaluations;
            keep(x, objective.nll_from_differences(std::exp(ls)));
        }
        more = false;
        for (std::size_t d = 0; d < free.size(); ++d) {
            if (++cursor[d] < axes[d].size()) {
                more = true;
                break;
            }
            cursor[d] = 0;
        }
    }
    if (best.empty()) {
        throw RangeError("likelihood is not finite anywhere on the parameter grid");
    }

    NelderMeadOptions nm;
    nm.relative_tolerance = options.relative_tolerance;
    nm.max_iterations = options.max_iterations;
    nm.initial_step = 1.0 / options.grid_points;
    const auto fn = [&objective](std::span<const double> v) { return objective(v); };

    NelderMeadResult winner;
    winner.value = std::numeric_limits<double>::infinity();
    for (const auto& start : best) {
        auto r = nelder_mead(fn, start.x, lower, upper, nm);
        diagnostics.iterations += r.iterations;
        diagnostics.evaluations += r.evaluations;
        if (r.value < winner.value) {
            winner = std::move(r);
        }
    }
    diagnostics.final_simplex_size = winner.simplex_size;
    diagnostics.converged = winner.converged;
    if (!winner.converged) {
        diagnostics.warnings.emplace_back("simplex refinement hit the iteration cap before converging");
    }

    FitResult result{objective.model_at(winner.x), std::exp(winner.x.back()), 0.0, 0.0, 0.0, 0, 0, {}};
    if (winner.x.back() >= upper.back() - 1e-9) {
        diagnostics.warnings.emplace_back(
            "choice sharpness at its upper bound; choices are (near-)deterministic in the model");
    }
    result.log_likelihood = std::min(0.0, -winner.value);
    result.n_observations = static_cast<int>(records.size());
    result.n_parameters = static_cast<int>(free.size());
    const double k = result.n_parameters + 1;
    result.aic = 2.0 * k - 2.0 * result.log_likelihood;
    result.bic = k * std::log(static_cast<double>(result.n_observations)) - 2.0 * result.log_likelihood;
    result.diagnostics = std::move(diagnostics);
    return result;
}

std::vector<FitResult> compare(std::span<const ChoiceRecord> records, std::span<const Family> families,
                               const FitOptions& options) {
    if (families.size() < 2) {
        throw ValidationError("compare needs at least two model families");
    }
    std::vector<std::future<FitResult>> jobs;
    jobs.reserve(families.size());
    for (auto family : families) {
        jobs.push_back(std::async(std::launch::async, [records, family, &options] {
            return fit(records, family, options);
        }));
    }
    std::vector<FitResult> results;
    results.reserve(jobs.size());
    for (auto& job : jobs) {
        results.push_back(job.get());
    }
    std::stable_sort(results.begin(), results.end(), [](const FitResult& a, const FitResult& b) {
        if (a.bic != b.bic) {
            return a.bic < b.bic;
        }
        return a.aic < b.aic;
    });
    return results;
}

} // namespace riskkit::calibration
