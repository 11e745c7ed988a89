#pragma once

#include "riskkit/elicitation/choice_record.hpp"
#include "riskkit/models/model_spec.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace riskkit::calibration {

struct FitOptions {
    /// Grid resolution per model parameter (>= 8).
    int grid_points = 8;
    /// Grid resolution for log(choice sharpness).
    int sharpness_grid_points = 12;
    double sharpness_min = 1e-4;
    double sharpness_max = 1e3;
    /// Number of best grid points refined by the simplex search.
    int refine_starts = 3;
    double relative_tolerance = 1e-6;
    int max_iterations = 5000;
    /// Fixed components carried into the fitted model.
    double reference_point = 0.0;
    std::optional<models::OutcomeWeightFunction> wlu_weight;
};

struct FitDiagnostics {
    int grid_evaluations = 0;
    int iterations = 0;
    int evaluations = 0;
    double final_simplex_size = 0.0;
    bool converged = false;
    /// Parameters held fixed rather than estimated (e.g. alpha on loss data).
    std::vector<std::string> pinned;
    std::vector<std::string> warnings;
};

struct FitResult {
    models::ModelSpec model;
    double choice_sharpness = 1.0;
    double log_likelihood = 0.0;
    double aic = 0.0;
    double bic = 0.0;
    int n_observations = 0;
    /// Free model parameters (excluding the sharpness).
    int n_parameters = 0;
    FitDiagnostics diagnostics;
};

/// Maximum-likelihood fit of a family and the choice sharpness: a coarse grid
/// over the parameter box and log-sharpness, then simplex refinement of the
/// best grid points. Deterministic given inputs.
///
/// Power-utility families (EU, REU, WLU) pin alpha = 1 when any record
/// contains a negative outcome, since other exponents are undefined there.
/// Throws ValidationError on an empty record set.
FitResult fit(std::span<const elicitation::ChoiceRecord> records, models::Family family,
              const FitOptions& options = {});

/// Fits every family; ascending BIC, AIC breaking ties. Throws on an empty family list.
std::vector<FitResult> compare(std::span<const elicitation::ChoiceRecord> records,
                               std::span<const models::Family> families,
                               const FitOptions& options = {});

} // namespace riskkit::calibration
