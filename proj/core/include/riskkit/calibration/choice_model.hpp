#pragma once

#include "riskkit/elicitation/choice_record.hpp"
#include "riskkit/models/model_spec.hpp"

#include <span>

namespace riskkit::calibration {

/// Logistic link on a value difference: 1 / (1 + exp(-sharpness * (va - vb))).
///
/// Computed so that p(va, vb) + p(vb, va) == 1 exactly. An infinite
/// sharpness gives a deterministic choice; exact ties map to 0.5.
double choice_probability_from_values(double va, double vb, double sharpness);

/// Probability that option a is chosen over b under the model.
double choice_probability(const Lottery& a, const Lottery& b, const models::ModelSpec& model,
                          double sharpness);

/// log P(chosen) for a value difference (chosen minus rejected), stable for large |d|.
double log_choice_probability(double value_difference, double sharpness);

/// Sum over records of log P(observed choice).
double log_likelihood(std::span<const elicitation::ChoiceRecord> records,
                      const models::ModelSpec& model, double sharpness);

} // namespace riskkit::calibration
