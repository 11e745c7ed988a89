#include "riskkit/calibration/choice_model.hpp"

#include "riskkit/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>

namespace riskkit::calibration {
namespace {

void check_sharpness(double sharpness) {
    if (!(sharpness > 0.0)) {
        throw ValidationError(fmt::format("choice sharpness must be > 0, got {}", sharpness));
    }
}

} // namespace

double choice_probability_from_values(double va, double vb, double sharpness) {
    check_sharpness(sharpness);
    const double d = va - vb;
    if (d == 0.0) {
        return 0.5;
    }
    if (std::isinf(sharpness)) {
        return d > 0.0 ? 1.0 : 0.0;
    }
    const double z = sharpness * d;
    const double e = std::exp(-std::abs(z));
    const double small = e / (1.0 + e);
    // The complementary call computes the same `small`, so the pair sums to 1.
    return z > 0.0 ? 1.0 - small : small;
}

double choice_probability(const Lottery& a, const Lottery& b, const models::ModelSpec& model,
                          double sharpness) {
    return choice_probability_from_values(model.value(a), model.value(b), sharpness);
}

double log_choice_probability(double value_difference, double sharpness) {
    if (value_difference == 0.0) {
        return -std::log(2.0);
    }
    if (std::isinf(sharpness)) {
        return value_difference > 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    const double z = sharpness * value_difference;
    return z >= 0.0 ? -std::log1p(std::exp(-z)) : z - std::log1p(std::exp(z));
}

double log_likelihood(std::span<const elicitation::ChoiceRecord> records,
                      const models::ModelSpec& model, double sharpness) {
    check_sharpness(sharpness);
    double total = 0.0;
    for (const auto& r : records) {
        total += log_choice_probability(model.value(r.chosen_option()) - model.value(r.rejected_option()),
                                        sharpness);
    }
    return total;
}

} // namespace riskkit::calibration
