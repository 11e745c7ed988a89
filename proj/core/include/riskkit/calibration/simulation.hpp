#pragma once

#include "riskkit/elicitation/choice_record.hpp"
#include "riskkit/models/model_spec.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace riskkit::calibration {

/// Simulated respondent: chooses A with the logit probability under its
/// true model. An infinite sharpness makes it a deterministic maximiser
/// that resolves exact ties with `tie`.
struct SimAgent {
    models::ModelSpec model = models::ModelSpec::eu();
    double sharpness = 1.0;
    elicitation::Choice tie = elicitation::Choice::A;
    std::uint64_t seed = 0;

    static constexpr double kDeterministic = std::numeric_limits<double>::infinity();
};

/// One record per question, drawn in question order from the agent's seed.
std::vector<elicitation::ChoiceRecord> simulate_battery(
    const SimAgent& agent, std::span<const elicitation::BinaryQuestion> questions,
    const std::string& session_id = "sim",
    elicitation::Protocol protocol = elicitation::Protocol::RandomPairs);

enum class QuestionBank {
    /// Rows of the ten-row price list at random stakes multipliers in [1, 10].
    HoltLaury,
    /// Safe-vs-risky gain pairs: half two-outcome pairs with shared
    /// probabilities, half sure amounts against a bet. Stakes 20..200.
    Gains,
    /// Gains plus loss-only and mixed-sign bets against sure amounts.
    MixedSign,
};

QuestionBank parse_question_bank(std::string_view text);

/// Deterministic question bank of size n.
std::vector<elicitation::BinaryQuestion> question_bank(QuestionBank kind, std::size_t n,
                                                       std::uint64_t seed);

} // namespace riskkit::calibration
