#pragma once

#include "riskkit/lottery.hpp"
#include "riskkit/models/functions.hpp"

namespace riskkit::models {

/// Probability-weighted average utility.
double expected_utility(const Lottery& lottery, const UtilityFunction& u);

/// Expected utility computed as the worst-case utility plus tail-probability
/// weighted increments over the ascending utility ranking. Equal-utility
/// branches are merged before ranking.
double expected_utility_rank_form(const Lottery& lottery, const UtilityFunction& u);

/// Risk-weighted expected utility: the rank form with r applied to every
/// tail probability.
double reu(const Lottery& lottery, const UtilityFunction& u, const RiskFunction& r);

/// Weighted-linear utility: utilities weighted by probability times the
/// relative outcome weight w(x_i) / sum_j w(x_j) p_j.
double wlu(const Lottery& lottery, const UtilityFunction& u, const OutcomeWeightFunction& w);

/// Separable prospect value sum_i w(p_i) v(x_i - reference). Branches with the
/// same outcome are combined first.
double pt_value(const Lottery& lottery, const ProspectSpec& spec);

} // namespace riskkit::models
