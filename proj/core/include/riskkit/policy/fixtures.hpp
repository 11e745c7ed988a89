#pragma once

#include "riskkit/elicitation/instruments.hpp"

#include <array>
#include <span>
#include <string_view>

namespace riskkit::policy {

/// One column of the model-portfolio performance table. Percentages are as
/// printed; growth is the ending value of a $10,000 investment.
struct ModelPortfolio {
    std::string_view name;
    int stock_pct;
    int bond_pct;
    int cash_pct;
    long growth_of_10000;
    double annualized_return_pct;
    double volatility_pct;
    double maximum_loss_pct;
};

/// Conservative, moderate, aggressive.
std::span<const ModelPortfolio> portfolio_menu();

/// Averse classes get the conservative portfolio, the default class the
/// moderate one, risk-loving classes the aggressive one.
const ModelPortfolio& portfolio_policy(elicitation::RiskCategory category);

/// Hours before an international flight to arrive: 6, 4, 3, 2, 1 from most
/// averse to most risk-loving.
double airport_policy(elicitation::RiskCategory category);

} // namespace riskkit::policy
