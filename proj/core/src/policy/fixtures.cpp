#include "riskkit/policy/fixtures.hpp"

namespace riskkit::policy {
namespace {

constexpr std::array<ModelPortfolio, 3> kPortfolios{{
    {"conservative", 30, 50, 20, 389519, 8.1, 9.1, -14.0},
    {"moderate", 60, 30, 10, 676126, 9.4, 15.6, -32.3},
    {"aggressive", 80, 15, 5, 892028, 10.0, 20.5, -44.4},
}};

} // namespace

std::span<const ModelPortfolio> portfolio_menu() { return kPortfolios; }

const ModelPortfolio& portfolio_policy(elicitation::RiskCategory category) {
    using elicitation::RiskCategory;
    switch (category) {
    case RiskCategory::ExtremeAversion:
    case RiskCategory::AdditionalAversion:
        return kPortfolios[0];
    case RiskCategory::Default:
        return kPortfolios[1];
    case RiskCategory::AdditionalLove:
    case RiskCategory::ExtremeLove:
        return kPortfolios[2];
    }
    return kPortfolios[1];
}

double airport_policy(elicitation::RiskCategory category) {
    using elicitation::RiskCategory;
    switch (category) {
    case RiskCategory::ExtremeAversion: return 6.0;
    case RiskCategory::AdditionalAversion: return 4.0;
    case RiskCategory::Default: return 3.0;
    case RiskCategory::AdditionalLove: return 2.0;
    case RiskCategory::ExtremeLove: return 1.0;
    }
    return 3.0;
}

} // namespace riskkit::policy
