#include "riskkit/models/functions.hpp"

#include "riskkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace riskkit::models {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_knots(const std::vector<double>& xs, const std::vector<double>& ys, const char* what) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw ValidationError(fmt::format("{} table needs at least two matching knots", what));
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (!(xs[i] > xs[i - 1])) {
            throw ValidationError(fmt::format("{} table outcomes must be strictly increasing", what));
        }
    }
}

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x,
                   const char* what) {
    if (x < xs.front() || x > xs.back()) {
        throw DomainError(fmt::format("{} table undefined at {} (domain [{}, {}])", what, x,
                                      xs.front(), xs.back()));
    }
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.end()) {
        return ys.back();
    }
    const auto hi = static_cast<std::size_t>(it - xs.begin());
    const auto lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

} // namespace

UtilityFunction UtilityFunction::power(double exponent) {
    if (!(exponent > 0.0) || !std::isfinite(exponent)) {
        throw ValidationError(fmt::format("power utility exponent must be > 0, got {}", exponent));
    }
    return UtilityFunction(Power{exponent});
}

UtilityFunction UtilityFunction::table(std::vector<double> outcomes, std::vector<double> utilities) {
    check_knots(outcomes, utilities, "utility");
    for (std::size_t i = 1; i < utilities.size(); ++i) {
        if (!(utilities[i] > utilities[i - 1])) {
            throw ValidationError("utility table values must be strictly increasing");
        }
    }
    return UtilityFunction(Table{std::move(outcomes), std::move(utilities)});
}

bool UtilityFunction::in_domain(double x) const noexcept {
    return std::visit(Overloaded{
                          [](const Linear&) { return true; },
                          [x](const Power&) { return x >= 0.0; },
                          [x](const Table& t) { return x >= t.outcomes.front() && x <= t.outcomes.back(); },
                      },
                      family_);
}

double UtilityFunction::operator()(double x) const {
    return std::visit(Overloaded{
                          [x](const Linear&) { return x; },
                          [x](const Power& p) {
                              if (x < 0.0) {
                                  throw DomainError(fmt::format(
                                      "power utility undefined for negative outcome {}", x));
                              }
                              return std::pow(x, p.exponent);
                          },
                          [x](const Table& t) {
                              return interpolate(t.outcomes, t.utilities, x, "utility");
                          },
                      },
                      family_);
}

RiskFunction RiskFunction::power(double exponent) {
    if (!(exponent > 0.0) || !std::isfinite(exponent)) {
        throw ValidationError(fmt::format("risk function exponent must be > 0, got {}", exponent));
    }
    return RiskFunction(exponent, exponent == 1.0);
}

double RiskFunction::operator()(double p) const {
    p = std::clamp(p, 0.0, 1.0);
    return identity_ ? p : std::pow(p, exponent_);
}

OutcomeWeightFunction OutcomeWeightFunction::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ValidationError(fmt::format("constant outcome weight must be > 0, got {}", c));
    }
    return OutcomeWeightFunction(Constant{c});
}

OutcomeWeightFunction OutcomeWeightFunction::table(std::vector<double> outcomes,
                                                   std::vector<double> weights) {
    check_knots(outcomes, weights, "weight");
    if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w > 0.0); })) {
        throw ValidationError("weight table values must be strictly positive");
    }
    return OutcomeWeightFunction(Table{std::move(outcomes), std::move(weights)});
}

double OutcomeWeightFunction::operator()(double x) const {
    return std::visit(Overloaded{
                          [](const Constant& c) { return c.value; },
                          [x](const QuarticRootDamping&) {
                              if (x < 0.0) {
                                  throw DomainError(fmt::format(
                                      "quartic-root weight undefined for negative outcome {}", x));
                              }
                              return 1.0 / (1.0 + std::pow(x, 0.25));
                          },
                          [x](const Table& t) { return interpolate(t.outcomes, t.weights, x, "weight"); },
                      },
                      family_);
}

ProbabilityWeighting ProbabilityWeighting::inverse_s(double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw ValidationError(fmt::format("weighting gamma must lie in (0, 1], got {}", gamma));
    }
    return ProbabilityWeighting(gamma, gamma == 1.0);
}

double ProbabilityWeighting::operator()(double p) const {
    p = std::clamp(p, 0.0, 1.0);
    if (identity_ || p == 0.0 || p == 1.0) {
        return p;
    }
    return std::exp(-std::pow(-std::log(p), gamma_));
}

void ProspectSpec::validate() const {
    if (!std::isfinite(reference_point)) {
        throw ValidationError("reference point must be finite");
    }
    if (!(gain_exponent > 0.0 && gain_exponent <= 1.0)) {
        throw ValidationError(fmt::format("gain exponent must lie in (0, 1], got {}", gain_exponent));
    }
    if (!(loss_exponent > 0.0 && loss_exponent <= 1.0)) {
        throw ValidationError(fmt::format("loss exponent must lie in (0, 1], got {}", loss_exponent));
    }
    if (!(loss_aversion >= 1.0) || !std::isfinite(loss_aversion)) {
        throw ValidationError(fmt::format("loss aversion must be >= 1, got {}", loss_aversion));
    }
}

double ProspectSpec::value(double outcome) const {
    const double d = outcome - reference_point;
    if (d >= 0.0) {
        return std::pow(d, gain_exponent);
    }
    return -loss_aversion * std::pow(-d, loss_exponent);
}

} // namespace riskkit::models
