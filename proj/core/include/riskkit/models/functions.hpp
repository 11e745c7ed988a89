#pragma once

#include <string>
#include <variant>
#include <vector>

namespace riskkit::models {

/// Utility over monetary outcomes. All members are strictly increasing.
class UtilityFunction {
public:
    struct Linear {};
    struct Power {
        double exponent = 1.0;
    };
    /// Piecewise-linear interpolation through strictly increasing knots.
    struct Table {
        std::vector<double> outcomes;
        std::vector<double> utilities;
    };

    static UtilityFunction linear() { return UtilityFunction(Linear{}); }
    /// x^exponent on x >= 0. Negative outcomes are a DomainError.
    static UtilityFunction power(double exponent);
    static UtilityFunction table(std::vector<double> outcomes, std::vector<double> utilities);

    double operator()(double x) const;
    bool in_domain(double x) const noexcept;

    const auto& family() const noexcept { return family_; }

private:
    using Family = std::variant<Linear, Power, Table>;
    explicit UtilityFunction(Family f) : family_(std::move(f)) {}
    Family family_;
};

/// Risk function on tail probabilities: r(0)=0, r(1)=1, nondecreasing.
/// Exponent k > 1 discounts better outcomes (risk averse), k < 1 the reverse.
class RiskFunction {
public:
    static RiskFunction identity() { return RiskFunction(1.0, true); }
    static RiskFunction power(double exponent);

    double operator()(double p) const;
    bool is_identity() const noexcept { return identity_; }
    double exponent() const noexcept { return exponent_; }

private:
    RiskFunction(double k, bool identity) : exponent_(k), identity_(identity) {}
    double exponent_;
    bool identity_;
};

/// Outcome weight for weighted-linear utility. Strictly positive on its domain.
class OutcomeWeightFunction {
public:
    struct Constant {
        double value = 1.0;
    };
    /// w(x) = 1 / (1 + x^(1/4)), defined for x >= 0.
    struct QuarticRootDamping {};
    struct Table {
        std::vector<double> outcomes;
        std::vector<double> weights;
    };

    static OutcomeWeightFunction constant(double c);
    static OutcomeWeightFunction quartic_root_damping() {
        return OutcomeWeightFunction(QuarticRootDamping{});
    }
    static OutcomeWeightFunction table(std::vector<double> outcomes, std::vector<double> weights);

    double operator()(double x) const;

    const auto& family() const noexcept { return family_; }

private:
    using Family = std::variant<Constant, QuarticRootDamping, Table>;
    explicit OutcomeWeightFunction(Family f) : family_(std::move(f)) {}
    Family family_;
};

/// Probability weighting for the prospect value. Both members satisfy
/// w(0)=0, w(1)=1 and are strictly increasing.
class ProbabilityWeighting {
public:
    static ProbabilityWeighting identity() { return ProbabilityWeighting(1.0, true); }
    /// One-parameter inverse-S curve w(p) = exp(-(-ln p)^gamma), gamma in (0, 1].
    static ProbabilityWeighting inverse_s(double gamma);

    double operator()(double p) const;
    bool is_identity() const noexcept { return identity_; }
    double gamma() const noexcept { return gamma_; }

private:
    ProbabilityWeighting(double g, bool identity) : gamma_(g), identity_(identity) {}
    double gamma_;
    bool identity_;
};

/// Reference-dependent value: v(d) = d^alpha for gains, -lambda * (-d)^beta for losses,
/// where d = outcome - reference_point.
struct ProspectSpec {
    double reference_point = 0.0;
    double gain_exponent = 1.0;
    double loss_exponent = 1.0;
    double loss_aversion = 1.0;
    ProbabilityWeighting weighting = ProbabilityWeighting::identity();

    /// Throws ValidationError when a field is outside its documented range.
    void validate() const;
    /// Value of a monetary outcome (deviation from the reference is taken here).
    double value(double outcome) const;
};

} // namespace riskkit::models
