#include "riskkit/calibration/simulation.hpp"

#include "riskkit/calibration/choice_model.hpp"
#include "riskkit/elicitation/instruments.hpp"
#include "riskkit/error.hpp"
#include "riskkit/io/time.hpp"
#include "riskkit/random.hpp"

#include <fmt/format.h>

#include <cmath>

namespace riskkit::calibration {
namespace {

using elicitation::BinaryQuestion;
using elicitation::Choice;

double cents(double x) { return std::round(x * 100.0) / 100.0; }

double probability_step(Rng& rng) { return static_cast<double>(1 + rng.index(9)) / 10.0; }

/// Sure amount strictly inside a bet's outcome range.
BinaryQuestion sure_vs_bet(Rng& rng, std::string id, double p, double high, double low) {
    const double sure = cents(low + (high - low) * rng.uniform(0.05, 0.95));
    return {std::move(id), Lottery::sure(sure), Lottery::binary(p, cents(high), cents(low))};
}

BinaryQuestion gain_question(Rng& rng, std::string id) {
    const double p = probability_step(rng);
    const double stake = rng.uniform(20.0, 200.0);
    if (rng.uniform() < 0.5) {
        const double safe_low = stake * rng.uniform(0.3, 0.9);
        const double risky_high = stake * rng.uniform(1.5, 3.0);
        const double risky_low = stake * rng.uniform(0.0, 0.3);
        return {std::move(id), Lottery::binary(p, cents(stake), cents(safe_low)),
                Lottery::binary(p, cents(risky_high), cents(risky_low))};
    }
    const double high = stake * rng.uniform(1.5, 3.0);
    const double low = stake * rng.uniform(0.0, 0.5);
    return sure_vs_bet(rng, std::move(id), p, high, low);
}

} // namespace

std::vector<elicitation::ChoiceRecord> simulate_battery(const SimAgent& agent,
                                                        std::span<const BinaryQuestion> questions,
                                                        const std::string& session_id,
                                                        elicitation::Protocol protocol) {
    if (!(agent.sharpness > 0.0)) {
        throw ValidationError(fmt::format("agent sharpness must be > 0, got {}", agent.sharpness));
    }
    Rng rng(agent.seed);
    std::vector<elicitation::ChoiceRecord> records;
    records.reserve(questions.size());
    for (std::size_t i = 0; i < questions.size(); ++i) {
        const auto& q = questions[i];
        const double va = agent.model.value(q.option_a);
        const double vb = agent.model.value(q.option_b);
        // One draw per question keeps streams aligned across agents.
        const double u = rng.uniform();
        Choice chosen;
        if (va == vb) {
            chosen = std::isinf(agent.sharpness) ? agent.tie : (u < 0.5 ? Choice::A : Choice::B);
        } else {
            chosen = u < choice_probability_from_values(va, vb, agent.sharpness) ? Choice::A : Choice::B;
        }
        records.push_back({session_id, q.id, protocol, q.option_a, q.option_b, chosen,
                           io::synthetic_timestamp(static_cast<std::int64_t>(i))});
    }
    return records;
}

QuestionBank parse_question_bank(std::string_view text) {
    if (text == "hl" || text == "holt-laury") {
        return QuestionBank::HoltLaury;
    }
    if (text == "gains") {
        return QuestionBank::Gains;
    }
    if (text == "mixed" || text == "mixed-sign") {
        return QuestionBank::MixedSign;
    }
    throw ValidationError(fmt::format("unknown question bank '{}' (hl, gains, mixed)", text));
}

std::vector<BinaryQuestion> question_bank(QuestionBank kind, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BinaryQuestion> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        switch (kind) {
        case QuestionBank::HoltLaury: {
            const auto row = rng.index(elicitation::kHoltLauryRows);
            const double scale = cents(rng.uniform(1.0, 10.0));
            const auto list = elicitation::holt_laury_list(scale);
            out.push_back({fmt::format("hl-{}-row-{}", i, row + 1), list.rows[row].option_a,
                           list.rows[row].option_b});
            break;
        }
        case QuestionBank::Gains:
            out.push_back(gain_question(rng, fmt::format("gain-{}", i)));
            break;
        case QuestionBank::MixedSign: {
            const auto id = fmt::format("mixed-{}", i);
            switch (i % 3) {
            case 0:
                out.push_back(gain_question(rng, id));
                break;
            case 1: {
                // Mirror image of a gain bet: sure loss against a risky loss.
                const double p = probability_step(rng);
                const double stake = rng.uniform(20.0, 200.0);
                const double worst = stake * rng.uniform(1.5, 3.0);
                const double best = stake * rng.uniform(0.0, 0.5);
                out.push_back(sure_vs_bet(rng, id, p, -best, -worst));
                break;
            }
            default: {
                const double p = probability_step(rng);
                const double stake = rng.uniform(20.0, 200.0);
                const double gain = stake * rng.uniform(0.5, 3.0);
                const double loss = stake * rng.uniform(0.5, 2.0);
                const double sure = cents(stake * rng.uniform(-0.3, 0.3));
                out.push_back({id, Lottery::sure(sure), Lottery::binary(p, cents(gain), -cents(loss))});
                break;
            }
            }
            break;
        }
        }
    }
    return out;
}

} // namespace riskkit::calibration
