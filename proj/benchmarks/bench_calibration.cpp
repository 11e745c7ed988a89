#include "riskkit/calibration/fit.hpp"
#include "riskkit/calibration/simulation.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace riskkit;

std::vector<elicitation::ChoiceRecord> records(std::size_t n) {
    calibration::SimAgent agent;
    agent.model = models::ModelSpec::reu(1.0, 2.0);
    agent.sharpness = 1.0;
    agent.seed = 11;
    const auto questions = calibration::question_bank(calibration::QuestionBank::Gains, n, 5);
    return calibration::simulate_battery(agent, questions);
}

void BM_Fit(benchmark::State& state, models::Family family) {
    const auto data = records(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(calibration::fit(data, family));
    }
}

BENCHMARK_CAPTURE(BM_Fit, eu, models::Family::EU)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Fit, reu, models::Family::REU)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(records(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_Simulate)->Arg(200)->Arg(2000);

} // namespace
