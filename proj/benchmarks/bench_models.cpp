#include "riskkit/models/evaluate.hpp"
#include "riskkit/models/model_spec.hpp"
#include "riskkit/random.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace riskkit;

Lottery random_lottery(Rng& rng, std::size_t n) {
    std::vector<double> weights(n);
    double total = 0.0;
    for (auto& w : weights) {
        w = rng.uniform(0.01, 1.0);
        total += w;
    }
    std::vector<Branch> branches;
    double used = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = i + 1 == n ? 1.0 - used : weights[i] / total;
        used += p;
        branches.push_back({p, rng.uniform(0.0, 1000.0)});
    }
    return Lottery(std::move(branches));
}

void BM_Value(benchmark::State& state, models::ModelSpec model) {
    Rng rng(7);
    const auto lottery = random_lottery(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.value(lottery));
    }
    state.SetComplexityN(state.range(0));
}

BENCHMARK_CAPTURE(BM_Value, eu, models::ModelSpec::eu(0.5))->RangeMultiplier(4)->Range(2, 512)->Complexity();
BENCHMARK_CAPTURE(BM_Value, reu, models::ModelSpec::reu(0.5, 2.0))->RangeMultiplier(4)->Range(2, 512)->Complexity();
BENCHMARK_CAPTURE(BM_Value, wlu, models::ModelSpec::wlu(0.5))->RangeMultiplier(4)->Range(2, 512)->Complexity();
BENCHMARK_CAPTURE(BM_Value, pt, models::ModelSpec::pt(0.88, 0.88, 2.25, 0.65))->RangeMultiplier(4)->Range(2, 512)->Complexity();

void BM_CertaintyEquivalent(benchmark::State& state) {
    const auto lottery = Lottery::binary(0.5, 200.0, 0.0);
    const auto model = models::ModelSpec::reu(0.8, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(models::certainty_equivalent(lottery, model));
    }
}
BENCHMARK(BM_CertaintyEquivalent);

} // namespace
