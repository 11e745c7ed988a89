#include "riskkit/policy/track_record.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace riskkit;

void BM_TrackRecord(benchmark::State& state) {
    const policy::TravelDomain domain;
    const policy::TravelPolicy travel{"default", 3.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            policy::run_track_record(travel, domain, static_cast<std::uint64_t>(state.range(0)), 42));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrackRecord)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace
