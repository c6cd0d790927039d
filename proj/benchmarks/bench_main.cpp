#include "wps/bundle.hpp"
#include "wps/cohomology.hpp"
#include "wps/piecewise.hpp"
#include "wps/weights.hpp"

#include <benchmark/benchmark.h>

using namespace wps;

namespace {

const WeightVector kChi5{3, 5, 7, 11, 13};
const WeightVector kChi6{12, 18, 40, 45, 60, 28};

void BM_fan_from_weights(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fan_from_weights(kChi6));
}
BENCHMARK(BM_fan_from_weights);

void BM_courant_all(benchmark::State& state) {
    Fan fan = fan_from_weights(kChi5);
    for (auto _ : state)
        for (std::size_t i = 0; i < fan.ray_count(); ++i)
            benchmark::DoNotOptimize(courant(fan, i));
}
BENCHMARK(BM_courant_all);

void BM_a_subset_all(benchmark::State& state) {
    Fan fan = fan_from_weights({1, 2, 3, 4, 5});
    auto subsets = nonempty_subsets(fan.ray_count(), fan.ray_count());
    for (auto _ : state)
        for (const auto& subset : subsets) benchmark::DoNotOptimize(a_subset(fan, subset));
}
BENCHMARK(BM_a_subset_all);

void BM_structure_constants(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(structure_constants_checked(kChi6));
}
BENCHMARK(BM_structure_constants);

void BM_chern_product(benchmark::State& state) {
    PullbackFan pfan = make_pullback_fan(fan_from_weights(kChi5));
    for (auto _ : state) benchmark::DoNotOptimize(chern_product(pfan));
}
BENCHMARK(BM_chern_product);

void BM_recover_weights(benchmark::State& state) {
    Fan fan = fan_from_weights(normalize(kChi6));
    AnonymizedRing ring{fan.rays};
    for (auto _ : state) benchmark::DoNotOptimize(recover_weights(ring));
}
BENCHMARK(BM_recover_weights);

}  // namespace

BENCHMARK_MAIN();
