#include <benchmark/benchmark.h>

#include "vz/compiler.hpp"
#include "vz/coupling.hpp"
#include "vz/sim.hpp"
#include "vz/supremacy.hpp"

namespace {

void BM_SolveSinc(benchmark::State& state) {
    double coupling = vz::kPi / 8;
    for (auto _ : state) {
        auto sol = vz::find_coupling_params(coupling, 1.0);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_SolveSinc);

void BM_SingleQubitSynthesis(benchmark::State& state) {
    vz::AxisAngle axis(0.3, 0.8, 1.7);
    vz::Mask mask = vz::mask_all(8);
    for (auto _ : state) {
        auto syn = vz::synth_single_qubit_layer(axis, mask, 1.0);
        benchmark::DoNotOptimize(syn);
    }
}
BENCHMARK(BM_SingleQubitSynthesis);

void BM_LayerUnitary(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    vz::AppliedLayer layer;
    layer.t = 0.9;
    layer.b = 1.2;
    layer.c = 0.4;
    layer.v_mask = vz::mask_all(n);
    layer.x_mask = vz::mask_all(n);
    for (int q = 0; q + 1 < n; q += 2) layer.w_edges.emplace_back(q, q + 1);
    for (auto _ : state) {
        auto u = vz::layer_unitary(layer, 1.0, n);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_LayerUnitary)->Arg(4)->Arg(6)->Arg(8);

void BM_RunScheduleSupremacy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto result = vz::compile_homogeneous(vz::gen_iqp(n, 3), 1.0);
    for (auto _ : state) {
        auto final_state = vz::run_schedule(result.schedule, n);
        benchmark::DoNotOptimize(final_state);
    }
}
BENCHMARK(BM_RunScheduleSupremacy)->Arg(5)->Arg(8)->Arg(10);

void BM_CompileSupremacy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto inst = vz::gen_iqp(n, 1);
    for (auto _ : state) {
        auto result = vz::compile_homogeneous(inst, 1.0);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_CompileSupremacy)->Arg(5)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
