// gdc: link-level simulator and design toolkit for generalized dimming control in VLC
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "gdc/channel.hpp"
#include "gdc/config.hpp"
#include "gdc/metrics.hpp"
#include "gdc/simulator.hpp"

namespace
{

const gdc::experiment_config &reference_config()
{
    static const gdc::experiment_config cfg = gdc::parse_config("");
    return cfg;
}

const Eigen::MatrixXd &reference_channel()
{
    static const Eigen::MatrixXd h = gdc::build_channel_matrix(reference_config().room);
    return h;
}

void bm_select_sequential(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(gdc::select_sequential(4, 2, 4, 6));
}
BENCHMARK(bm_select_sequential);

void bm_select_incremental(benchmark::State &state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(gdc::select_incremental(4, 2, 4, 6));
}
BENCHMARK(bm_select_incremental);

void bm_select_exhaustive_toy(benchmark::State &state)
{
    // C(C(4,2), 4) = 15 subsets; exhaustive search is only ever viable at
    // this scale, which is exactly what the benchmark should show.
    for (auto _ : state)
        benchmark::DoNotOptimize(gdc::select_exhaustive(2, 2, 2, 2));
}
BENCHMARK(bm_select_exhaustive_toy);

void bm_ml_detect(benchmark::State &state)
{
    const auto &h = reference_channel();
    const gdc::codebook cb = gdc::select_incremental(4, 2, 4, 6);
    const gdc::constellation cons = gdc::optimal_constellation(0.7, 4, 0.1, 2.0);
    const gdc::ml_detector det(h, cb, cons);
    const double n0 = gdc::snr_to_n0(20.0, h, cb, cons);

    gdc::rng noise(gdc::default_seed);
    const Eigen::MatrixXd s = gdc::modulate(123, cb, cons);
    const Eigen::MatrixXd y = gdc::transmit(s, h, n0, noise);

    for (auto _ : state)
        benchmark::DoNotOptimize(det.detect(y));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(bm_ml_detect);

void bm_union_bound(benchmark::State &state)
{
    const auto &h = reference_channel();
    const gdc::codebook cb = gdc::select_incremental(4, 2, 4, 6);
    const gdc::constellation cons = gdc::optimal_constellation(0.7, 4, 0.1, 2.0);
    const double n0 = gdc::snr_to_n0(20.0, h, cb, cons);

    for (auto _ : state)
        benchmark::DoNotOptimize(gdc::union_bound(h, cb, cons, n0));
}
BENCHMARK(bm_union_bound);

void bm_mfd2_distance(benchmark::State &state)
{
    const auto &h = reference_channel();
    const gdc::codebook cb = gdc::select_incremental(4, 2, 4, 6);
    const gdc::constellation cons = gdc::optimal_constellation(0.7, 4, 0.1, 2.0);

    for (auto _ : state)
        benchmark::DoNotOptimize(gdc::mfd2_distance(h, cb, cons));
}
BENCHMARK(bm_mfd2_distance);

void bm_free_distance_brute(benchmark::State &state)
{
    const auto &h = reference_channel();
    const gdc::codebook cb = gdc::select_incremental(4, 2, 4, 6);
    const gdc::constellation cons = gdc::optimal_constellation(0.7, 4, 0.1, 2.0);

    for (auto _ : state)
        benchmark::DoNotOptimize(gdc::free_distance_brute(h, cb, cons));
}
BENCHMARK(bm_free_distance_brute);

void bm_ber_point(benchmark::State &state)
{
    const auto &h = reference_channel();
    const gdc::codebook cb = gdc::select_incremental(4, 2, 4, 6);
    const gdc::constellation cons = gdc::optimal_constellation(0.7, 4, 0.1, 2.0);
    gdc::stop_rule stop;
    stop.min_bit_errors = 50;
    stop.max_matrices = 20000;

    for (auto _ : state)
        benchmark::DoNotOptimize(
            gdc::ber_monte_carlo(h, cb, cons, {16.0}, stop, gdc::default_seed));
}
BENCHMARK(bm_ber_point);

} // namespace

BENCHMARK_MAIN();
