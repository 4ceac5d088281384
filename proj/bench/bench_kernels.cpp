// Copyright 2026 The recurrence-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "reclab/generators.hpp"
#include "reclab/kernels.hpp"
#include "reclab/parallel.hpp"

namespace {

using namespace reclab;

void BM_SieveSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::sieve_primes(st.range(0)).count());
}
void BM_SieveParallel(benchmark::State& st) {
    ThreadCapScope cap(static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::parallel::sieve_primes(st.range(0)).count());
}
BENCHMARK(BM_SieveSerial)->Arg(10'000'000);
BENCHMARK(BM_SieveParallel)->Args({10'000'000, 1})->Args({10'000'000, 4});

void BM_DifferenceBits(benchmark::State& st) {
    const Window p = family_window(SetFamily::primes(), 1, st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::difference_bits(p, p, 4096).count());
}
void BM_DifferenceBitsParallel(benchmark::State& st) {
    const Window p = family_window(SetFamily::primes(), 1, st.range(0));
    ThreadCapScope cap(4);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::parallel::difference_bits(p, p, 4096).count());
}
BENCHMARK(BM_DifferenceBits)->Arg(1'000'000);
BENCHMARK(BM_DifferenceBitsParallel)->Arg(1'000'000);

void BM_ShiftedOverlaps(benchmark::State& st) {
    const Window p = family_window(SetFamily::primes(), 1, 10'000'000);
    std::vector<u64> shifts(100);
    for (u64 m = 0; m < 100; ++m) shifts[m] = m + 1;
    ThreadCapScope cap(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::shifted_overlaps(p, p, shifts));
}
BENCHMARK(BM_ShiftedOverlaps)->Arg(1)->Arg(4);

void BM_Gowers(benchmark::State& st) {
    std::vector<kernels::Complex> f(static_cast<std::size_t>(st.range(0)));
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<double>(i % 7) - 3.0;
    ThreadCapScope cap(static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::gowers_sum(f, 3));
}
BENCHMARK(BM_Gowers)->Args({64, 1})->Args({64, 4});

void BM_ConflictEdges(benchmark::State& st) {
    const Window sq = family_window(SetFamily::polynomial({1, 0, 0}), 1, 1'000'000);
    const std::vector<kernels::Interval> R{{16, 18}, {10000, 10003}};
    ThreadCapScope cap(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(kernels::conflict_edges(sq, R).size());
}
BENCHMARK(BM_ConflictEdges)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
