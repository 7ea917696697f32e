// Copyright 2026 The hybridqt Authors
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

#include "hqt/oracle.hpp"

namespace {

void BM_BuildChannel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hqt::build_channel(n, hqt::ChannelSignConvention::Singlet));
  }
}
BENCHMARK(BM_BuildChannel)->Arg(1)->Arg(2)->Arg(3);

void BM_RunProtocolSampled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hqt::AliceState alice = hqt::random_alice(n, 11);
  const hqt::BobKnownState bob = hqt::random_bob_product(n, 12);
  const hqt::CorrectionTable table =
      hqt::derive_rsp_table(bob, hqt::ChannelSignConvention::Singlet);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hqt::run_protocol(alice, bob,
                                               hqt::ChannelSignConvention::Singlet,
                                               hqt::OutcomePolicy::sample(seed++), &table));
  }
}
BENCHMARK(BM_RunProtocolSampled)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_EnumerateAllBranches(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hqt::AliceState alice = hqt::random_alice(n, 21);
  const hqt::BobKnownState bob = hqt::random_bob_product(n, 22);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hqt::enumerate_all_branches(alice, bob, hqt::ChannelSignConvention::Singlet));
  }
}
BENCHMARK(BM_EnumerateAllBranches)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DeriveRspTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hqt::BobKnownState bob = hqt::random_bob_product(n, 33);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hqt::derive_rsp_table(bob, hqt::ChannelSignConvention::Singlet));
  }
}
BENCHMARK(BM_DeriveRspTable)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BellMeasurementStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hqt::AliceState alice = hqt::random_alice(n, 44);
  const hqt::StateVector initial =
      hqt::assemble_initial_state(alice, hqt::build_channel(n, hqt::ChannelSignConvention::Singlet));
  hqt::SeededRng rng(45);
  const hqt::OutcomePolicy policy = hqt::OutcomePolicy::sample(45);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hqt::step1_alice_bell_measurement(initial, n, policy, rng));
  }
}
BENCHMARK(BM_BellMeasurementStep)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
