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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hqt/json_io.hpp"

namespace hqt::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;       // success / fidelity 1
inline constexpr int kExitFailed = 1;   // a verification or fidelity failure
inline constexpr int kExitBadInput = 2; // I/O, validation, resource bounds

// One parsed command line. Each party comes from exactly one source: a file
// when given, otherwise a sub-seed derived from `seed`.
struct RunConfig {
  int n = 1;
  std::optional<std::string> alice_file;
  std::optional<std::string> bob_file;
  std::uint64_t seed = 0;
  ChannelSignConvention convention = ChannelSignConvention::Singlet;
  BobKnownState::Mode mode = BobKnownState::Mode::Product;
  std::optional<std::vector<BellOutcome>> force_bell;
  std::optional<std::vector<int>> force_amp;
  std::optional<std::vector<int>> force_phase;
  std::optional<int> force_charlie;
  std::optional<std::string> out_path;  // stdout when absent
  std::optional<int> efficiency_n;      // verify: append an efficiency row
};

// run: one protocol execution; writes the transcript JSON. Exit 0 iff both
// directions reach fidelity 1 within 1e-10.
int cmd_run(const RunConfig& cfg);

// enumerate: every branch with the derived corrections; writes branch
// reports. Exit 0 iff all branches correct, 2 when n > 3.
int cmd_enumerate(const RunConfig& cfg);

// verify: fixed-table reproduction, showcase branch, derived correction
// table (and optionally the efficiency report); writes row-per-check JSON
// lines. Exit 0 iff every row passes.
int cmd_verify(const RunConfig& cfg);

// efficiency: the resource accounting report for --n.
int cmd_efficiency(const RunConfig& cfg);

// Flag-list parsing ("psi-,phi+" / "1,2"); throws hqt::Error on bad input.
std::vector<BellOutcome> parse_bell_list(const std::string& text);
std::vector<int> parse_outcome_list(const std::string& text);

// The per-party/per-step sub-seeds derived from --seed.
AliceState seeded_alice(int n, std::uint64_t seed);
BobKnownState seeded_bob(int n, std::uint64_t seed);
std::uint64_t sampling_seed(std::uint64_t seed);

}  // namespace hqt::cli
