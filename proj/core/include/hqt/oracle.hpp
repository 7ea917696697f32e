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

#include <optional>
#include <string>
#include <vector>

#include "hqt/protocol.hpp"

namespace hqt {

// Independent verification layer: walks every measurement branch, derives
// corrections by exhaustive search, and cross-checks the engine's fixed
// tables. Nothing here consults select_* when deriving.

struct BranchReport {
  std::vector<BellOutcome> bell;
  std::vector<int> amplitude;
  std::vector<int> phase;
  int charlie = 0;
  double probability = 0.0;  // product of the branch's step probabilities
  std::optional<CorrectionOp> teleport_correction;
  std::optional<CorrectionOp> rsp_correction;
  double teleport_fidelity = 0.0;  // after applying the found correction
  double rsp_fidelity = 0.0;       // (raw fidelity when none was found)

  std::string key() const;
};

// Every nonzero-probability branch (probability > 1e-14), in deterministic
// lexicographic outcome order. Bounded at n <= 3 (throws ResourceBound).
std::vector<BranchReport> enumerate_all_branches(const AliceState& alice,
                                                 const BobKnownState& bob,
                                                 ChannelSignConvention conv);

// First signed Pauli product (I < X < Z < XZ per qubit, first qubit most
// significant) mapping `actual` onto `target` with fidelity 1 within 1e-10;
// nullopt when none exists. Bounded at 3 qubits.
std::optional<CorrectionOp> derive_correction_bruteforce(const StateVector& actual,
                                                         const StateVector& target);

struct Table1RowCheck {
  BellOutcome bell = BellOutcome::PhiPlus;
  int charlie = 0;
  CorrectionOp table_op;                    // the engine's fixed row
  std::optional<CorrectionOp> derived_op;   // the search's answer
  double fidelity_after_table_op = 0.0;
  bool operators_agree = false;             // equal up to global phase
  bool pass = false;
};

// Reproduces all 8 fixed teleport rows at n = 1 against a generic input and
// checks the exhaustive search agrees with each row.
std::vector<Table1RowCheck> verify_table1(ChannelSignConvention conv);

// Derives Alice's correction for every (amplitude outcomes, phase outcomes,
// charlie) key by exhaustive search. Product mode only, n <= 3.
CorrectionTable derive_rsp_table(const BobKnownState& bob, ChannelSignConvention conv);

// The engine's fixed teleport rows packaged as a table artifact
// (provenance Builtin), keyed over all 4^n x 2 outcome combinations.
CorrectionTable builtin_teleport_table(int n);

// Walks the showcase branch -- all Bell outcomes phi+, amplitude and phase
// outcomes 1, controller bit 0 -- where both directions must come out exact
// with no correction at all.
struct ShowcaseReport {
  bool pass = false;
  double max_deviation_teleport = 0.0;  // B block vs Alice's state, up to phase
  double max_deviation_rsp = 0.0;       // A block vs Bob's state, up to phase
  double branch_probability = 0.0;
};
ShowcaseReport reproduce_showcase(const AliceState& alice, const BobKnownState& bob,
                                  ChannelSignConvention conv = ChannelSignConvention::Singlet);

// Mean teleport fidelity over the full branch distribution when Bob ignores
// the controller and always corrects as if the announced bit were
// guessed_bit. Strictly below 1 for generic inputs -- the controller's
// consent is load-bearing.
double mean_fidelity_with_guessed_charlie(const AliceState& alice, const BobKnownState& bob,
                                          ChannelSignConvention conv, int guessed_bit);

}  // namespace hqt
