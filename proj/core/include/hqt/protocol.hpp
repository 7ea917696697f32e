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

#include "hqt/correction.hpp"

namespace hqt {

enum class Party { Alice, Bob, Charlie };
std::string to_string(Party p);

// One classical transmission. The protocol fixes the legal flows: Bell
// outcomes travel Alice -> Bob, Bob's measurement outcomes travel back to
// Alice, and the controller's bit is broadcast to both.
struct ClassicalMessage {
  enum class Kind { BellOutcomes, AmplitudeOutcomes, PhaseOutcomes, CharlieAnnouncement };

  Kind kind = Kind::BellOutcomes;
  Party sender = Party::Alice;
  std::vector<Party> recipients;
  std::vector<BellOutcome> bell;  // BellOutcomes payload
  std::vector<int> outcomes;      // amplitude/phase outcome indices, 1-based
  int charlie_bit = -1;           // CharlieAnnouncement payload

  static ClassicalMessage bell_outcomes(std::vector<BellOutcome> o);
  static ClassicalMessage amplitude_outcomes(std::vector<int> o);
  static ClassicalMessage phase_outcomes(std::vector<int> o);
  static ClassicalMessage charlie_announcement(CharlieBit c);

  // Payload size in classical bits (2 per Bell outcome, 1 per binary
  // outcome; General-mode block outcomes cost ceil(log2) bits).
  int payload_bits(int n) const;
};

struct TranscriptEntry {
  int step = 0;  // 1..6
  Party actor = Party::Alice;
  std::string action;
  std::vector<std::string> outcome_labels;
  double probability = 1.0;
  std::optional<ClassicalMessage> message;
};

// Complete record of one protocol run. validate() enforces the step order
// 1..6 and a joint probability in (0, 1]; serialization refuses transcripts
// that fail it.
struct ProtocolTranscript {
  int n = 0;
  ChannelSignConvention convention = ChannelSignConvention::Singlet;
  BobKnownState::Mode mode = BobKnownState::Mode::Product;
  std::vector<TranscriptEntry> entries;
  CorrectionOp teleport_correction;
  CorrectionOp rsp_correction;
  double teleport_fidelity = 0.0;
  double rsp_fidelity = 0.0;
  double joint_probability = 1.0;
  int classical_bits = 0;

  void validate() const;
};

// Which outcome each measuring step takes. Any step may be forced; steps left
// unforced are sampled from the seeded generator. Forcing an outcome of
// probability below 1e-14 aborts the run with ZeroProbabilityOutcome.
struct OutcomePolicy {
  std::optional<std::vector<BellOutcome>> bell;
  std::optional<std::vector<int>> amplitude;  // 1-based
  std::optional<std::vector<int>> phase;      // 1-based
  std::optional<int> charlie;
  std::uint64_t seed = 0;

  static OutcomePolicy sample(std::uint64_t seed);
  static OutcomePolicy forced(std::vector<BellOutcome> bell, std::vector<int> amplitude,
                              std::vector<int> phase, int charlie);
};

// |alice> (x) channel, register a_1..a_n, A_1, B_1, ..., A_2n, B_2n, C.
StateVector assemble_initial_state(const AliceState& alice, const StateVector& channel);

// The six protocol steps. Each consumes the current joint state and returns
// the collapsed successor plus the outcome record for its measurement (steps
// 2 and 3 are deterministic).
struct Step1Result {
  std::vector<BellOutcome> outcomes;  // pair k = (a_k, A_k)
  StateVector state;
  double probability = 1.0;
};
Step1Result step1_alice_bell_measurement(const StateVector& s, int n,
                                         const OutcomePolicy& policy, SeededRng& rng);

StateVector step2_introduce_ancillas(const StateVector& s, int n);  // e_k in |0>
StateVector step3_bob_cnot(const StateVector& s, int n);  // CNOT B_{n+k} -> e_k

struct StepOutcomeResult {
  std::vector<int> outcomes;  // 1-based; General mode: one block outcome
  StateVector state;
  double probability = 1.0;
};
// Step 4: B_{n+k} in the amplitude basis of Bob's qubit k (Product), or the
// whole B_{n+1}..B_{2n} block in the General amplitude basis.
StepOutcomeResult step4_amplitude_measurement(const StateVector& s, const BobKnownState& bob,
                                              const OutcomePolicy& policy, SeededRng& rng);
// Step 5: e_k in the phase basis selected by step 4's outcome k (Product), or
// the e-block in the General phase basis.
StepOutcomeResult step5_phase_measurement(const StateVector& s, const BobKnownState& bob,
                                          const std::vector<int>& step4_outcomes,
                                          const OutcomePolicy& policy, SeededRng& rng);

struct Step6Result {
  CharlieBit bit;
  StateVector state;
  double probability = 1.0;
};
Step6Result step6_charlie_measurement(const StateVector& s, const OutcomePolicy& policy,
                                      SeededRng& rng);

// Bob's correction: per-qubit factor k is the fixed teleport table row for
// (bell outcome k, charlie bit), acting on B_1..B_n.
CorrectionOp select_teleport_correction(const std::vector<BellOutcome>& bell, CharlieBit c);

// Alice's correction, looked up in a derived table; throws
// UncorrectableBranch when the key has no working Pauli product.
CorrectionOp select_rsp_correction(const std::vector<int>& amp_outcomes,
                                   const std::vector<int>& phase_outcomes, CharlieBit c,
                                   const CorrectionTable& table);

std::vector<QubitLabel> teleport_targets(int n);  // B_1..B_n
std::vector<QubitLabel> rsp_targets(int n);       // A_{n+1}..A_{2n}

// Runs steps 1-6, applies both corrections, and scores the two directions
// against state_of(alice) / state_of(bob). Product mode looks Alice's
// correction up in rsp_table (derived on the fly when null); General mode
// searches the branch directly.
ProtocolTranscript run_protocol(const AliceState& alice, const BobKnownState& bob,
                                ChannelSignConvention conv, const OutcomePolicy& policy,
                                const CorrectionTable* rsp_table = nullptr);

}  // namespace hqt
