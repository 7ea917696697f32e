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

#include "hqt/protocol.hpp"

#include <cmath>
#include <utility>

#include "hqt/oracle.hpp"

namespace hqt {

std::string to_string(Party p) {
  switch (p) {
    case Party::Alice: return "alice";
    case Party::Bob: return "bob";
    case Party::Charlie: return "charlie";
  }
  return "?";
}

ClassicalMessage ClassicalMessage::bell_outcomes(std::vector<BellOutcome> o) {
  ClassicalMessage m;
  m.kind = Kind::BellOutcomes;
  m.sender = Party::Alice;
  m.recipients = {Party::Bob};
  m.bell = std::move(o);
  return m;
}

ClassicalMessage ClassicalMessage::amplitude_outcomes(std::vector<int> o) {
  ClassicalMessage m;
  m.kind = Kind::AmplitudeOutcomes;
  m.sender = Party::Bob;
  m.recipients = {Party::Alice};
  m.outcomes = std::move(o);
  return m;
}

ClassicalMessage ClassicalMessage::phase_outcomes(std::vector<int> o) {
  ClassicalMessage m;
  m.kind = Kind::PhaseOutcomes;
  m.sender = Party::Bob;
  m.recipients = {Party::Alice};
  m.outcomes = std::move(o);
  return m;
}

ClassicalMessage ClassicalMessage::charlie_announcement(CharlieBit c) {
  ClassicalMessage m;
  m.kind = Kind::CharlieAnnouncement;
  m.sender = Party::Charlie;
  m.recipients = {Party::Alice, Party::Bob};
  m.charlie_bit = c.value;
  return m;
}

int ClassicalMessage::payload_bits(int n) const {
  switch (kind) {
    case Kind::BellOutcomes:
      return 2 * n;  // four outcomes per pair
    case Kind::AmplitudeOutcomes:
    case Kind::PhaseOutcomes:
      return n;  // n binary outcomes, or one 2^n-way outcome
    case Kind::CharlieAnnouncement:
      return 1;
  }
  return 0;
}

void ProtocolTranscript::validate() const {
  if (entries.size() != 6) throw InvariantViolation("transcript must record steps 1..6");
  for (int i = 0; i < 6; ++i)
    if (entries[static_cast<std::size_t>(i)].step != i + 1)
      throw InvariantViolation("transcript steps are out of order");
  if (!(joint_probability > 0.0) || joint_probability > 1.0 + kNormTol)
    throw InvariantViolation("transcript joint probability must lie in (0, 1]");
}

OutcomePolicy OutcomePolicy::sample(std::uint64_t seed) {
  OutcomePolicy p;
  p.seed = seed;
  return p;
}

OutcomePolicy OutcomePolicy::forced(std::vector<BellOutcome> bell, std::vector<int> amplitude,
                                    std::vector<int> phase, int charlie) {
  OutcomePolicy p;
  p.bell = std::move(bell);
  p.amplitude = std::move(amplitude);
  p.phase = std::move(phase);
  p.charlie = charlie;
  return p;
}

StateVector assemble_initial_state(const AliceState& alice, const StateVector& channel) {
  return tensor_product(state_of(alice), channel);
}

namespace {

// Forced when a value is supplied, sampled otherwise.
MeasurementOutcome resolve(const StateVector& s, const std::vector<QubitLabel>& qubits,
                           const OrthonormalBasis& basis, std::optional<std::size_t> forced,
                           SeededRng& rng) {
  if (forced) return force_measurement(s, qubits, basis, *forced);
  return sample_measurement(s, qubits, basis, rng);
}

}  // namespace

Step1Result step1_alice_bell_measurement(const StateVector& s, int n,
                                         const OutcomePolicy& policy, SeededRng& rng) {
  if (policy.bell && policy.bell->size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("forced Bell outcomes must list one outcome per pair");
  const OrthonormalBasis basis = bell_basis();
  Step1Result result{{}, s, 1.0};
  for (int k = 1; k <= n; ++k) {
    std::optional<std::size_t> forced;
    if (policy.bell)
      forced = static_cast<std::size_t>((*policy.bell)[static_cast<std::size_t>(k - 1)]);
    MeasurementOutcome m =
        resolve(result.state, {alice_input(k), alice_channel(k)}, basis, forced, rng);
    result.outcomes.push_back(static_cast<BellOutcome>(m.outcome_index));
    result.probability *= m.probability;
    result.state = std::move(m.collapsed);
  }
  return result;
}

StateVector step2_introduce_ancillas(const StateVector& s, int n) {
  std::vector<QubitLabel> ancillas;
  for (int k = 1; k <= n; ++k) ancillas.push_back(bob_ancilla(k));
  return tensor_product(s, StateVector::zero_state(std::move(ancillas)));
}

StateVector step3_bob_cnot(const StateVector& s, int n) {
  StateVector out = s;
  for (int k = 1; k <= n; ++k) out = apply_cnot(out, bob_channel(n + k), bob_ancilla(k));
  return out;
}

namespace {

void check_forced_list(const std::optional<std::vector<int>>& forced, const BobKnownState& bob,
                       const char* step) {
  if (!forced) return;
  if (bob.mode == BobKnownState::Mode::Product) {
    if (forced->size() != static_cast<std::size_t>(bob.n))
      throw DimensionMismatch(std::string(step) + ": need one forced outcome per qubit");
    for (int o : *forced)
      if (o != 1 && o != 2)
        throw Error(std::string(step) + ": product-mode outcomes are 1 or 2");
  } else {
    if (forced->size() != 1)
      throw DimensionMismatch(std::string(step) + ": General mode takes one block outcome");
    const int hi = 1 << bob.n;
    if ((*forced)[0] < 1 || (*forced)[0] > hi)
      throw Error(std::string(step) + ": block outcome out of range");
  }
}

}  // namespace

StepOutcomeResult step4_amplitude_measurement(const StateVector& s, const BobKnownState& bob,
                                              const OutcomePolicy& policy, SeededRng& rng) {
  check_forced_list(policy.amplitude, bob, "step 4");
  StepOutcomeResult result{{}, s, 1.0};
  if (bob.mode == BobKnownState::Mode::Product) {
    for (int k = 1; k <= bob.n; ++k) {
      const BobQubit& q = bob.factors[static_cast<std::size_t>(k - 1)];
      std::optional<std::size_t> forced;
      if (policy.amplitude)
        forced = static_cast<std::size_t>((*policy.amplitude)[static_cast<std::size_t>(k - 1)] - 1);
      MeasurementOutcome m = resolve(result.state, {bob_channel(bob.n + k)},
                                     amplitude_basis(q.beta0, q.beta1), forced, rng);
      result.outcomes.push_back(static_cast<int>(m.outcome_index) + 1);
      result.probability *= m.probability;
      result.state = std::move(m.collapsed);
    }
  } else {
    std::vector<QubitLabel> block;
    for (int k = 1; k <= bob.n; ++k) block.push_back(bob_channel(bob.n + k));
    std::optional<std::size_t> forced;
    if (policy.amplitude) forced = static_cast<std::size_t>((*policy.amplitude)[0] - 1);
    MeasurementOutcome m =
        resolve(result.state, block, amplitude_basis_general(bob.betas), forced, rng);
    result.outcomes.push_back(static_cast<int>(m.outcome_index) + 1);
    result.probability = m.probability;
    result.state = std::move(m.collapsed);
  }
  return result;
}

StepOutcomeResult step5_phase_measurement(const StateVector& s, const BobKnownState& bob,
                                          const std::vector<int>& step4_outcomes,
                                          const OutcomePolicy& policy, SeededRng& rng) {
  check_forced_list(policy.phase, bob, "step 5");
  StepOutcomeResult result{{}, s, 1.0};
  if (bob.mode == BobKnownState::Mode::Product) {
    if (step4_outcomes.size() != static_cast<std::size_t>(bob.n))
      throw DimensionMismatch("step 5: need step 4's outcome for every qubit");
    for (int k = 1; k <= bob.n; ++k) {
      const BobQubit& q = bob.factors[static_cast<std::size_t>(k - 1)];
      std::optional<std::size_t> forced;
      if (policy.phase)
        forced = static_cast<std::size_t>((*policy.phase)[static_cast<std::size_t>(k - 1)] - 1);
      MeasurementOutcome m =
          resolve(result.state, {bob_ancilla(k)},
                  phase_basis(q.theta, step4_outcomes[static_cast<std::size_t>(k - 1)]),
                  forced, rng);
      result.outcomes.push_back(static_cast<int>(m.outcome_index) + 1);
      result.probability *= m.probability;
      result.state = std::move(m.collapsed);
    }
  } else {
    std::vector<QubitLabel> block;
    for (int k = 1; k <= bob.n; ++k) block.push_back(bob_ancilla(k));
    std::optional<std::size_t> forced;
    if (policy.phase) forced = static_cast<std::size_t>((*policy.phase)[0] - 1);
    MeasurementOutcome m =
        resolve(result.state, block, phase_basis_general(bob.thetas), forced, rng);
    result.outcomes.push_back(static_cast<int>(m.outcome_index) + 1);
    result.probability = m.probability;
    result.state = std::move(m.collapsed);
  }
  return result;
}

Step6Result step6_charlie_measurement(const StateVector& s, const OutcomePolicy& policy,
                                      SeededRng& rng) {
  if (policy.charlie && *policy.charlie != 0 && *policy.charlie != 1)
    throw Error("step 6: controller bit must be 0 or 1");
  std::optional<std::size_t> forced;
  if (policy.charlie) forced = static_cast<std::size_t>(*policy.charlie);
  MeasurementOutcome m =
      resolve(s, {controller()}, OrthonormalBasis::computational(2), forced, rng);
  return Step6Result{CharlieBit{static_cast<int>(m.outcome_index)}, std::move(m.collapsed),
                     m.probability};
}

namespace {

// The protocol's fixed correction rows: Bob's single-qubit factor for each
// (Bell outcome, controller bit), valid under the Singlet channel convention.
PauliFactor table_row(BellOutcome bell, int c) {
  if (c == 0) {
    switch (bell) {
      case BellOutcome::PhiPlus: return {PauliKind::I, +1};
      case BellOutcome::PhiMinus: return {PauliKind::Z, +1};
      case BellOutcome::PsiPlus: return {PauliKind::X, +1};
      case BellOutcome::PsiMinus: return {PauliKind::XZ, -1};
    }
  } else {
    switch (bell) {
      case BellOutcome::PhiPlus: return {PauliKind::XZ, -1};
      case BellOutcome::PhiMinus: return {PauliKind::X, +1};
      case BellOutcome::PsiPlus: return {PauliKind::Z, -1};
      case BellOutcome::PsiMinus: return {PauliKind::I, -1};
    }
  }
  return {PauliKind::I, +1};
}

}  // namespace

CorrectionOp select_teleport_correction(const std::vector<BellOutcome>& bell, CharlieBit c) {
  if (bell.empty()) throw DimensionMismatch("no Bell outcomes to correct for");
  if (c.value != 0 && c.value != 1) throw Error("controller bit must be 0 or 1");
  CorrectionOp op;
  op.factors.reserve(bell.size());
  for (BellOutcome b : bell) op.factors.push_back(table_row(b, c.value));
  return op;
}

CorrectionOp select_rsp_correction(const std::vector<int>& amp_outcomes,
                                   const std::vector<int>& phase_outcomes, CharlieBit c,
                                   const CorrectionTable& table) {
  if (table.direction != CorrectionDirection::RemoteStatePrep)
    throw Error("correction table is not for the prepared-state direction");
  const std::string key = rsp_key(amp_outcomes, phase_outcomes, c);
  const auto it = table.entries.find(key);
  if (it == table.entries.end())
    throw UncorrectableBranch("no correction recorded for outcome key " + key);
  return it->second;
}

std::vector<QubitLabel> teleport_targets(int n) {
  std::vector<QubitLabel> t;
  for (int k = 1; k <= n; ++k) t.push_back(bob_channel(k));
  return t;
}

std::vector<QubitLabel> rsp_targets(int n) {
  std::vector<QubitLabel> t;
  for (int k = 1; k <= n; ++k) t.push_back(alice_channel(n + k));
  return t;
}

ProtocolTranscript run_protocol(const AliceState& alice, const BobKnownState& bob,
                                ChannelSignConvention conv, const OutcomePolicy& policy,
                                const CorrectionTable* rsp_table) {
  if (alice.n != bob.n)
    throw DimensionMismatch("alice and bob must agree on the qubit count n");
  const int n = alice.n;

  ProtocolTranscript t;
  t.n = n;
  t.convention = conv;
  t.mode = bob.mode;

  SeededRng rng(policy.seed);
  StateVector state = assemble_initial_state(alice, build_channel(n, conv));

  // step 1: Alice's Bell measurements, outcomes to Bob
  Step1Result s1 = step1_alice_bell_measurement(state, n, policy, rng);
  {
    TranscriptEntry e{1, Party::Alice, "bell_measurement", {}, s1.probability,
                      ClassicalMessage::bell_outcomes(s1.outcomes)};
    for (BellOutcome b : s1.outcomes) e.outcome_labels.push_back(to_string(b));
    t.entries.push_back(std::move(e));
  }

  // steps 2-3: Bob wires his ancillas in
  StateVector s2 = step2_introduce_ancillas(s1.state, n);
  t.entries.push_back({2, Party::Bob, "introduce_ancillas", {}, 1.0, std::nullopt});
  StateVector s3 = step3_bob_cnot(s2, n);
  t.entries.push_back({3, Party::Bob, "controlled_not", {}, 1.0, std::nullopt});

  // step 4: Bob's amplitude measurement, outcomes to Alice
  StepOutcomeResult s4 = step4_amplitude_measurement(s3, bob, policy, rng);
  {
    TranscriptEntry e{4, Party::Bob, "amplitude_measurement", {}, s4.probability,
                      ClassicalMessage::amplitude_outcomes(s4.outcomes)};
    for (int o : s4.outcomes) e.outcome_labels.push_back(std::to_string(o));
    t.entries.push_back(std::move(e));
  }

  // step 5: Bob's phase measurement, outcomes to Alice
  StepOutcomeResult s5 = step5_phase_measurement(s4.state, bob, s4.outcomes, policy, rng);
  {
    TranscriptEntry e{5, Party::Bob, "phase_measurement", {}, s5.probability,
                      ClassicalMessage::phase_outcomes(s5.outcomes)};
    for (int o : s5.outcomes) e.outcome_labels.push_back(std::to_string(o));
    t.entries.push_back(std::move(e));
  }

  // step 6: the controller consents and broadcasts the bit
  Step6Result s6 = step6_charlie_measurement(s5.state, policy, rng);
  t.entries.push_back({6, Party::Charlie, "controller_measurement",
                       {std::to_string(s6.bit.value)}, s6.probability,
                       ClassicalMessage::charlie_announcement(s6.bit)});

  t.joint_probability =
      s1.probability * s4.probability * s5.probability * s6.probability;
  t.classical_bits = 0;
  for (const TranscriptEntry& e : t.entries)
    if (e.message) t.classical_bits += e.message->payload_bits(n);

  // corrections act locally, so score them on the extracted blocks
  const StateVector b_block = extract_subsystem(s6.state, teleport_targets(n));
  const StateVector a_block = extract_subsystem(s6.state, rsp_targets(n));

  t.teleport_correction = select_teleport_correction(s1.outcomes, s6.bit);
  const StateVector alice_target = state_of(alice);
  t.teleport_fidelity =
      fidelity(apply_correction(b_block, b_block.qubits(), t.teleport_correction), alice_target);

  const StateVector bob_target = state_of(bob);
  if (bob.mode == BobKnownState::Mode::Product) {
    CorrectionTable derived;
    const CorrectionTable* table = rsp_table;
    if (!table) {
      derived = derive_rsp_table(bob, conv);
      table = &derived;
    }
    t.rsp_correction = select_rsp_correction(s4.outcomes, s5.outcomes, s6.bit, *table);
  } else {
    // General mode has no published table; search this branch directly.
    std::optional<CorrectionOp> found = derive_correction_bruteforce(a_block, bob_target);
    if (!found)
      throw UncorrectableBranch("no Pauli product restores Bob's state on branch " +
                                rsp_key(s4.outcomes, s5.outcomes, s6.bit));
    t.rsp_correction = *found;
  }
  t.rsp_fidelity =
      fidelity(apply_correction(a_block, a_block.qubits(), t.rsp_correction), bob_target);

  t.validate();
  return t;
}

}  // namespace hqt
