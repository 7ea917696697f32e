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

#include <cmath>
#include <map>

#include "doctest.h"
#include "hqt/protocol.hpp"

using namespace hqt;

namespace {
const double kInv = 1.0 / std::sqrt(2.0);

AliceState test_alice() {
  return AliceState::create(1, {std::sqrt(0.3), Amplitude(0, 1) * std::sqrt(0.7)});
}

BobKnownState test_bob() {
  return BobKnownState::product({{std::sqrt(0.5), std::sqrt(0.5), 0.7853981633974483}});
}
}  // namespace

TEST_CASE("classical messages enforce the legal flows and bit counts") {
  const ClassicalMessage bell =
      ClassicalMessage::bell_outcomes({BellOutcome::PsiMinus, BellOutcome::PhiPlus});
  CHECK(bell.sender == Party::Alice);
  REQUIRE(bell.recipients.size() == 1);
  CHECK(bell.recipients[0] == Party::Bob);
  CHECK(bell.payload_bits(2) == 4);

  const ClassicalMessage amp = ClassicalMessage::amplitude_outcomes({1, 2});
  CHECK(amp.sender == Party::Bob);
  CHECK(amp.recipients[0] == Party::Alice);
  CHECK(amp.payload_bits(2) == 2);

  const ClassicalMessage phase = ClassicalMessage::phase_outcomes({2});
  CHECK(phase.payload_bits(1) == 1);

  const ClassicalMessage ann = ClassicalMessage::charlie_announcement(CharlieBit{1});
  CHECK(ann.sender == Party::Charlie);
  CHECK(ann.recipients.size() == 2);
  CHECK(ann.payload_bits(3) == 1);
}

TEST_CASE("assembled initial state places alice's coefficients") {
  const AliceState alice = test_alice();
  const StateVector s =
      assemble_initial_state(alice, build_channel(1, ChannelSignConvention::Singlet));
  REQUIRE(s.dim() == 64);
  CHECK(s.qubits()[0] == alice_input(1));
  // index 53 = a1:1, A1B1:10, A2B2:10, C:1 -> alpha_1 * (-)(-)/(2 sqrt 2)
  const Amplitude expected = alice.alphas[1] / (2.0 * std::sqrt(2.0));
  CHECK(std::abs(s.amplitude(53) - expected) < 1e-12);
  // index 0: alpha_0 / (2 sqrt 2)
  CHECK(std::abs(s.amplitude(0) - alice.alphas[0] / (2.0 * std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("steps 2-3 produce the GHZ / twisted forms on the kept pair") {
  // project the channel's controller bit first, then wire in the ancilla
  const StateVector ch = build_channel(1, ChannelSignConvention::Singlet);
  SeededRng rng(0);

  for (int c : {0, 1}) {
    const MeasurementOutcome mc =
        force_measurement(ch, {controller()}, OrthonormalBasis::computational(2),
                          static_cast<std::size_t>(c));
    const StateVector wired = step3_bob_cnot(step2_introduce_ancillas(mc.collapsed, 1), 1);
    const StateVector trio =
        extract_subsystem(wired, {alice_channel(2), bob_channel(2), bob_ancilla(1)});
    if (c == 0) {
      // GHZ: (|000> + |111>)/sqrt2
      CHECK(std::abs(trio.amplitude(0) - Amplitude(kInv)) < 1e-10);
      CHECK(std::abs(trio.amplitude(7) - Amplitude(kInv)) < 1e-10);
    } else {
      // (|011> - |100>)/sqrt2
      CHECK(std::abs(trio.amplitude(3) - Amplitude(kInv)) < 1e-10);
      CHECK(std::abs(trio.amplitude(4) - Amplitude(-kInv)) < 1e-10);
    }
  }
}

TEST_CASE("fixed teleport correction rows (frozen by hand, Singlet)") {
  const std::map<std::pair<BellOutcome, int>, std::string> want = {
      {{BellOutcome::PhiPlus, 0}, "I"},    {{BellOutcome::PhiMinus, 0}, "Z"},
      {{BellOutcome::PsiPlus, 0}, "X"},    {{BellOutcome::PsiMinus, 0}, "-XZ"},
      {{BellOutcome::PhiPlus, 1}, "-XZ"},  {{BellOutcome::PhiMinus, 1}, "X"},
      {{BellOutcome::PsiPlus, 1}, "-Z"},   {{BellOutcome::PsiMinus, 1}, "-I"},
  };
  for (const auto& [key, text] : want)
    CHECK(select_teleport_correction({key.first}, CharlieBit{key.second}).str() == text);

  // the n=2 tensor rule rows
  CHECK(select_teleport_correction({BellOutcome::PsiMinus, BellOutcome::PhiPlus},
                                   CharlieBit{0})
            .str() == "(-XZ)⊗I");
  CHECK(select_teleport_correction({BellOutcome::PsiMinus, BellOutcome::PhiPlus},
                                   CharlieBit{1})
            .str() == "(-I)⊗(-XZ)");
  CHECK_THROWS_AS(select_teleport_correction({}, CharlieBit{0}), DimensionMismatch);
  CHECK_THROWS_AS(select_teleport_correction({BellOutcome::PhiPlus}, CharlieBit{2}), Error);
}

TEST_CASE("select_rsp_correction looks up the table and flags gaps") {
  CorrectionTable table;
  table.direction = CorrectionDirection::RemoteStatePrep;
  CorrectionOp xz;
  xz.factors = {{PauliKind::XZ, +1}};
  table.entries.emplace("amp=2;phase=1;c=0", xz);
  CHECK(select_rsp_correction({2}, {1}, CharlieBit{0}, table).str() == "XZ");
  CHECK_THROWS_AS(select_rsp_correction({1}, {1}, CharlieBit{0}, table),
                  UncorrectableBranch);
  CorrectionTable wrong;
  wrong.direction = CorrectionDirection::Teleport;
  CHECK_THROWS_AS(select_rsp_correction({1}, {1}, CharlieBit{0}, wrong), Error);
}

TEST_CASE("forced full run: every branch bookkeeping field lines up") {
  const OutcomePolicy policy =
      OutcomePolicy::forced({BellOutcome::PsiMinus}, {2}, {1}, 0);
  const ProtocolTranscript t = run_protocol(test_alice(), test_bob(),
                                            ChannelSignConvention::Singlet, policy);
  CHECK(t.n == 1);
  REQUIRE(t.entries.size() == 6);
  CHECK(t.entries[0].action == "bell_measurement");
  CHECK(t.entries[0].outcome_labels[0] == "psi-");
  CHECK(t.entries[3].outcome_labels[0] == "2");
  CHECK(t.entries[5].actor == Party::Charlie);
  CHECK(t.teleport_correction.str() == "-XZ");
  CHECK(t.teleport_fidelity == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.rsp_fidelity == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.joint_probability == doctest::Approx(1.0 / 32.0).epsilon(1e-12));
  CHECK(t.classical_bits == 5);  // 2 + 1 + 1 + 1
  CHECK_NOTHROW(t.validate());
}

TEST_CASE("uniform branch probabilities at n=1: every step is a fair coin") {
  // bell outcomes are 1/4 each regardless of alice's state; amplitude, phase
  // and controller splits are 1/2 each
  const AliceState alice = test_alice();
  const BobKnownState bob = test_bob();
  const StateVector s0 =
      assemble_initial_state(alice, build_channel(1, ChannelSignConvention::Singlet));
  SeededRng rng(0);

  for (int b = 0; b < 4; ++b) {
    OutcomePolicy p;
    p.bell = std::vector<BellOutcome>{static_cast<BellOutcome>(b)};
    const Step1Result r = step1_alice_bell_measurement(s0, 1, p, rng);
    CHECK(r.probability == doctest::Approx(0.25).epsilon(1e-12));
  }

  OutcomePolicy p;
  p.bell = std::vector<BellOutcome>{BellOutcome::PhiPlus};
  const Step1Result s1 = step1_alice_bell_measurement(s0, 1, p, rng);
  const StateVector s3 = step3_bob_cnot(step2_introduce_ancillas(s1.state, 1), 1);
  for (int a : {1, 2}) {
    OutcomePolicy pa;
    pa.amplitude = std::vector<int>{a};
    const StepOutcomeResult s4 = step4_amplitude_measurement(s3, bob, pa, rng);
    CHECK(s4.probability == doctest::Approx(0.5).epsilon(1e-12));
    for (int f : {1, 2}) {
      OutcomePolicy pf;
      pf.phase = std::vector<int>{f};
      const StepOutcomeResult s5 = step5_phase_measurement(s4.state, bob, s4.outcomes, pf, rng);
      CHECK(s5.probability == doctest::Approx(0.5).epsilon(1e-12));
      for (int c : {0, 1}) {
        OutcomePolicy pc;
        pc.charlie = c;
        const Step6Result s6 = step6_charlie_measurement(s5.state, pc, rng);
        CHECK(s6.probability == doctest::Approx(0.5).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("sampled runs succeed in both directions for random parties") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const AliceState alice = random_alice(1, 1000 + seed);
    const BobKnownState bob = random_bob_product(1, 2000 + seed);
    const ProtocolTranscript t = run_protocol(alice, bob, ChannelSignConvention::Singlet,
                                              OutcomePolicy::sample(seed));
    CHECK(t.teleport_fidelity == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(t.rsp_fidelity == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(t.joint_probability > 0.0);
    CHECK(t.classical_bits == 5);
  }
}

TEST_CASE("n=2 sampled run works and counts 4n+1 classical bits") {
  const ProtocolTranscript t =
      run_protocol(random_alice(2, 31), random_bob_product(2, 32),
                   ChannelSignConvention::Singlet, OutcomePolicy::sample(33));
  CHECK(t.teleport_fidelity == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.rsp_fidelity == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.classical_bits == 9);
}

TEST_CASE("general mode: showcase branch and sampled runs") {
  // bob's product state viewed in the general representation must behave
  // identically on the showcase branch
  const BobKnownState bob = test_bob().to_general();
  const OutcomePolicy policy = OutcomePolicy::forced({BellOutcome::PhiPlus}, {1}, {1}, 0);
  const ProtocolTranscript t =
      run_protocol(test_alice(), bob, ChannelSignConvention::Singlet, policy);
  CHECK(t.mode == BobKnownState::Mode::General);
  CHECK(t.teleport_fidelity == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.rsp_fidelity == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(t.rsp_correction.str() == "I");

  // a genuinely entangled known state, sampled: teleportation must still be
  // exact; the prepared state is exact whenever the branch is correctable
  const double q = 0.5;
  const BobKnownState ent =
      BobKnownState::general({std::sqrt(q), 0.0, 0.0, std::sqrt(1 - q)}, {0, 0, 0, 1.1});
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    try {
      const ProtocolTranscript g = run_protocol(random_alice(2, 50 + seed), ent,
                                                ChannelSignConvention::Singlet,
                                                OutcomePolicy::sample(seed));
      CHECK(g.teleport_fidelity == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(g.rsp_fidelity == doctest::Approx(1.0).epsilon(1e-10));
    } catch (const UncorrectableBranch&) {
      // a legitimate outcome in general mode; the oracle suite measures how often
    }
  }
}

TEST_CASE("forced policies are validated") {
  const AliceState alice = test_alice();
  const BobKnownState bob = test_bob();
  SeededRng rng(0);
  const StateVector s0 =
      assemble_initial_state(alice, build_channel(1, ChannelSignConvention::Singlet));

  OutcomePolicy two_pairs;
  two_pairs.bell = std::vector<BellOutcome>{BellOutcome::PhiPlus, BellOutcome::PhiPlus};
  CHECK_THROWS_AS(step1_alice_bell_measurement(s0, 1, two_pairs, rng), DimensionMismatch);

  OutcomePolicy bad_amp;
  bad_amp.amplitude = std::vector<int>{3};
  CHECK_THROWS_AS(run_protocol(alice, bob, ChannelSignConvention::Singlet, bad_amp), Error);

  OutcomePolicy bad_charlie;
  bad_charlie.charlie = 7;
  CHECK_THROWS_AS(run_protocol(alice, bob, ChannelSignConvention::Singlet, bad_charlie),
                  Error);

  CHECK_THROWS_AS(run_protocol(random_alice(2, 1), bob, ChannelSignConvention::Singlet,
                               OutcomePolicy::sample(0)),
                  DimensionMismatch);
}

TEST_CASE("transcript validation rejects malformed records") {
  ProtocolTranscript t;
  CHECK_THROWS_AS(t.validate(), InvariantViolation);
  t.entries.resize(6);
  for (int i = 0; i < 6; ++i) t.entries[static_cast<std::size_t>(i)].step = i + 1;
  t.joint_probability = 0.5;
  CHECK_NOTHROW(t.validate());
  t.joint_probability = 0.0;
  CHECK_THROWS_AS(t.validate(), InvariantViolation);
  t.joint_probability = 0.5;
  t.entries[2].step = 5;
  CHECK_THROWS_AS(t.validate(), InvariantViolation);
}
