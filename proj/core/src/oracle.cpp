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

#include "hqt/oracle.hpp"

#include <functional>
#include <sstream>
#include <utility>

namespace hqt {

namespace {

constexpr std::uint64_t kGenericAliceSeed = 0xA11CEull;
constexpr std::uint64_t kGenericBobSeed = 0xB0Bull;

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

std::string join_bells(const std::vector<BellOutcome>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << to_string(v[i]);
  }
  return out.str();
}

struct BranchVisit {
  const std::vector<BellOutcome>& bell;
  const std::vector<int>& amplitude;
  const std::vector<int>& phase;
  int charlie;
  double probability;
  const StateVector& state;  // post-step-6 register: B_1..B_n, A_{n+1}..A_{2n}
};

// Depth-first walk over every branch with probability > 1e-14, in
// lexicographic outcome order (Bell pairs, then amplitude, phase, controller).
void walk_branches(const AliceState& alice, const BobKnownState& bob,
                   ChannelSignConvention conv,
                   const std::function<void(const BranchVisit&)>& visit) {
  if (alice.n != bob.n) throw DimensionMismatch("alice and bob must agree on n");
  const int n = alice.n;
  if (n > 3) throw ResourceBound("branch enumeration is bounded at n <= 3");

  const OrthonormalBasis bellb = bell_basis();
  std::vector<BellOutcome> bells;
  std::vector<int> amps;
  std::vector<int> phases;

  std::function<void(const StateVector&, double)> do_charlie =
      [&](const StateVector& s, double p) {
        for (const MeasurementOutcome& m :
             enumerate_measurement(s, {controller()}, OrthonormalBasis::computational(2)))
          visit(BranchVisit{bells, amps, phases, static_cast<int>(m.outcome_index),
                            p * m.probability, m.collapsed});
      };

  std::function<void(const StateVector&, double, int)> do_phase =
      [&](const StateVector& s, double p, int k) {
        if (bob.mode == BobKnownState::Mode::Product) {
          if (k > n) return do_charlie(s, p);
          const BobQubit& q = bob.factors[static_cast<std::size_t>(k - 1)];
          const OrthonormalBasis basis =
              phase_basis(q.theta, amps[static_cast<std::size_t>(k - 1)]);
          for (const MeasurementOutcome& m :
               enumerate_measurement(s, {bob_ancilla(k)}, basis)) {
            phases.push_back(static_cast<int>(m.outcome_index) + 1);
            do_phase(m.collapsed, p * m.probability, k + 1);
            phases.pop_back();
          }
        } else {
          std::vector<QubitLabel> block;
          for (int j = 1; j <= n; ++j) block.push_back(bob_ancilla(j));
          for (const MeasurementOutcome& m :
               enumerate_measurement(s, block, phase_basis_general(bob.thetas))) {
            phases.push_back(static_cast<int>(m.outcome_index) + 1);
            do_charlie(m.collapsed, p * m.probability);
            phases.pop_back();
          }
        }
      };

  std::function<void(const StateVector&, double, int)> do_amplitude =
      [&](const StateVector& s, double p, int k) {
        if (bob.mode == BobKnownState::Mode::Product) {
          if (k > n) return do_phase(s, p, 1);
          const BobQubit& q = bob.factors[static_cast<std::size_t>(k - 1)];
          for (const MeasurementOutcome& m : enumerate_measurement(
                   s, {bob_channel(n + k)}, amplitude_basis(q.beta0, q.beta1))) {
            amps.push_back(static_cast<int>(m.outcome_index) + 1);
            do_amplitude(m.collapsed, p * m.probability, k + 1);
            amps.pop_back();
          }
        } else {
          std::vector<QubitLabel> block;
          for (int j = 1; j <= n; ++j) block.push_back(bob_channel(n + j));
          for (const MeasurementOutcome& m :
               enumerate_measurement(s, block, amplitude_basis_general(bob.betas))) {
            amps.push_back(static_cast<int>(m.outcome_index) + 1);
            do_phase(m.collapsed, p * m.probability, 1);
            amps.pop_back();
          }
        }
      };

  std::function<void(const StateVector&, double, int)> do_bell =
      [&](const StateVector& s, double p, int k) {
        if (k > n) {
          const StateVector wired = step3_bob_cnot(step2_introduce_ancillas(s, n), n);
          return do_amplitude(wired, p, 1);
        }
        for (const MeasurementOutcome& m :
             enumerate_measurement(s, {alice_input(k), alice_channel(k)}, bellb)) {
          bells.push_back(static_cast<BellOutcome>(m.outcome_index));
          do_bell(m.collapsed, p * m.probability, k + 1);
          bells.pop_back();
        }
      };

  do_bell(assemble_initial_state(alice, build_channel(n, conv)), 1.0, 1);
}

// Runs one fully forced branch through the six steps; returns the surviving
// register and the branch probability.
struct ForcedBranch {
  StateVector state;
  double probability = 0.0;
};

ForcedBranch run_forced_branch(const AliceState& alice, const BobKnownState& bob,
                               ChannelSignConvention conv, const OutcomePolicy& policy) {
  SeededRng rng(0);  // unused: every outcome is forced
  const int n = alice.n;
  StateVector s0 = assemble_initial_state(alice, build_channel(n, conv));
  Step1Result s1 = step1_alice_bell_measurement(s0, n, policy, rng);
  StateVector s3 = step3_bob_cnot(step2_introduce_ancillas(s1.state, n), n);
  StepOutcomeResult s4 = step4_amplitude_measurement(s3, bob, policy, rng);
  StepOutcomeResult s5 = step5_phase_measurement(s4.state, bob, s4.outcomes, policy, rng);
  Step6Result s6 = step6_charlie_measurement(s5.state, policy, rng);
  return {std::move(s6.state),
          s1.probability * s4.probability * s5.probability * s6.probability};
}

std::vector<int> all_ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

std::vector<BellOutcome> all_phi_plus(int n) {
  return std::vector<BellOutcome>(static_cast<std::size_t>(n), BellOutcome::PhiPlus);
}

}  // namespace

std::string BranchReport::key() const {
  std::ostringstream out;
  out << "bell=" << join_bells(bell) << ";amp=" << join_ints(amplitude)
      << ";phase=" << join_ints(phase) << ";c=" << charlie;
  return out.str();
}

std::optional<CorrectionOp> derive_correction_bruteforce(const StateVector& actual,
                                                         const StateVector& target) {
  if (actual.num_qubits() != target.num_qubits())
    throw DimensionMismatch("correction search needs registers of equal size");
  const int m = static_cast<int>(actual.num_qubits());
  if (m > 3) throw ResourceBound("correction search is bounded at 3 qubits");
  const std::size_t combos = static_cast<std::size_t>(1) << (2 * m);
  for (std::size_t combo = 0; combo < combos; ++combo) {
    CorrectionOp op;
    for (int k = 0; k < m; ++k) {
      const auto kind = static_cast<PauliKind>((combo >> (2 * (m - 1 - k))) & 3u);
      op.factors.push_back({kind, +1});
    }
    const StateVector corrected = apply_correction(actual, actual.qubits(), op);
    if (fidelity(corrected, target) >= 1.0 - kAlgebraTol) return op;
  }
  return std::nullopt;
}

std::vector<BranchReport> enumerate_all_branches(const AliceState& alice,
                                                 const BobKnownState& bob,
                                                 ChannelSignConvention conv) {
  const int n = alice.n;
  const StateVector alice_target = state_of(alice);
  const StateVector bob_target = state_of(bob);
  std::vector<BranchReport> reports;
  walk_branches(alice, bob, conv, [&](const BranchVisit& v) {
    BranchReport r;
    r.bell = v.bell;
    r.amplitude = v.amplitude;
    r.phase = v.phase;
    r.charlie = v.charlie;
    r.probability = v.probability;

    const StateVector b_block = extract_subsystem(v.state, teleport_targets(n));
    r.teleport_correction = derive_correction_bruteforce(b_block, alice_target);
    r.teleport_fidelity =
        r.teleport_correction
            ? fidelity(apply_correction(b_block, b_block.qubits(), *r.teleport_correction),
                       alice_target)
            : fidelity(b_block, alice_target);

    const StateVector a_block = extract_subsystem(v.state, rsp_targets(n));
    r.rsp_correction = derive_correction_bruteforce(a_block, bob_target);
    r.rsp_fidelity =
        r.rsp_correction
            ? fidelity(apply_correction(a_block, a_block.qubits(), *r.rsp_correction),
                       bob_target)
            : fidelity(a_block, bob_target);

    reports.push_back(std::move(r));
  });
  return reports;
}

std::vector<Table1RowCheck> verify_table1(ChannelSignConvention conv) {
  const AliceState alice = random_alice(1, kGenericAliceSeed);
  const BobKnownState bob = random_bob_product(1, kGenericBobSeed);
  const StateVector target = state_of(alice);

  std::vector<Table1RowCheck> rows;
  for (BellOutcome b : {BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus,
                        BellOutcome::PsiMinus}) {
    for (int c : {0, 1}) {
      const OutcomePolicy policy = OutcomePolicy::forced({b}, {1}, {1}, c);
      const ForcedBranch branch = run_forced_branch(alice, bob, conv, policy);
      const StateVector b_block = extract_subsystem(branch.state, teleport_targets(1));

      Table1RowCheck row;
      row.bell = b;
      row.charlie = c;
      row.table_op = select_teleport_correction({b}, CharlieBit{c});
      row.derived_op = derive_correction_bruteforce(b_block, target);
      row.fidelity_after_table_op =
          fidelity(apply_correction(b_block, b_block.qubits(), row.table_op), target);
      row.operators_agree =
          row.derived_op.has_value() &&
          approx_equal_up_to_phase(correction_matrix(row.table_op),
                                   correction_matrix(*row.derived_op));
      row.pass = row.operators_agree && row.fidelity_after_table_op >= 1.0 - kAlgebraTol;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

CorrectionTable derive_rsp_table(const BobKnownState& bob, ChannelSignConvention conv) {
  if (bob.mode != BobKnownState::Mode::Product)
    throw Error("the outcome-keyed correction table exists in product mode only");
  const int n = bob.n;
  if (n > 3) throw ResourceBound("table derivation is bounded at n <= 3");

  // Any generic input works on the teleport side; the prepared-state block
  // depends only on the amplitude/phase outcomes and the controller bit.
  const AliceState alice = random_alice(n, kGenericAliceSeed);
  const StateVector target = state_of(bob);

  CorrectionTable table;
  table.direction = CorrectionDirection::RemoteStatePrep;
  table.provenance = TableProvenance::Derived;

  const std::size_t per_step = static_cast<std::size_t>(1) << n;
  for (int c : {0, 1}) {
    for (std::size_t a = 0; a < per_step; ++a) {
      std::vector<int> amp(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) amp[static_cast<std::size_t>(k)] = ((a >> (n - 1 - k)) & 1u) + 1;
      for (std::size_t f = 0; f < per_step; ++f) {
        std::vector<int> phase(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
          phase[static_cast<std::size_t>(k)] = ((f >> (n - 1 - k)) & 1u) + 1;

        const OutcomePolicy policy = OutcomePolicy::forced(all_phi_plus(n), amp, phase, c);
        const ForcedBranch branch = run_forced_branch(alice, bob, conv, policy);
        const StateVector a_block = extract_subsystem(branch.state, rsp_targets(n));
        const std::string key = rsp_key(amp, phase, CharlieBit{c});
        if (std::optional<CorrectionOp> found = derive_correction_bruteforce(a_block, target))
          table.entries.emplace(key, std::move(*found));
        else
          table.uncorrectable.push_back(key);
      }
    }
  }
  return table;
}

CorrectionTable builtin_teleport_table(int n) {
  if (n < 1) throw DimensionMismatch("need n >= 1");
  if (n > 3) throw ResourceBound("table expansion is bounded at n <= 3");
  CorrectionTable table;
  table.direction = CorrectionDirection::Teleport;
  table.provenance = TableProvenance::Builtin;
  const std::size_t combos = static_cast<std::size_t>(1) << (2 * n);
  for (int c : {0, 1}) {
    for (std::size_t i = 0; i < combos; ++i) {
      std::vector<BellOutcome> bell(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k)
        bell[static_cast<std::size_t>(k)] =
            static_cast<BellOutcome>((i >> (2 * (n - 1 - k))) & 3u);
      table.entries.emplace(teleport_key(bell, CharlieBit{c}),
                            select_teleport_correction(bell, CharlieBit{c}));
    }
  }
  return table;
}

ShowcaseReport reproduce_showcase(const AliceState& alice, const BobKnownState& bob,
                                  ChannelSignConvention conv) {
  if (alice.n != bob.n) throw DimensionMismatch("alice and bob must agree on n");
  const int n = alice.n;
  const bool product = bob.mode == BobKnownState::Mode::Product;
  const std::vector<int> ones = product ? all_ones(n) : std::vector<int>{1};
  const OutcomePolicy policy = OutcomePolicy::forced(all_phi_plus(n), ones, ones, 0);
  const ForcedBranch branch = run_forced_branch(alice, bob, conv, policy);

  ShowcaseReport r;
  r.branch_probability = branch.probability;
  r.max_deviation_teleport = deviation_up_to_phase(
      extract_subsystem(branch.state, teleport_targets(n)), state_of(alice));
  r.max_deviation_rsp = deviation_up_to_phase(
      extract_subsystem(branch.state, rsp_targets(n)), state_of(bob));
  r.pass = r.max_deviation_teleport <= kAlgebraTol && r.max_deviation_rsp <= kAlgebraTol;
  return r;
}

double mean_fidelity_with_guessed_charlie(const AliceState& alice, const BobKnownState& bob,
                                          ChannelSignConvention conv, int guessed_bit) {
  if (guessed_bit != 0 && guessed_bit != 1) throw Error("guessed bit must be 0 or 1");
  const int n = alice.n;
  const StateVector target = state_of(alice);
  double mean = 0.0;
  walk_branches(alice, bob, conv, [&](const BranchVisit& v) {
    const StateVector b_block = extract_subsystem(v.state, teleport_targets(n));
    const CorrectionOp op = select_teleport_correction(v.bell, CharlieBit{guessed_bit});
    mean += v.probability * fidelity(apply_correction(b_block, b_block.qubits(), op), target);
  });
  return mean;
}

}  // namespace hqt
