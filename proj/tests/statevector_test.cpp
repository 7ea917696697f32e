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

#include "doctest.h"
#include "hqt/statevector.hpp"

using namespace hqt;

namespace {
const double kInv = 1.0 / std::sqrt(2.0);

StateVector bell_phi_plus(const QubitLabel& p, const QubitLabel& q) {
  return StateVector::from_amplitudes({p, q}, {kInv, 0, 0, kInv});
}
}  // namespace

TEST_CASE("construction validates register and norm") {
  CHECK_NOTHROW(StateVector::from_amplitudes({work(0)}, {1.0, 0.0}));
  // wrong amplitude count
  CHECK_THROWS_AS(StateVector::from_amplitudes({work(0)}, {1.0, 0.0, 0.0}),
                  DimensionMismatch);
  // duplicate label
  CHECK_THROWS_AS(StateVector::from_amplitudes({work(0), work(0)}, {1, 0, 0, 0}), Error);
  // non-unit norm
  CHECK_THROWS_AS(StateVector::from_amplitudes({work(0)}, {1.0, 1.0}), Error);

  const StateVector z = StateVector::zero_state({work(0), work(1)});
  CHECK(z.dim() == 4);
  CHECK(z.amplitude(0) == Amplitude(1.0));

  const StateVector b = StateVector::computational_basis({work(0), work(1)}, 2);
  CHECK(b.amplitude(2) == Amplitude(1.0));  // |10>: first label owns the high bit
}

TEST_CASE("big-endian register order: first qubit is the most significant bit") {
  // |0>_p (x) |1>_q  ->  index 01 = 1
  const StateVector s =
      StateVector::from_amplitudes({work(0), work(1)}, {0.0, 1.0, 0.0, 0.0});
  CHECK(s.position_of(work(0)) == 0);
  CHECK(s.position_of(work(1)) == 1);
  CHECK_THROWS_AS(s.position_of(work(9)), UnknownQubit);

  const StateVector a = StateVector::from_amplitudes({work(0)}, {0.0, 1.0});  // |1>
  const StateVector b = StateVector::from_amplitudes({work(1)}, {1.0, 0.0});  // |0>
  const StateVector ab = tensor_product(a, b);                                // |10>
  CHECK(ab.amplitude(2) == Amplitude(1.0));
  CHECK(ab.qubits()[0] == work(0));
}

TEST_CASE("apply_unitary acts on listed targets in listed order") {
  const UnitaryMatrix x = UnitaryMatrix::from_entries(2, {0, 1, 1, 0});
  const StateVector s = StateVector::zero_state({work(0), work(1)});

  // X on the second qubit: |00> -> |01>
  const StateVector s1 = apply_unitary(s, {work(1)}, x);
  CHECK(std::abs(s1.amplitude(1) - Amplitude(1.0)) < 1e-12);

  // X on the first qubit: |00> -> |10>
  const StateVector s2 = apply_unitary(s, {work(0)}, x);
  CHECK(std::abs(s2.amplitude(2) - Amplitude(1.0)) < 1e-12);

  // two-qubit unitary with reversed target list: the matrix's high bit is
  // work(1), so CNOT(control=high) flips work(0) when work(1) is 1
  const UnitaryMatrix cnot =
      UnitaryMatrix::from_entries(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  const StateVector t = StateVector::computational_basis({work(0), work(1)}, 1);  // |01>
  const StateVector t1 = apply_unitary(t, {work(1), work(0)}, cnot);
  CHECK(std::abs(t1.amplitude(3) - Amplitude(1.0)) < 1e-12);  // |11>
}

TEST_CASE("apply_cnot flips target iff control set") {
  StateVector s = StateVector::computational_basis({work(0), work(1)}, 2);  // |10>
  s = apply_cnot(s, work(0), work(1));
  CHECK(std::abs(s.amplitude(3) - Amplitude(1.0)) < 1e-12);  // |11>
  s = apply_cnot(s, work(1), work(0));
  CHECK(std::abs(s.amplitude(1) - Amplitude(1.0)) < 1e-12);  // |01>
}

TEST_CASE("enumerate measurement returns all outcomes above the floor") {
  const StateVector bell = bell_phi_plus(work(0), work(1));
  const auto outcomes =
      enumerate_measurement(bell, {work(0)}, OrthonormalBasis::computational(2));
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].outcome_index == 0);
  CHECK(outcomes[0].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(outcomes[1].probability == doctest::Approx(0.5).epsilon(1e-12));
  // collapse of |phi+> on first qubit = matching basis state on the partner
  CHECK(std::abs(outcomes[0].collapsed.amplitude(0) - Amplitude(1.0)) < 1e-12);
  CHECK(std::abs(outcomes[1].collapsed.amplitude(1) - Amplitude(1.0)) < 1e-12);

  // a basis state measured in its own basis has one reachable outcome
  const StateVector z = StateVector::zero_state({work(0)});
  const auto certain = enumerate_measurement(z, {work(0)}, OrthonormalBasis::computational(2));
  REQUIRE(certain.size() == 1);
  CHECK(certain[0].probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("forced measurement honors index and rejects dead branches") {
  const StateVector z = StateVector::zero_state({work(0)});
  const MeasurementOutcome m =
      force_measurement(z, {work(0)}, OrthonormalBasis::computational(2), 0);
  CHECK(m.probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(force_measurement(z, {work(0)}, OrthonormalBasis::computational(2), 1),
                  ZeroProbabilityOutcome);
  CHECK_THROWS_AS(force_measurement(z, {work(0)}, OrthonormalBasis::computational(2), 5),
                  DimensionMismatch);
}

TEST_CASE("sampled measurement is seed-deterministic and collapse renormalizes") {
  const StateVector bell = bell_phi_plus(work(0), work(1));
  SeededRng r1(42), r2(42);
  const MeasurementOutcome a =
      sample_measurement(bell, {work(0)}, OrthonormalBasis::computational(2), r1);
  const MeasurementOutcome b =
      sample_measurement(bell, {work(0)}, OrthonormalBasis::computational(2), r2);
  CHECK(a.outcome_index == b.outcome_index);
  CHECK(a.collapsed.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));

  // frequencies track probabilities for an uneven split
  const StateVector uneven =
      StateVector::from_amplitudes({work(0)}, {std::sqrt(0.3), std::sqrt(0.7)});
  SeededRng rng(7);
  int zeros = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i)
    if (sample_measurement(uneven, {work(0)}, OrthonormalBasis::computational(2), rng)
            .outcome_index == 0)
      ++zeros;
  CHECK(std::abs(zeros / static_cast<double>(trials) - 0.3) < 0.02);
}

TEST_CASE("measuring the whole register leaves the empty scalar state") {
  const StateVector bell = bell_phi_plus(work(0), work(1));
  const auto outcomes =
      enumerate_measurement(bell, {work(0), work(1)}, OrthonormalBasis::computational(4));
  REQUIRE(outcomes.size() == 2);  // |00> and |11> only
  CHECK(outcomes[0].outcome_index == 0);
  CHECK(outcomes[1].outcome_index == 3);
  CHECK(outcomes[0].collapsed.num_qubits() == 0);
  CHECK(outcomes[0].collapsed.dim() == 1);
}

TEST_CASE("measurement in a non-computational basis") {
  // |0> in the Hadamard basis: both outcomes at 1/2
  const OrthonormalBasis had =
      OrthonormalBasis::from_vectors({{kInv, kInv}, {kInv, -kInv}});
  const StateVector z = StateVector::zero_state({work(0)});
  const auto outcomes = enumerate_measurement(z, {work(0)}, had);
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].probability == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fidelity and phase tools") {
  const StateVector a = StateVector::from_amplitudes({work(0)}, {kInv, kInv});
  const StateVector b = StateVector::from_amplitudes({work(0)}, {-kInv, -kInv});
  const StateVector c = StateVector::from_amplitudes({work(0)}, {kInv, -kInv});
  CHECK(fidelity(a, b) == doctest::Approx(1.0).epsilon(1e-12));  // global phase -1
  CHECK(fidelity(a, c) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(deviation_up_to_phase(a, b) < 1e-12);
  CHECK(deviation_up_to_phase(a, c) > 0.5);

  const StateVector pn = phase_normalized(b);
  CHECK(pn.amplitude(0).real() == doctest::Approx(kInv).epsilon(1e-12));
  CHECK(pn.amplitude(0).imag() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("extract_subsystem splits products and rejects entanglement") {
  const StateVector pair = bell_phi_plus(work(0), work(1));
  const StateVector single = StateVector::from_amplitudes({work(2)}, {0.6, 0.8});
  const StateVector joint = tensor_product(pair, single);

  const StateVector back = extract_subsystem(joint, {work(2)});
  CHECK(back.num_qubits() == 1);
  CHECK(std::abs(back.amplitude(0) - Amplitude(0.6)) < 1e-10);
  CHECK(std::abs(back.amplitude(1) - Amplitude(0.8)) < 1e-10);

  // listed order defines the output register order
  const StateVector both = extract_subsystem(joint, {work(1), work(0)});
  CHECK(both.qubits()[0] == work(1));
  CHECK(fidelity(both, bell_phi_plus(work(1), work(0))) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(extract_subsystem(joint, {work(0)}), NotSeparable);
}

TEST_CASE("property: unitaries preserve norm, measurements sum to one") {
  SeededRng rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    // random 3-qubit state
    std::vector<Amplitude> amps(8);
    double norm = 0;
    for (auto& a : amps) {
      a = {rng.gaussian(), rng.gaussian()};
      norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    const StateVector s =
        StateVector::from_amplitudes({work(0), work(1), work(2)}, std::move(amps));

    const UnitaryMatrix h = UnitaryMatrix::from_entries(2, {kInv, kInv, kInv, -kInv});
    const StateVector hs = apply_unitary(s, {work(1)}, h);
    CHECK(hs.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));

    double total = 0;
    for (const auto& m :
         enumerate_measurement(s, {work(0), work(2)}, OrthonormalBasis::computational(4)))
      total += m.probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}
