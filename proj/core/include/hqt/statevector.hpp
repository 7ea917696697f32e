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
#include <variant>
#include <vector>

#include "hqt/linalg.hpp"
#include "hqt/qubit.hpp"
#include "hqt/random.hpp"

namespace hqt {

// Dense statevector over a labeled qubit register.
//
// Index convention is big-endian: the first qubit in the register is the
// most significant bit of the amplitude index, so for qubits (p, q) the
// amplitude order is |00>, |01>, |10>, |11> with p owning the leading bit.
// States are immutable values; operations return new states.
class StateVector {
 public:
  // Validates: unique labels, amps.size() == 2^qubits.size(), all entries
  // finite, and unit norm within 1e-12.
  static StateVector from_amplitudes(std::vector<QubitLabel> qubits,
                                     std::vector<Amplitude> amps);
  static StateVector computational_basis(std::vector<QubitLabel> qubits,
                                         std::size_t basis_index);
  static StateVector zero_state(std::vector<QubitLabel> qubits);

  std::size_t num_qubits() const { return qubits_.size(); }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<QubitLabel>& qubits() const { return qubits_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  const Amplitude& amplitude(std::size_t index) const { return amps_.at(index); }

  bool contains(const QubitLabel& q) const;
  std::size_t position_of(const QubitLabel& q) const;  // throws UnknownQubit
  double norm_squared() const;

 private:
  StateVector(std::vector<QubitLabel> qubits, std::vector<Amplitude> amps);

  std::vector<QubitLabel> qubits_;
  std::vector<Amplitude> amps_;
};

// |a> (x) |b>; a's qubits take the more significant bits.
StateVector tensor_product(const StateVector& a, const StateVector& b);

// Applies u to the listed target qubits (first target = most significant bit
// of u's index space). u.dim() must equal 2^targets.size().
StateVector apply_unitary(const StateVector& s,
                          const std::vector<QubitLabel>& targets,
                          const UnitaryMatrix& u);

StateVector apply_cnot(const StateVector& s, const QubitLabel& control,
                       const QubitLabel& target);

struct MeasurementOutcome {
  std::size_t outcome_index = 0;  // position of the basis vector
  double probability = 0.0;
  StateVector collapsed;  // renormalized; measured qubits removed
};

struct Enumerate {};
struct Sample {
  std::uint64_t seed = 0;
};
struct Forced {
  std::size_t outcome_index = 0;
};
using MeasureMode = std::variant<Enumerate, Sample, Forced>;

// Projective measurement of the listed qubits in an arbitrary orthonormal
// basis of their joint space. Enumerate returns every outcome with
// probability > 1e-14; Sample and Forced return exactly one element.
// Forcing an outcome whose probability is below the cutoff throws
// ZeroProbabilityOutcome.
std::vector<MeasurementOutcome> measure_subsystem(const StateVector& s,
                                                  const std::vector<QubitLabel>& qubits,
                                                  const OrthonormalBasis& basis,
                                                  const MeasureMode& mode);

// Convenience wrappers. sample_measurement draws from a caller-owned
// generator so one seed can drive a whole protocol run.
std::vector<MeasurementOutcome> enumerate_measurement(const StateVector& s,
                                                      const std::vector<QubitLabel>& qubits,
                                                      const OrthonormalBasis& basis);
MeasurementOutcome sample_measurement(const StateVector& s,
                                      const std::vector<QubitLabel>& qubits,
                                      const OrthonormalBasis& basis, SeededRng& rng);
MeasurementOutcome force_measurement(const StateVector& s,
                                     const std::vector<QubitLabel>& qubits,
                                     const OrthonormalBasis& basis,
                                     std::size_t outcome_index);

// Fidelity |<a|b>|^2. Compares amplitude vectors positionally; registers must
// have equal size.
double fidelity(const StateVector& a, const StateVector& b);

// Splits off the listed qubits as their own state (new register in listed
// order). Throws NotSeparable when the state does not factorize within 1e-10.
// The result is phase-normalized: first amplitude with |amp|^2 > 1e-14 made
// real-positive.
StateVector extract_subsystem(const StateVector& s,
                              const std::vector<QubitLabel>& qubits);

// Deterministic global-phase convention (see extract_subsystem).
StateVector phase_normalized(const StateVector& s);

// max_i |a_i - b_i| after phase-normalizing both sides; the "equal up to
// global phase" distance used by the verification layer.
double deviation_up_to_phase(const StateVector& a, const StateVector& b);

}  // namespace hqt
