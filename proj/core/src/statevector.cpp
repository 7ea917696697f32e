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

#include "hqt/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace hqt {

namespace {

// Bit weight of register position t in an index over L qubits; the first
// qubit in the register owns the most significant bit.
std::size_t weight(std::size_t L, std::size_t t) { return std::size_t{1} << (L - 1 - t); }

// Splits a register into listed-qubit positions (in listed order) and the
// remaining positions (in register order), validating presence/uniqueness.
struct SubsystemView {
  std::vector<std::size_t> listed;     // bit weights of the listed qubits
  std::vector<std::size_t> remaining;  // bit weights of the rest
  std::vector<QubitLabel> remaining_labels;

  SubsystemView(const StateVector& s, const std::vector<QubitLabel>& qubits) {
    const std::size_t L = s.num_qubits();
    std::set<std::size_t> taken;
    listed.reserve(qubits.size());
    for (const QubitLabel& q : qubits) {
      const std::size_t pos = s.position_of(q);
      if (!taken.insert(pos).second)
        throw InvariantViolation("qubit " + to_string(q) + " listed twice");
      listed.push_back(weight(L, pos));
    }
    for (std::size_t t = 0; t < L; ++t) {
      if (!taken.count(t)) {
        remaining.push_back(weight(L, t));
        remaining_labels.push_back(s.qubits()[t]);
      }
    }
  }

  // Assembles a full amplitude index from a listed-assignment x and a
  // remaining-assignment r (both big-endian over their own lists).
  std::size_t compose(std::size_t x, std::size_t r) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < listed.size(); ++j)
      if (x & (std::size_t{1} << (listed.size() - 1 - j))) idx |= listed[j];
    for (std::size_t j = 0; j < remaining.size(); ++j)
      if (r & (std::size_t{1} << (remaining.size() - 1 - j))) idx |= remaining[j];
    return idx;
  }
};

void check_unique(const std::vector<QubitLabel>& qubits) {
  std::set<QubitLabel> seen;
  for (const QubitLabel& q : qubits)
    if (!seen.insert(q).second)
      throw InvariantViolation("register already contains qubit " + to_string(q));
}

}  // namespace

StateVector::StateVector(std::vector<QubitLabel> qubits, std::vector<Amplitude> amps)
    : qubits_(std::move(qubits)), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<QubitLabel> qubits,
                                         std::vector<Amplitude> amps) {
  check_unique(qubits);
  if (amps.size() != (std::size_t{1} << qubits.size()))
    throw DimensionMismatch("amplitude count does not match 2^num_qubits");
  double norm2 = 0.0;
  for (const Amplitude& a : amps) {
    if (!is_finite(a)) throw InvariantViolation("amplitude is not finite");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > kNormTol)
    throw InvariantViolation("state is not normalized");
  return StateVector(std::move(qubits), std::move(amps));
}

StateVector StateVector::computational_basis(std::vector<QubitLabel> qubits,
                                             std::size_t basis_index) {
  check_unique(qubits);
  const std::size_t dim = std::size_t{1} << qubits.size();
  if (basis_index >= dim) throw DimensionMismatch("basis index out of range");
  std::vector<Amplitude> amps(dim, 0.0);
  amps[basis_index] = 1.0;
  return StateVector(std::move(qubits), std::move(amps));
}

StateVector StateVector::zero_state(std::vector<QubitLabel> qubits) {
  return computational_basis(std::move(qubits), 0);
}

bool StateVector::contains(const QubitLabel& q) const {
  return std::find(qubits_.begin(), qubits_.end(), q) != qubits_.end();
}

std::size_t StateVector::position_of(const QubitLabel& q) const {
  const auto it = std::find(qubits_.begin(), qubits_.end(), q);
  if (it == qubits_.end())
    throw UnknownQubit("qubit " + to_string(q) + " is not in the register");
  return static_cast<std::size_t>(it - qubits_.begin());
}

double StateVector::norm_squared() const {
  double n = 0.0;
  for (const Amplitude& a : amps_) n += std::norm(a);
  return n;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  std::vector<QubitLabel> qubits = a.qubits();
  qubits.insert(qubits.end(), b.qubits().begin(), b.qubits().end());
  check_unique(qubits);
  std::vector<Amplitude> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      amps[(i << b.num_qubits()) | j] = a.amplitude(i) * b.amplitude(j);
  return StateVector::from_amplitudes(std::move(qubits), std::move(amps));
}

StateVector apply_unitary(const StateVector& s, const std::vector<QubitLabel>& targets,
                          const UnitaryMatrix& u) {
  const SubsystemView view(s, targets);
  const std::size_t m = targets.size();
  const std::size_t sub = std::size_t{1} << m;
  if (u.dim() != sub)
    throw DimensionMismatch("unitary dimension does not match target count");

  std::vector<Amplitude> out(s.dim());
  std::vector<Amplitude> in_block(sub);
  const std::size_t rem = s.dim() >> m;
  for (std::size_t r = 0; r < rem; ++r) {
    for (std::size_t x = 0; x < sub; ++x) in_block[x] = s.amplitude(view.compose(x, r));
    for (std::size_t x = 0; x < sub; ++x) {
      Amplitude acc = 0.0;
      for (std::size_t y = 0; y < sub; ++y) acc += u.at(x, y) * in_block[y];
      out[view.compose(x, r)] = acc;
    }
  }
  return StateVector::from_amplitudes(s.qubits(), std::move(out));
}

StateVector apply_cnot(const StateVector& s, const QubitLabel& control,
                       const QubitLabel& target) {
  const std::size_t L = s.num_qubits();
  const std::size_t cw = weight(L, s.position_of(control));
  const std::size_t tw = weight(L, s.position_of(target));
  if (cw == tw) throw InvariantViolation("cnot control equals target");
  std::vector<Amplitude> out(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    out[(i & cw) ? (i ^ tw) : i] = s.amplitude(i);
  return StateVector::from_amplitudes(s.qubits(), std::move(out));
}

namespace {

// Projects onto basis vector `o` of the listed subsystem. Returns the
// unnormalized collapsed amplitudes over the remaining qubits and the
// outcome probability.
std::pair<std::vector<Amplitude>, double> project(const StateVector& s,
                                                  const SubsystemView& view,
                                                  const OrthonormalBasis& basis,
                                                  std::size_t o) {
  const std::size_t sub = basis.dim();
  const std::size_t rem_dim = s.dim() / sub;
  const std::vector<Amplitude>& v = basis.vector(o);
  std::vector<Amplitude> collapsed(rem_dim, 0.0);
  double prob = 0.0;
  for (std::size_t r = 0; r < rem_dim; ++r) {
    Amplitude acc = 0.0;
    for (std::size_t x = 0; x < sub; ++x)
      acc += std::conj(v[x]) * s.amplitude(view.compose(x, r));
    collapsed[r] = acc;
    prob += std::norm(acc);
  }
  return {std::move(collapsed), prob};
}

MeasurementOutcome make_outcome(std::size_t o, double prob, std::vector<Amplitude> collapsed,
                                std::vector<QubitLabel> labels) {
  const double scale = 1.0 / std::sqrt(prob);
  for (Amplitude& a : collapsed) a *= scale;
  // renormalize exactly; projection can leave O(eps) drift
  double norm2 = 0.0;
  for (const Amplitude& a : collapsed) norm2 += std::norm(a);
  const double fix = 1.0 / std::sqrt(norm2);
  for (Amplitude& a : collapsed) a *= fix;
  return MeasurementOutcome{o, prob,
                            StateVector::from_amplitudes(std::move(labels), std::move(collapsed))};
}

}  // namespace

std::vector<MeasurementOutcome> measure_subsystem(const StateVector& s,
                                                  const std::vector<QubitLabel>& qubits,
                                                  const OrthonormalBasis& basis,
                                                  const MeasureMode& mode) {
  if (qubits.empty()) throw DimensionMismatch("no qubits to measure");
  const SubsystemView view(s, qubits);
  if (basis.dim() != (std::size_t{1} << qubits.size()))
    throw DimensionMismatch("basis dimension does not match measured subsystem");

  if (const Forced* forced = std::get_if<Forced>(&mode)) {
    if (forced->outcome_index >= basis.size())
      throw DimensionMismatch("forced outcome index out of range");
    auto [collapsed, prob] = project(s, view, basis, forced->outcome_index);
    if (prob <= kProbFloor)
      throw ZeroProbabilityOutcome("forced outcome " + std::to_string(forced->outcome_index) +
                                   " has probability below the zero cutoff");
    std::vector<MeasurementOutcome> out;
    out.push_back(
        make_outcome(forced->outcome_index, prob, std::move(collapsed), view.remaining_labels));
    return out;
  }

  std::vector<MeasurementOutcome> all;
  for (std::size_t o = 0; o < basis.size(); ++o) {
    auto [collapsed, prob] = project(s, view, basis, o);
    if (prob > kProbFloor)
      all.push_back(make_outcome(o, prob, std::move(collapsed), view.remaining_labels));
  }

  if (std::holds_alternative<Enumerate>(mode)) return all;

  // Sample: one draw against the cumulative distribution
  SeededRng rng(std::get<Sample>(mode).seed);
  const double u = rng.uniform01();
  double cum = 0.0;
  for (auto& outcome : all) {
    cum += outcome.probability;
    if (u < cum) return {std::move(outcome)};
  }
  return {std::move(all.back())};
}

std::vector<MeasurementOutcome> enumerate_measurement(const StateVector& s,
                                                      const std::vector<QubitLabel>& qubits,
                                                      const OrthonormalBasis& basis) {
  return measure_subsystem(s, qubits, basis, Enumerate{});
}

MeasurementOutcome sample_measurement(const StateVector& s,
                                      const std::vector<QubitLabel>& qubits,
                                      const OrthonormalBasis& basis, SeededRng& rng) {
  auto all = measure_subsystem(s, qubits, basis, Enumerate{});
  const double u = rng.uniform01();
  double cum = 0.0;
  for (auto& outcome : all) {
    cum += outcome.probability;
    if (u < cum) return std::move(outcome);
  }
  return std::move(all.back());
}

MeasurementOutcome force_measurement(const StateVector& s,
                                     const std::vector<QubitLabel>& qubits,
                                     const OrthonormalBasis& basis, std::size_t outcome_index) {
  return std::move(measure_subsystem(s, qubits, basis, Forced{outcome_index}).front());
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("fidelity of states of different size");
  Amplitude overlap = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    overlap += std::conj(a.amplitude(i)) * b.amplitude(i);
  return std::norm(overlap);
}

StateVector phase_normalized(const StateVector& s) {
  for (const Amplitude& a : s.amplitudes()) {
    if (std::norm(a) > kProbFloor) {
      const Amplitude lambda = std::conj(a) / std::abs(a);
      std::vector<Amplitude> amps = s.amplitudes();
      for (Amplitude& x : amps) x *= lambda;
      return StateVector::from_amplitudes(s.qubits(), std::move(amps));
    }
  }
  return s;
}

StateVector extract_subsystem(const StateVector& s, const std::vector<QubitLabel>& qubits) {
  if (qubits.empty()) throw DimensionMismatch("no qubits to extract");
  const SubsystemView view(s, qubits);
  const std::size_t sub = std::size_t{1} << qubits.size();
  const std::size_t rem_dim = s.dim() >> qubits.size();

  // View the amplitudes as a (listed x remaining) matrix M; the state is
  // separable iff M has rank one, M = u w^T.
  if (rem_dim == 1) {
    std::vector<Amplitude> u(sub);
    for (std::size_t x = 0; x < sub; ++x) u[x] = s.amplitude(view.compose(x, 0));
    return phase_normalized(StateVector::from_amplitudes(qubits, std::move(u)));
  }

  std::size_t pivot = 0;
  double pivot_norm2 = -1.0;
  for (std::size_t r = 0; r < rem_dim; ++r) {
    double col = 0.0;
    for (std::size_t x = 0; x < sub; ++x) col += std::norm(s.amplitude(view.compose(x, r)));
    if (col > pivot_norm2) {
      pivot_norm2 = col;
      pivot = r;
    }
  }
  std::vector<Amplitude> u(sub);
  const double inv = 1.0 / std::sqrt(pivot_norm2);
  for (std::size_t x = 0; x < sub; ++x) u[x] = s.amplitude(view.compose(x, pivot)) * inv;

  // w[r] = <u, M[:,r]>, then check the residual entrywise
  for (std::size_t r = 0; r < rem_dim; ++r) {
    Amplitude w = 0.0;
    for (std::size_t x = 0; x < sub; ++x)
      w += std::conj(u[x]) * s.amplitude(view.compose(x, r));
    for (std::size_t x = 0; x < sub; ++x) {
      const Amplitude residual = s.amplitude(view.compose(x, r)) - u[x] * w;
      if (std::abs(residual) > kAlgebraTol)
        throw NotSeparable("subsystem is entangled with the rest of the register");
    }
  }

  double norm2 = 0.0;
  for (const Amplitude& a : u) norm2 += std::norm(a);
  const double fix = 1.0 / std::sqrt(norm2);
  for (Amplitude& a : u) a *= fix;
  return phase_normalized(StateVector::from_amplitudes(qubits, std::move(u)));
}

double deviation_up_to_phase(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("comparing states of different size");
  const StateVector pa = phase_normalized(a);
  const StateVector pb = phase_normalized(b);
  double dev = 0.0;
  for (std::size_t i = 0; i < pa.dim(); ++i)
    dev = std::max(dev, std::abs(pa.amplitude(i) - pb.amplitude(i)));
  return dev;
}

}  // namespace hqt
