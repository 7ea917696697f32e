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

#include "hqt/efficiency.hpp"

#include <cmath>

namespace hqt {

namespace {

// The protocol's published headline numbers that the formula does not
// reproduce. Both are reported as discrepancies with the computed value.
constexpr double kStatedEtaAtSix = 1.0 / 3.0;        // quoted as 33.33% at n = 6
constexpr double kStatedLargeNLimit = 1.0;           // quoted as "approaches 1"
constexpr double kComputedLargeNLimit = 1.0 / 3.0;   // lim 2n / (6n + 1)

}  // namespace

EfficiencyReport efficiency(int n) {
  if (n < 1) throw DimensionMismatch("need n >= 1");
  EfficiencyReport r;
  r.n = n;
  r.transmitted_qubits = 2 * n;
  r.channel_qubits = 4 * n + 1;
  r.auxiliary_qubits = n;
  r.input_carrier_qubits = n;
  r.stated_classical_bits = 0;
  r.eta = static_cast<double>(r.transmitted_qubits) /
          static_cast<double>(r.channel_qubits + r.auxiliary_qubits +
                              r.input_carrier_qubits + r.stated_classical_bits);
  r.eta_limit = kComputedLargeNLimit;

  if (n == 6) {
    const bool match = std::abs(r.eta - kStatedEtaAtSix) <= 1e-6;
    r.discrepancies.push_back({"eta(n=6)", kStatedEtaAtSix, r.eta, match,
                               "12/37 = 32.43%, not the quoted 33.33%"});
  }
  r.discrepancies.push_back({"large-n limit of eta", kStatedLargeNLimit, kComputedLargeNLimit,
                             false,
                             "2n/(6n+1) is increasing in n but bounded by 1/3, "
                             "so it cannot approach 1"});
  return r;
}

EfficiencyReport efficiency(int n, const ProtocolTranscript& transcript) {
  EfficiencyReport r = efficiency(n);
  if (transcript.n != n)
    throw DimensionMismatch("transcript size does not match the requested n");
  r.audited_classical_bits = transcript.classical_bits;
  if (transcript.classical_bits != r.stated_classical_bits)
    r.discrepancies.push_back(
        {"classical bits per run", static_cast<double>(r.stated_classical_bits),
         static_cast<double>(transcript.classical_bits), false,
         "the run exchanges 4n+1 classical bits that the published "
         "accounting prices at zero"});
  return r;
}

}  // namespace hqt
