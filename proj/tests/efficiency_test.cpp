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

#include <algorithm>

#include "doctest.h"
#include "hqt/efficiency.hpp"

using namespace hqt;

namespace {
bool has_quantity(const EfficiencyReport& r, const std::string& q) {
  return std::any_of(r.discrepancies.begin(), r.discrepancies.end(),
                     [&](const EfficiencyDiscrepancy& d) { return d.quantity == q; });
}
}  // namespace

TEST_CASE("eta = 2n/(6n+1) with every denominator term stored") {
  const EfficiencyReport r1 = efficiency(1);
  CHECK(r1.transmitted_qubits == 2);
  CHECK(r1.channel_qubits == 5);
  CHECK(r1.auxiliary_qubits == 1);
  CHECK(r1.input_carrier_qubits == 1);
  CHECK(r1.stated_classical_bits == 0);
  CHECK(r1.eta == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
  CHECK(r1.eta_limit == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_FALSE(r1.audited_classical_bits.has_value());

  CHECK(efficiency(2).eta == doctest::Approx(4.0 / 13.0).epsilon(1e-15));
  CHECK(efficiency(6).eta == doctest::Approx(12.0 / 37.0).epsilon(1e-15));

  CHECK_THROWS_AS(efficiency(0), DimensionMismatch);
  CHECK_THROWS_AS(efficiency(-3), DimensionMismatch);
}

TEST_CASE("eta increases with n but never reaches its 1/3 bound") {
  double prev = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const double eta = efficiency(n).eta;
    CHECK(eta > prev);
    CHECK(eta < 1.0 / 3.0);
    prev = eta;
  }
}

TEST_CASE("the two published headline numbers are flagged, not reproduced") {
  const EfficiencyReport r6 = efficiency(6);
  REQUIRE(has_quantity(r6, "eta(n=6)"));
  REQUIRE(has_quantity(r6, "large-n limit of eta"));
  for (const auto& d : r6.discrepancies) {
    CHECK_FALSE(d.matches);
    CHECK_FALSE(d.note.empty());
  }
  const auto it = std::find_if(r6.discrepancies.begin(), r6.discrepancies.end(),
                               [](const EfficiencyDiscrepancy& d) {
                                 return d.quantity == "eta(n=6)";
                               });
  CHECK(it->stated == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(it->computed == doctest::Approx(12.0 / 37.0).epsilon(1e-15));

  // the limit flag appears at every n; the n=6 flag only there
  CHECK(has_quantity(efficiency(1), "large-n limit of eta"));
  CHECK_FALSE(has_quantity(efficiency(1), "eta(n=6)"));
  CHECK_FALSE(has_quantity(efficiency(7), "eta(n=6)"));
}

TEST_CASE("auditing a live transcript reveals the unpriced classical traffic") {
  const ProtocolTranscript t =
      run_protocol(random_alice(1, 11), random_bob_product(1, 12),
                   ChannelSignConvention::Singlet, OutcomePolicy::sample(13));
  const EfficiencyReport r = efficiency(1, t);
  REQUIRE(r.audited_classical_bits.has_value());
  CHECK(*r.audited_classical_bits == 5);
  REQUIRE(has_quantity(r, "classical bits per run"));

  const ProtocolTranscript t2 =
      run_protocol(random_alice(2, 11), random_bob_product(2, 12),
                   ChannelSignConvention::Singlet, OutcomePolicy::sample(13));
  CHECK(*efficiency(2, t2).audited_classical_bits == 9);

  CHECK_THROWS_AS(efficiency(2, t), DimensionMismatch);
}
