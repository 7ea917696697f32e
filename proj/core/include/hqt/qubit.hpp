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

#include <compare>
#include <cstdint>
#include <string>

namespace hqt {

// Role a register position plays in the protocol. Work qubits are
// free-standing (file I/O, scratch states in tests).
enum class QubitRole : std::uint8_t {
  AliceInput,    // a_1..a_n, carry Alice's unknown input state
  AliceChannel,  // A_1..A_2n, Alice's half of the shared channel
  BobChannel,    // B_1..B_2n, Bob's half of the shared channel
  BobAncilla,    // e_1..e_n, Bob's auxiliary qubits
  Controller,    // C, the controller's qubit
  Work,          // anything outside the protocol
};

struct QubitLabel {
  QubitRole role = QubitRole::Work;
  // 1-based position within the role group; Work labels are 0-based and the
  // controller ignores it.
  int index = 0;

  friend auto operator<=>(const QubitLabel&, const QubitLabel&) = default;
};

// "a1", "A3", "B2", "e1", "C", "q0"
std::string to_string(const QubitLabel& q);

QubitLabel alice_input(int k);
QubitLabel alice_channel(int k);
QubitLabel bob_channel(int k);
QubitLabel bob_ancilla(int k);
QubitLabel controller();
QubitLabel work(int k);

}  // namespace hqt
