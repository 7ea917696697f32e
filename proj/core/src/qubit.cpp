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

#include "hqt/qubit.hpp"

namespace hqt {

std::string to_string(const QubitLabel& q) {
  switch (q.role) {
    case QubitRole::AliceInput:
      return "a" + std::to_string(q.index);
    case QubitRole::AliceChannel:
      return "A" + std::to_string(q.index);
    case QubitRole::BobChannel:
      return "B" + std::to_string(q.index);
    case QubitRole::BobAncilla:
      return "e" + std::to_string(q.index);
    case QubitRole::Controller:
      return "C";
    case QubitRole::Work:
      return "q" + std::to_string(q.index);
  }
  return "?";
}

QubitLabel alice_input(int k) { return {QubitRole::AliceInput, k}; }
QubitLabel alice_channel(int k) { return {QubitRole::AliceChannel, k}; }
QubitLabel bob_channel(int k) { return {QubitRole::BobChannel, k}; }
QubitLabel bob_ancilla(int k) { return {QubitRole::BobAncilla, k}; }
QubitLabel controller() { return {QubitRole::Controller, 0}; }
QubitLabel work(int k) { return {QubitRole::Work, k}; }

}  // namespace hqt
