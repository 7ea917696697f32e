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
#include <map>
#include <string>
#include <vector>

#include "hqt/assets.hpp"

namespace hqt {

// Single-qubit correction alphabet, in the lexicographic order the
// brute-force search uses.
enum class PauliKind : std::uint8_t { I, X, Z, XZ };

struct PauliFactor {
  PauliKind kind = PauliKind::I;
  int sign = +1;

  friend bool operator==(const PauliFactor&, const PauliFactor&) = default;
};

// Per-qubit signed Pauli product; factor k acts on the k-th target qubit.
struct CorrectionOp {
  std::vector<PauliFactor> factors;

  static CorrectionOp identity(int m);
  static CorrectionOp parse(const std::string& text);

  // "I", "-XZ", "(-XZ)⊗I": negative factors are parenthesized in
  // multi-qubit products.
  std::string str() const;

  friend bool operator==(const CorrectionOp&, const CorrectionOp&) = default;
};

UnitaryMatrix factor_matrix(const PauliFactor& f);
UnitaryMatrix correction_matrix(const CorrectionOp& op);  // kron over factors

// Applies factor k to targets[k].
StateVector apply_correction(const StateVector& s,
                             const std::vector<QubitLabel>& targets,
                             const CorrectionOp& op);

enum class CorrectionDirection { Teleport, RemoteStatePrep };
enum class TableProvenance { Builtin, Derived };

// Outcome-keyed correction lookup. Builtin tables carry the protocol's fixed
// teleport rows; Derived tables are produced by the verification layer's
// exhaustive search. Keys with no working signed Pauli product are listed in
// `uncorrectable` instead of `entries`.
struct CorrectionTable {
  CorrectionDirection direction = CorrectionDirection::Teleport;
  TableProvenance provenance = TableProvenance::Derived;
  std::map<std::string, CorrectionOp> entries;
  std::vector<std::string> uncorrectable;

  bool covers(const std::string& key) const;
};

// Canonical outcome-key builders ("bell=psi-,phi+;c=0", "amp=1;phase=2;c=1").
std::string teleport_key(const std::vector<BellOutcome>& bell, CharlieBit c);
std::string rsp_key(const std::vector<int>& amp_outcomes,
                    const std::vector<int>& phase_outcomes, CharlieBit c);

}  // namespace hqt
