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

#include <string>
#include <vector>

#include "hqt/efficiency.hpp"
#include "hqt/oracle.hpp"

namespace hqt {

// JSON formats. All real numbers serialize rounded to 15 significant digits,
// keys keep insertion order, and identical inputs yield byte-identical text.

// State files: {"num_qubits": m, "amps": [[re, im], ...]}. The reader rejects
// vectors whose norm is off by more than 1e-9 and renormalizes accepted ones;
// qubits are labeled q0..q_{m-1}.
StateVector state_from_json_text(const std::string& text);
std::string state_to_json_text(const StateVector& s);
StateVector read_state_file(const std::string& path);
void write_state_file(const std::string& path, const StateVector& s);

// Party inputs. Either the bare object or a wrapper with an "alice"/"bob"
// key is accepted, so one combined file can serve both flags:
//   {"alice": {"n": 1, "alphas": [[re, im], ...]},
//    "bob": {"n": 1, "mode": "product",
//            "qubits": [{"beta0": x, "beta1": y, "theta": z}]}}
// General-mode bob: {"mode": "general", "betas": [...], "thetas": [...]}.
AliceState alice_from_json_text(const std::string& text);
BobKnownState bob_from_json_text(const std::string& text);
AliceState read_alice_file(const std::string& path);
BobKnownState read_bob_file(const std::string& path);

std::string transcript_to_json(const ProtocolTranscript& t);
std::string branch_reports_to_json(const std::vector<BranchReport>& reports);
std::string correction_table_to_json(const CorrectionTable& table);
CorrectionTable correction_table_from_json(const std::string& text);
std::string efficiency_to_json(const EfficiencyReport& report);

// Row-per-check JSON lines for the verify command.
std::string table1_rows_to_json_lines(const std::vector<Table1RowCheck>& rows);

// {"error": {"type": ..., "message": ...}} -- every CLI failure path emits one.
std::string error_to_json(const std::string& type, const std::string& message);

// The serialization rounding (15 significant digits), exposed for tests.
double round_sig15(double x);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace hqt
