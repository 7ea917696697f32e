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

#include "hqt/correction.hpp"

#include <sstream>
#include <utility>

namespace hqt {

namespace {

const char* kind_name(PauliKind k) {
  switch (k) {
    case PauliKind::I: return "I";
    case PauliKind::X: return "X";
    case PauliKind::Z: return "Z";
    case PauliKind::XZ: return "XZ";
  }
  return "?";
}

PauliFactor factor_from_token(std::string token) {
  PauliFactor f;
  if (!token.empty() && token.front() == '-') {
    f.sign = -1;
    token.erase(token.begin());
  }
  if (token == "I") f.kind = PauliKind::I;
  else if (token == "X") f.kind = PauliKind::X;
  else if (token == "Z") f.kind = PauliKind::Z;
  else if (token == "XZ") f.kind = PauliKind::XZ;
  else throw Error("unknown correction factor '" + token + "'");
  return f;
}

}  // namespace

CorrectionOp CorrectionOp::identity(int m) {
  if (m < 1) throw InvariantViolation("correction needs at least one factor");
  CorrectionOp op;
  op.factors.assign(static_cast<std::size_t>(m), PauliFactor{});
  return op;
}

std::string CorrectionOp::str() const {
  std::ostringstream out;
  const bool multi = factors.size() > 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out << "⊗";  // ⊗
    const PauliFactor& f = factors[k];
    if (f.sign < 0 && multi) out << "(-" << kind_name(f.kind) << ")";
    else if (f.sign < 0) out << "-" << kind_name(f.kind);
    else out << kind_name(f.kind);
  }
  return out.str();
}

CorrectionOp CorrectionOp::parse(const std::string& text) {
  CorrectionOp op;
  std::string token;
  std::size_t i = 0;
  const std::string sep = "⊗";
  while (i <= text.size()) {
    if (i == text.size() || text.compare(i, sep.size(), sep) == 0) {
      std::string t;
      for (char c : token)
        if (c != '(' && c != ')' && c != ' ') t.push_back(c);
      op.factors.push_back(factor_from_token(std::move(t)));
      token.clear();
      if (i == text.size()) break;
      i += sep.size();
    } else {
      token.push_back(text[i++]);
    }
  }
  if (op.factors.empty()) throw Error("empty correction string");
  return op;
}

UnitaryMatrix factor_matrix(const PauliFactor& f) {
  std::vector<Amplitude> e;
  switch (f.kind) {
    case PauliKind::I: e = {1, 0, 0, 1}; break;
    case PauliKind::X: e = {0, 1, 1, 0}; break;
    case PauliKind::Z: e = {1, 0, 0, -1}; break;
    case PauliKind::XZ: e = {0, -1, 1, 0}; break;  // X * Z
  }
  UnitaryMatrix u = UnitaryMatrix::from_entries(2, std::move(e));
  return f.sign < 0 ? u.negated() : u;
}

UnitaryMatrix correction_matrix(const CorrectionOp& op) {
  if (op.factors.empty()) throw InvariantViolation("correction has no factors");
  UnitaryMatrix u = factor_matrix(op.factors.front());
  for (std::size_t k = 1; k < op.factors.size(); ++k)
    u = kron(u, factor_matrix(op.factors[k]));
  return u;
}

StateVector apply_correction(const StateVector& s, const std::vector<QubitLabel>& targets,
                             const CorrectionOp& op) {
  if (targets.size() != op.factors.size())
    throw DimensionMismatch("correction factor count does not match target count");
  StateVector out = s;
  for (std::size_t k = 0; k < targets.size(); ++k)
    out = apply_unitary(out, {targets[k]}, factor_matrix(op.factors[k]));
  return out;
}

bool CorrectionTable::covers(const std::string& key) const {
  return entries.count(key) != 0;
}

std::string teleport_key(const std::vector<BellOutcome>& bell, CharlieBit c) {
  std::ostringstream out;
  out << "bell=";
  for (std::size_t k = 0; k < bell.size(); ++k) {
    if (k) out << ",";
    out << to_string(bell[k]);
  }
  out << ";c=" << c.value;
  return out.str();
}

std::string rsp_key(const std::vector<int>& amp_outcomes,
                    const std::vector<int>& phase_outcomes, CharlieBit c) {
  std::ostringstream out;
  out << "amp=";
  for (std::size_t k = 0; k < amp_outcomes.size(); ++k) {
    if (k) out << ",";
    out << amp_outcomes[k];
  }
  out << ";phase=";
  for (std::size_t k = 0; k < phase_outcomes.size(); ++k) {
    if (k) out << ",";
    out << phase_outcomes[k];
  }
  out << ";c=" << c.value;
  return out.str();
}

}  // namespace hqt
