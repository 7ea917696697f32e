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

#include "hqt/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hqt {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kInputNormTol = 1e-9;  // reader-side slack before renormalizing
constexpr int kMaxFileQubits = 20;

ordered_json parse_or_throw(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

double require_number(const ordered_json& j, const char* what) {
  if (!j.is_number()) throw Error(std::string(what) + " must be a number");
  return j.get<double>();
}

int require_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string(what) + " must be an integer");
  return j.get<int>();
}

const ordered_json& require_field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

ordered_json real_json(double x) { return ordered_json(round_sig15(x)); }

ordered_json complex_json(const Amplitude& a) {
  return ordered_json::array({real_json(a.real()), real_json(a.imag())});
}

Amplitude complex_from(const ordered_json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw Error(std::string(what) + " must be a [re, im] pair");
  return {require_number(j[0], what), require_number(j[1], what)};
}

std::vector<Amplitude> amplitudes_from(const ordered_json& j, std::size_t expected,
                                       const char* what) {
  if (!j.is_array() || j.size() != expected) {
    std::ostringstream msg;
    msg << what << " must be an array of " << expected << " [re, im] pairs";
    throw Error(msg.str());
  }
  std::vector<Amplitude> amps;
  amps.reserve(expected);
  for (const auto& e : j) amps.push_back(complex_from(e, what));
  return amps;
}

// Rejects norms off by more than 1e-9, then renormalizes exactly.
void renormalize(std::vector<Amplitude>& amps, const char* what) {
  double s = 0.0;
  for (const Amplitude& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw Error(std::string(what) + " has a non-finite entry");
    s += std::norm(a);
  }
  const double norm = std::sqrt(s);
  if (std::abs(norm - 1.0) > kInputNormTol)
    throw Error(std::string(what) + " is not normalized (norm off by more than 1e-9)");
  for (Amplitude& a : amps) a /= norm;
}

void renormalize(std::vector<double>& mags, const char* what) {
  double s = 0.0;
  for (double m : mags) {
    if (!std::isfinite(m)) throw Error(std::string(what) + " has a non-finite entry");
    s += m * m;
  }
  const double norm = std::sqrt(s);
  if (std::abs(norm - 1.0) > kInputNormTol)
    throw Error(std::string(what) + " is not normalized (norm off by more than 1e-9)");
  for (double& m : mags) m /= norm;
}

std::string kind_string(ClassicalMessage::Kind k) {
  switch (k) {
    case ClassicalMessage::Kind::BellOutcomes: return "bell_outcomes";
    case ClassicalMessage::Kind::AmplitudeOutcomes: return "amplitude_outcomes";
    case ClassicalMessage::Kind::PhaseOutcomes: return "phase_outcomes";
    case ClassicalMessage::Kind::CharlieAnnouncement: return "charlie_announcement";
  }
  return "?";
}

ordered_json message_json(const ClassicalMessage& m, int n) {
  ordered_json j;
  j["kind"] = kind_string(m.kind);
  j["from"] = to_string(m.sender);
  ordered_json to = ordered_json::array();
  for (Party p : m.recipients) to.push_back(to_string(p));
  j["to"] = to;
  ordered_json payload = ordered_json::array();
  switch (m.kind) {
    case ClassicalMessage::Kind::BellOutcomes:
      for (BellOutcome b : m.bell) payload.push_back(to_string(b));
      break;
    case ClassicalMessage::Kind::AmplitudeOutcomes:
    case ClassicalMessage::Kind::PhaseOutcomes:
      for (int o : m.outcomes) payload.push_back(o);
      break;
    case ClassicalMessage::Kind::CharlieAnnouncement:
      payload.push_back(m.charlie_bit);
      break;
  }
  j["payload"] = payload;
  j["payload_bits"] = m.payload_bits(n);
  return j;
}

std::string direction_string(CorrectionDirection d) {
  return d == CorrectionDirection::Teleport ? "teleport" : "remote_state_prep";
}

std::string provenance_string(TableProvenance p) {
  return p == TableProvenance::Builtin ? "builtin" : "derived";
}

}  // namespace

double round_sig15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

StateVector state_from_json_text(const std::string& text) {
  const ordered_json j = parse_or_throw(text);
  const int m = require_int(require_field(j, "num_qubits"), "num_qubits");
  if (m < 1 || m > kMaxFileQubits) throw Error("num_qubits must be between 1 and 20");
  const std::size_t dim = static_cast<std::size_t>(1) << m;
  std::vector<Amplitude> amps = amplitudes_from(require_field(j, "amps"), dim, "amps");
  renormalize(amps, "amps");
  std::vector<QubitLabel> qubits;
  qubits.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) qubits.push_back(work(k));
  return StateVector::from_amplitudes(std::move(qubits), std::move(amps));
}

std::string state_to_json_text(const StateVector& s) {
  ordered_json j;
  j["num_qubits"] = static_cast<int>(s.num_qubits());
  ordered_json amps = ordered_json::array();
  for (const Amplitude& a : s.amplitudes()) amps.push_back(complex_json(a));
  j["amps"] = amps;
  return j.dump(2) + "\n";
}

StateVector read_state_file(const std::string& path) {
  return state_from_json_text(read_text_file(path));
}

void write_state_file(const std::string& path, const StateVector& s) {
  write_text_file(path, state_to_json_text(s));
}

AliceState alice_from_json_text(const std::string& text) {
  ordered_json j = parse_or_throw(text);
  if (j.is_object() && j.contains("alice")) j = j.at("alice");
  const int n = require_int(require_field(j, "n"), "n");
  if (n < 1 || n > kMaxFileQubits) throw Error("n must be between 1 and 20");
  const std::size_t dim = static_cast<std::size_t>(1) << n;
  std::vector<Amplitude> alphas = amplitudes_from(require_field(j, "alphas"), dim, "alphas");
  renormalize(alphas, "alphas");
  return AliceState::create(n, std::move(alphas));
}

BobKnownState bob_from_json_text(const std::string& text) {
  ordered_json j = parse_or_throw(text);
  if (j.is_object() && j.contains("bob")) j = j.at("bob");
  std::string mode = "product";
  if (j.is_object() && j.contains("mode")) {
    if (!j.at("mode").is_string()) throw Error("mode must be \"product\" or \"general\"");
    mode = j.at("mode").get<std::string>();
  }
  if (mode == "product") {
    const int n = require_int(require_field(j, "n"), "n");
    if (n < 1 || n > kMaxFileQubits) throw Error("n must be between 1 and 20");
    const ordered_json& qubits = require_field(j, "qubits");
    if (!qubits.is_array() || qubits.size() != static_cast<std::size_t>(n))
      throw Error("qubits must list one {beta0, beta1, theta} entry per qubit");
    std::vector<BobQubit> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (const auto& q : qubits) {
      BobQubit f;
      f.beta0 = require_number(require_field(q, "beta0"), "beta0");
      f.beta1 = require_number(require_field(q, "beta1"), "beta1");
      f.theta = q.is_object() && q.contains("theta")
                    ? require_number(q.at("theta"), "theta")
                    : 0.0;
      if (f.beta0 < 0.0 || f.beta1 < 0.0) throw Error("beta0 and beta1 must be >= 0");
      const double norm = std::sqrt(f.beta0 * f.beta0 + f.beta1 * f.beta1);
      if (std::abs(norm - 1.0) > kInputNormTol)
        throw Error("each qubit needs beta0^2 + beta1^2 = 1 (off by more than 1e-9)");
      f.beta0 /= norm;
      f.beta1 /= norm;
      factors.push_back(f);
    }
    return BobKnownState::product(std::move(factors));
  }
  if (mode == "general") {
    const ordered_json& jb = require_field(j, "betas");
    const ordered_json& jt = require_field(j, "thetas");
    if (!jb.is_array() || !jt.is_array() || jb.size() != jt.size())
      throw Error("betas and thetas must be arrays of equal length");
    std::vector<double> betas, thetas;
    betas.reserve(jb.size());
    thetas.reserve(jt.size());
    for (const auto& e : jb) betas.push_back(require_number(e, "betas"));
    for (const auto& e : jt) thetas.push_back(require_number(e, "thetas"));
    for (double b : betas)
      if (b < 0.0) throw Error("betas must be >= 0");
    renormalize(betas, "betas");
    return BobKnownState::general(std::move(betas), std::move(thetas));
  }
  throw Error("mode must be \"product\" or \"general\"");
}

AliceState read_alice_file(const std::string& path) {
  return alice_from_json_text(read_text_file(path));
}

BobKnownState read_bob_file(const std::string& path) {
  return bob_from_json_text(read_text_file(path));
}

std::string transcript_to_json(const ProtocolTranscript& t) {
  t.validate();
  ordered_json j;
  j["n"] = t.n;
  j["convention"] = to_string(t.convention);
  j["mode"] = t.mode == BobKnownState::Mode::Product ? "product" : "general";
  ordered_json steps = ordered_json::array();
  for (const TranscriptEntry& e : t.entries) {
    ordered_json s;
    s["step"] = e.step;
    s["actor"] = to_string(e.actor);
    s["action"] = e.action;
    ordered_json outcomes = ordered_json::array();
    for (const std::string& o : e.outcome_labels) outcomes.push_back(o);
    s["outcomes"] = outcomes;
    s["probability"] = real_json(e.probability);
    if (e.message) s["message"] = message_json(*e.message, t.n);
    steps.push_back(s);
  }
  j["steps"] = steps;
  j["teleport_correction"] = t.teleport_correction.str();
  j["rsp_correction"] = t.rsp_correction.str();
  j["teleport_fidelity"] = real_json(t.teleport_fidelity);
  j["rsp_fidelity"] = real_json(t.rsp_fidelity);
  j["joint_probability"] = real_json(t.joint_probability);
  j["classical_bits"] = t.classical_bits;
  return j.dump(2) + "\n";
}

std::string branch_reports_to_json(const std::vector<BranchReport>& reports) {
  ordered_json j;
  j["count"] = static_cast<int>(reports.size());
  double total = 0.0;
  double min_f = 1.0;
  double max_f = 0.0;
  for (const BranchReport& r : reports) {
    total += r.probability;
    min_f = std::min({min_f, r.teleport_fidelity, r.rsp_fidelity});
    max_f = std::max({max_f, r.teleport_fidelity, r.rsp_fidelity});
  }
  if (reports.empty()) min_f = max_f = 0.0;
  j["total_probability"] = real_json(total);
  j["min_fidelity"] = real_json(min_f);
  j["max_fidelity"] = real_json(max_f);
  ordered_json branches = ordered_json::array();
  for (const BranchReport& r : reports) {
    ordered_json b;
    b["key"] = r.key();
    ordered_json bell = ordered_json::array();
    for (BellOutcome o : r.bell) bell.push_back(to_string(o));
    b["bell"] = bell;
    b["amplitude"] = r.amplitude;
    b["phase"] = r.phase;
    b["charlie"] = r.charlie;
    b["probability"] = real_json(r.probability);
    b["teleport_correction"] =
        r.teleport_correction ? ordered_json(r.teleport_correction->str()) : ordered_json();
    b["teleport_fidelity"] = real_json(r.teleport_fidelity);
    b["rsp_correction"] =
        r.rsp_correction ? ordered_json(r.rsp_correction->str()) : ordered_json();
    b["rsp_fidelity"] = real_json(r.rsp_fidelity);
    branches.push_back(b);
  }
  j["branches"] = branches;
  return j.dump(2) + "\n";
}

std::string correction_table_to_json(const CorrectionTable& table) {
  ordered_json j;
  j["direction"] = direction_string(table.direction);
  j["provenance"] = provenance_string(table.provenance);
  ordered_json entries = ordered_json::object();
  for (const auto& [key, op] : table.entries) entries[key] = op.str();
  j["entries"] = entries;
  j["uncorrectable"] = table.uncorrectable;
  return j.dump(2) + "\n";
}

CorrectionTable correction_table_from_json(const std::string& text) {
  const ordered_json j = parse_or_throw(text);
  CorrectionTable table;
  const ordered_json& dir = require_field(j, "direction");
  if (!dir.is_string()) throw Error("direction must be a string");
  const std::string d = dir.get<std::string>();
  if (d == "teleport")
    table.direction = CorrectionDirection::Teleport;
  else if (d == "remote_state_prep")
    table.direction = CorrectionDirection::RemoteStatePrep;
  else
    throw Error("direction must be \"teleport\" or \"remote_state_prep\"");
  const ordered_json& prov = require_field(j, "provenance");
  if (!prov.is_string()) throw Error("provenance must be a string");
  const std::string p = prov.get<std::string>();
  if (p == "builtin")
    table.provenance = TableProvenance::Builtin;
  else if (p == "derived")
    table.provenance = TableProvenance::Derived;
  else
    throw Error("provenance must be \"builtin\" or \"derived\"");
  const ordered_json& entries = require_field(j, "entries");
  if (!entries.is_object()) throw Error("entries must be an object");
  for (const auto& [key, value] : entries.items()) {
    if (!value.is_string()) throw Error("entries values must be correction strings");
    table.entries.emplace(key, CorrectionOp::parse(value.get<std::string>()));
  }
  if (j.contains("uncorrectable")) {
    const ordered_json& u = j.at("uncorrectable");
    if (!u.is_array()) throw Error("uncorrectable must be an array");
    for (const auto& e : u) {
      if (!e.is_string()) throw Error("uncorrectable entries must be strings");
      table.uncorrectable.push_back(e.get<std::string>());
    }
  }
  return table;
}

std::string efficiency_to_json(const EfficiencyReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["transmitted_qubits"] = r.transmitted_qubits;
  j["channel_qubits"] = r.channel_qubits;
  j["auxiliary_qubits"] = r.auxiliary_qubits;
  j["input_carrier_qubits"] = r.input_carrier_qubits;
  j["stated_classical_bits"] = r.stated_classical_bits;
  j["eta"] = real_json(r.eta);
  j["eta_limit"] = real_json(r.eta_limit);
  if (r.audited_classical_bits) j["audited_classical_bits"] = *r.audited_classical_bits;
  ordered_json discrepancies = ordered_json::array();
  for (const EfficiencyDiscrepancy& d : r.discrepancies) {
    ordered_json e;
    e["quantity"] = d.quantity;
    e["stated"] = real_json(d.stated);
    e["computed"] = real_json(d.computed);
    e["matches"] = d.matches;
    e["note"] = d.note;
    discrepancies.push_back(e);
  }
  j["discrepancies"] = discrepancies;
  return j.dump(2) + "\n";
}

std::string table1_rows_to_json_lines(const std::vector<Table1RowCheck>& rows) {
  std::ostringstream out;
  for (const Table1RowCheck& r : rows) {
    ordered_json j;
    j["check"] = "teleport_table_row";
    j["bell"] = to_string(r.bell);
    j["charlie"] = r.charlie;
    j["table_op"] = r.table_op.str();
    j["derived_op"] = r.derived_op ? ordered_json(r.derived_op->str()) : ordered_json();
    j["fidelity_after_table_op"] = real_json(r.fidelity_after_table_op);
    j["operators_agree"] = r.operators_agree;
    j["pass"] = r.pass;
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string error_to_json(const std::string& type, const std::string& message) {
  ordered_json j;
  j["error"] = ordered_json{{"type", type}, {"message", message}};
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("read failed: " + path);
  return buf.str();
}

}  // namespace hqt
