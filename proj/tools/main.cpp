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

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "hqt/harness.hpp"

namespace {

struct Flags {
  int n = 1;
  std::uint64_t seed = 0;
  std::string alice;
  std::string bob;
  std::string convention = "singlet";
  std::string mode = "product";
  std::string force_bell;
  std::string force_amp;
  std::string force_phase;
  int force_charlie = -1;
  std::string out;
  int efficiency_n = 0;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "qubits per direction (register size n)")
      ->check(CLI::Range(1, 20));
  cmd->add_option("--seed", f.seed, "base seed; derives the party states and the sampler");
  cmd->add_option("--alice", f.alice, "JSON file with the unknown state Alice sends");
  cmd->add_option("--bob", f.bob, "JSON file with the known state Bob sends back");
  cmd->add_option("--convention", f.convention, "channel sign convention: singlet|phiminus");
  cmd->add_option("--mode", f.mode, "form of Bob's input: product|general");
  cmd->add_option("--out", f.out, "write the JSON output here instead of stdout");
}

void add_forcing(CLI::App* cmd, Flags& f) {
  cmd->add_option("--force-bell", f.force_bell,
                  "comma list of Bell outcomes to force, e.g. psi-,phi+");
  cmd->add_option("--force-amp", f.force_amp,
                  "comma list of amplitude outcomes (1|2; one block value in general mode)");
  cmd->add_option("--force-phase", f.force_phase,
                  "comma list of phase outcomes (1|2; one block value in general mode)");
  cmd->add_option("--force-charlie", f.force_charlie, "controller bit to force (0|1)")
      ->check(CLI::Range(0, 1));
}

hqt::cli::RunConfig to_config(const Flags& f) {
  hqt::cli::RunConfig cfg;
  cfg.n = f.n;
  cfg.seed = f.seed;
  if (!f.alice.empty()) cfg.alice_file = f.alice;
  if (!f.bob.empty()) cfg.bob_file = f.bob;
  cfg.convention = hqt::convention_from_string(f.convention);
  if (f.mode == "product")
    cfg.mode = hqt::BobKnownState::Mode::Product;
  else if (f.mode == "general")
    cfg.mode = hqt::BobKnownState::Mode::General;
  else
    throw hqt::Error("--mode must be product or general");
  if (!f.force_bell.empty()) cfg.force_bell = hqt::cli::parse_bell_list(f.force_bell);
  if (!f.force_amp.empty()) cfg.force_amp = hqt::cli::parse_outcome_list(f.force_amp);
  if (!f.force_phase.empty()) cfg.force_phase = hqt::cli::parse_outcome_list(f.force_phase);
  if (f.force_charlie >= 0) cfg.force_charlie = f.force_charlie;
  if (!f.out.empty()) cfg.out_path = f.out;
  if (f.efficiency_n > 0) cfg.efficiency_n = f.efficiency_n;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simulator and verification harness for a controlled bidirectional "
      "protocol that teleports an unknown n-qubit state one way while "
      "remotely preparing a known n-qubit state the other way."};
  app.require_subcommand(1);

  Flags run_flags, enum_flags, verify_flags, eff_flags;

  CLI::App* run = app.add_subcommand("run", "execute one protocol run, print the transcript");
  add_common(run, run_flags);
  add_forcing(run, run_flags);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "walk every measurement branch (n <= 3)");
  add_common(enumerate, enum_flags);

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check the fixed correction rows, the showcase branch, "
                "and the derived outcome table");
  add_common(verify, verify_flags);
  verify->add_option("--efficiency", verify_flags.efficiency_n,
                     "also report the resource accounting for this n")
      ->check(CLI::Range(1, 1000000));

  CLI::App* eff = app.add_subcommand("efficiency", "resource accounting report for --n");
  eff->add_option("--n", eff_flags.n, "register size n")->check(CLI::Range(1, 1000000));
  eff->add_option("--seed", eff_flags.seed, "seed for the audited sample run (n <= 3)");
  eff->add_option("--out", eff_flags.out, "write the JSON output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    std::fputs(hqt::error_to_json("usage", e.what()).c_str(), stderr);
    return hqt::cli::kExitBadInput;
  }

  try {
    if (app.got_subcommand(run)) return hqt::cli::cmd_run(to_config(run_flags));
    if (app.got_subcommand(enumerate)) return hqt::cli::cmd_enumerate(to_config(enum_flags));
    if (app.got_subcommand(verify)) return hqt::cli::cmd_verify(to_config(verify_flags));
    if (app.got_subcommand(eff)) {
      hqt::cli::RunConfig cfg = to_config(eff_flags);
      cfg.efficiency_n = eff_flags.n;
      return hqt::cli::cmd_efficiency(cfg);
    }
  } catch (const hqt::Error& e) {
    std::fputs(hqt::error_to_json("bad_input", e.what()).c_str(), stderr);
    return hqt::cli::kExitBadInput;
  }
  return hqt::cli::kExitBadInput;
}
