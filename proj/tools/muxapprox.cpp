// Copyright 2026 The muxapprox developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mux/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "muxapprox: approximate multiplexed Ry rotations with fewer control "
      "bits and emit the matching CNOT/rotation staircases"};
  app.require_subcommand(1);

  mux::RunConfig cfg;

  const auto add_angle_source = [&cfg](CLI::App* cmd) {
    auto* phi = cmd->add_option("--phi", cfg.phi_path,
                                "angle file, one value per line");
    auto* seed =
        cmd->add_option("--seed", cfg.seed, "seed for iid uniform angles")
            ->each([&cfg](const std::string&) { cfg.has_seed = true; });
    cmd->add_flag("--sorted", cfg.sorted,
                  "sort drawn angles in non-decreasing order");
    phi->excludes(seed);
    seed->excludes(phi);
  };
  const auto add_nb = [&cfg](CLI::App* cmd) {
    cmd->add_option("--nb", cfg.total_bits, "total bit count (1 control less)")
        ->check(CLI::Range(1u, 21u))
        ->capture_default_str();
  };

  CLI::App* approx = app.add_subcommand(
      "approx", "write out_phis.txt and out_error.txt for a permutation sweep");
  add_nb(approx);
  add_angle_source(approx);
  approx->add_option("--out", cfg.out_dir, "output directory (default: .)");
  const std::map<std::string, mux::SweepMode> modes{
      {"classes", mux::SweepMode::Classes},
      {"all-perms", mux::SweepMode::AllPerms}};
  approx
      ->add_option("--mode", cfg.mode,
                   "sweep class representatives or all permutations")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->default_str("classes");
  approx->add_flag("--provenance", cfg.provenance,
                   "record the angle source as a leading '#' line");
  approx
      ->add_option("--max-nu", cfg.max_enum_bits,
                   "cap on control bits for the all-perms sweep")
      ->capture_default_str();

  CLI::App* circuit = app.add_subcommand(
      "circuit", "emit the cancelled rotation/CNOT staircase of an approximant");
  add_nb(circuit);
  add_angle_source(circuit);
  circuit->add_option("--out", cfg.out_dir,
                      "output directory (default: stdout)");
  unsigned deficit = 0;
  circuit->add_option("--delta-b", deficit, "number of control bits to drop")
      ->capture_default_str();
  std::vector<unsigned> tuple;
  circuit
      ->add_option("--perm", tuple,
                   "control permutation tuple, e.g. 3,2,1 (default: reversal)")
      ->delimiter(',');

  CLI::App* verify = app.add_subcommand(
      "verify", "run the identity and simulation checks; nonzero exit on fail");
  unsigned verify_bits = 6;
  unsigned trials = 50;
  verify->add_option("--max-nu", verify_bits, "largest control count checked")
      ->check(CLI::Range(0u, 10u))
      ->capture_default_str();
  verify->add_option("--trials", trials, "randomized instances per check")
      ->capture_default_str();

  CLI::App* pareto = app.add_subcommand(
      "pareto", "CSV of best class, CNOT count and error per deficit");
  add_nb(pareto);
  add_angle_source(pareto);

  CLI11_PARSE(app, argc, argv);

  try {
    if (approx->parsed()) return mux::run_approx(cfg);
    if (circuit->parsed()) return mux::run_circuit(cfg, tuple, deficit);
    if (verify->parsed()) return mux::run_verify(verify_bits, trials, std::cout);
    if (pareto->parsed()) return mux::run_pareto(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "muxapprox: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
