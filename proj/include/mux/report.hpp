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

#ifndef MUX_REPORT_HPP_
#define MUX_REPORT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mux/approximator.hpp"
#include "mux/bitcodes.hpp"
#include "mux/search.hpp"

namespace mux {

// Which permutations a sweep visits: every class representative (compact)
// or the full factorial sweep in lexicographic tuple order.
enum class SweepMode { Classes, AllPerms };

struct RunConfig {
  unsigned total_bits = 4;   // qubit count; controls = total_bits - 1
  std::string phi_path;      // empty: draw angles from the seeded generator
  std::uint64_t seed = 0;
  bool has_seed = false;
  bool sorted = false;       // sort drawn angles in non-decreasing order
  std::string out_dir;       // empty: current directory (or stdout for circuits)
  SweepMode mode = SweepMode::Classes;
  bool provenance = false;   // prepend a '#' line recording the angle source
  unsigned max_enum_bits = kDefaultMaxEnumerationBits;
};

// iid uniform draws on [0,1) from mt19937_64, optionally sorted.
std::vector<double> random_phi(std::uint64_t seed, std::size_t count, bool sorted);

// One decimal per line; '#' lines and blank lines are ignored.
std::vector<double> load_phi_file(const std::string& path, std::size_t expect);

// Dispatches to the file or the generator per the config.
std::vector<double> resolve_phi(const RunConfig& config);

std::vector<BitPermutation> visited_permutations(unsigned bits, SweepMode mode);

// Approximants for every visited permutation at every deficit 0..bits.
struct SweepTables {
  std::vector<BitPermutation> permutations;
  std::vector<std::vector<Approximant>> rows;  // [permutation][deficit]
};

SweepTables sweep_approximants(const MultiplexorSpec& spec,
                               std::vector<BitPermutation> perms);

// The two report files: angle listing with per-permutation approximant
// blocks, and the error table (rows = permutations, columns = deficit).
void write_phi_table(std::ostream& os, const std::vector<double>& phi,
                     const SweepTables& tables,
                     const std::string& provenance_line = "");
void write_error_table(std::ostream& os, const SweepTables& tables);

int run_approx(const RunConfig& config);
int run_circuit(const RunConfig& config, const std::vector<unsigned>& tuple,
                unsigned deficit);
int run_verify(unsigned max_bits, unsigned trials, std::ostream& os);
int run_pareto(const RunConfig& config, std::ostream& os);

}  // namespace mux

#endif  // MUX_REPORT_HPP_
