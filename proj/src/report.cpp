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

#include "mux/report.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mux/circuits.hpp"
#include "mux/verify.hpp"

namespace mux {

namespace {

constexpr char kSeparator[] = "-----------------------";

std::string format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string format(const char* fmt, ...) {
  char buf[128];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

std::string tuple_text(const BitPermutation& pi) {
  std::string s = "(";
  const auto tuple = pi.to_tuple();
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(tuple[i]);
  }
  return s + ")";
}

unsigned control_count(const RunConfig& config) {
  if (config.total_bits == 0)
    throw std::invalid_argument("total bit count must be at least 1");
  const unsigned controls = config.total_bits - 1;
  if (controls > 20)
    throw std::invalid_argument("total bit count too large for dense tables");
  if (config.mode == SweepMode::AllPerms && controls > config.max_enum_bits)
    throw std::invalid_argument(
        "all-perms sweep over " + std::to_string(controls) +
        " control bits exceeds the enumeration cap of " +
        std::to_string(config.max_enum_bits));
  return controls;
}

std::string provenance_line(const RunConfig& config) {
  if (!config.provenance) return "";
  if (!config.phi_path.empty()) return "# phi: file " + config.phi_path;
  return format("# phi: mt19937_64 seed=%llu sorted=%s",
                static_cast<unsigned long long>(config.seed),
                config.sorted ? "yes" : "no");
}

}  // namespace

std::vector<double> random_phi(std::uint64_t seed, std::size_t count,
                               bool sorted) {
  std::mt19937_64 gen(seed);
  std::vector<double> phi(count);
  for (double& x : phi)
    x = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  if (sorted) std::sort(phi.begin(), phi.end());
  return phi;
}

std::vector<double> load_phi_file(const std::string& path, std::size_t expect) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open angle file: " + path);
  std::vector<double> phi;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok[0] == '#') continue;
    double value = 0.0;
    std::istringstream vs(tok);
    std::string rest;
    if (!(vs >> value) || (vs >> rest) || (ss >> rest))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected one number per line");
    phi.push_back(value);
  }
  if (phi.size() != expect)
    throw std::runtime_error(path + ": expected " + std::to_string(expect) +
                             " angles, found " + std::to_string(phi.size()));
  return phi;
}

std::vector<double> resolve_phi(const RunConfig& config) {
  const std::size_t count = std::size_t{1} << (config.total_bits - 1);
  if (!config.phi_path.empty()) return load_phi_file(config.phi_path, count);
  if (!config.has_seed)
    throw std::invalid_argument("no angle source: provide --phi or --seed");
  return random_phi(config.seed, count, config.sorted);
}

std::vector<BitPermutation> visited_permutations(unsigned bits,
                                                 SweepMode mode) {
  if (mode == SweepMode::AllPerms) return all_permutations(bits);
  std::vector<BitPermutation> out;
  std::set<std::vector<unsigned>> seen;
  for (unsigned deficit = 0; deficit <= bits; ++deficit) {
    for (const PermutationClass& cls : class_representatives(bits, deficit)) {
      std::vector<unsigned> images(bits);
      for (unsigned a = 0; a < bits; ++a) images[a] = cls.representative(a);
      if (seen.insert(images).second) out.push_back(cls.representative);
    }
  }
  return out;
}

SweepTables sweep_approximants(const MultiplexorSpec& spec,
                               std::vector<BitPermutation> perms) {
  SweepTables tables;
  tables.permutations = std::move(perms);
  tables.rows.reserve(tables.permutations.size());
  for (const BitPermutation& pi : tables.permutations) {
    std::vector<Approximant> row;
    row.reserve(spec.controls + 1);
    for (unsigned deficit = 0; deficit <= spec.controls; ++deficit)
      row.push_back(approximate_fast(spec, pi, deficit));
    tables.rows.push_back(std::move(row));
  }
  return tables;
}

void write_phi_table(std::ostream& os, const std::vector<double>& phi,
                     const SweepTables& tables,
                     const std::string& provenance_line) {
  if (!provenance_line.empty()) os << provenance_line << '\n';
  for (std::size_t i = 0; i < phi.size(); ++i)
    os << format("phi(%zu)= %.9f", i + 1, phi[i]) << '\n';
  for (std::size_t p = 0; p < tables.permutations.size(); ++p) {
    os << kSeparator << '\n';
    os << "permutation " << (p + 1) << " = "
       << tuple_text(tables.permutations[p]) << '\n';
    os << "delta_B, phi_prime=" << '\n';
    for (std::size_t d = 0; d < tables.rows[p].size(); ++d) {
      os << d;
      for (double v : tables.rows[p][d].phi_prime) os << format("%8.3f", v);
      os << '\n';
    }
  }
}

void write_error_table(std::ostream& os, const SweepTables& tables) {
  os << "error as function of (permutation\\delta_B)" << '\n';
  if (tables.rows.empty()) return;
  const std::size_t deficits = tables.rows.front().size();
  for (std::size_t d = 0; d < deficits; ++d)
    os << format(d == 0 ? "%13zu" : "%12zu", d);
  os << '\n';
  for (std::size_t p = 0; p < tables.rows.size(); ++p) {
    os << format("%4zu", p + 1);
    for (std::size_t d = 0; d < deficits; ++d)
      os << format(d == 0 ? "%13.3e" : "%12.3e",
                   tables.rows[p][d].linearized_error);
    os << '\n';
  }
}

int run_approx(const RunConfig& config) {
  const unsigned controls = control_count(config);
  const std::vector<double> phi = resolve_phi(config);
  const MultiplexorSpec spec = make_multiplexor(phi);
  const SweepTables tables =
      sweep_approximants(spec, visited_permutations(controls, config.mode));

  namespace fs = std::filesystem;
  const fs::path dir = config.out_dir.empty() ? fs::path(".")
                                              : fs::path(config.out_dir);
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "out_phis.txt");
    if (!out) throw std::runtime_error("cannot write out_phis.txt");
    write_phi_table(out, phi, tables, provenance_line(config));
  }
  {
    std::ofstream out(dir / "out_error.txt");
    if (!out) throw std::runtime_error("cannot write out_error.txt");
    write_error_table(out, tables);
  }
  return 0;
}

int run_circuit(const RunConfig& config, const std::vector<unsigned>& tuple,
                unsigned deficit) {
  const unsigned controls = control_count(config);
  if (deficit > controls)
    throw std::invalid_argument("deficit exceeds the control count");
  const BitPermutation pi = tuple.empty() ? BitPermutation::reversal(controls)
                                          : BitPermutation::from_tuple(tuple);
  if (pi.width() != controls)
    throw std::invalid_argument("permutation tuple length must equal " +
                                std::to_string(controls));
  const MultiplexorSpec spec = make_multiplexor(resolve_phi(config));
  const Approximant a = approximate_fast(spec, pi, deficit);
  const GateSequence seq =
      cancel_cnots(build_seo(a.theta_prime, pi, config.total_bits));
  if (config.out_dir.empty()) {
    std::ostringstream ss;
    write_text(ss, seq);
    std::fputs(ss.str().c_str(), stdout);
    return 0;
  }
  namespace fs = std::filesystem;
  fs::create_directories(config.out_dir);
  std::ofstream out(fs::path(config.out_dir) / "circuit.txt");
  if (!out) throw std::runtime_error("cannot write circuit.txt");
  write_text(out, seq);
  return 0;
}

int run_verify(unsigned max_bits, unsigned trials, std::ostream& os) {
  const std::vector<CheckResult> results = run_all_checks(max_bits, trials);
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    os << format("%-54s residual %9.3e  tol %7.1e  %s", r.name.c_str(),
                 r.residual, r.tolerance, r.passed ? "PASS" : "FAIL")
       << '\n';
    if (!r.passed) ++failed;
  }
  os << results.size() << " checks, " << failed << " failed" << '\n';
  return failed == 0 ? 0 : 1;
}

int run_pareto(const RunConfig& config, std::ostream& os) {
  const MultiplexorSpec spec = make_multiplexor(resolve_phi(config));
  os << "delta_b,cnot_count,best_class,linearized_error,operator_error\n";
  for (const ParetoRow& row : pareto_table(spec)) {
    std::string cls;
    for (std::size_t i = 0; i < row.dropped_bits.size(); ++i) {
      if (i) cls += '|';
      cls += std::to_string(row.dropped_bits[i]);
    }
    if (cls.empty()) cls = "-";
    os << row.deficit << ',' << row.cnots << ',' << cls << ','
       << format("%.17g", row.linearized_error) << ','
       << format("%.17g", row.operator_error) << '\n';
  }
  return 0;
}

}  // namespace mux
