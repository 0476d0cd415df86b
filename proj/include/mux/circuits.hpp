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

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "mux/approximator.hpp"
#include "mux/bitcodes.hpp"

namespace mux {

struct RotY {
  unsigned target = 0;
  double angle = 0.0;  // block [[cos a, sin a], [-sin a, cos a]]
  bool operator==(const RotY&) const = default;
};

struct Cnot {
  unsigned control = 0;
  unsigned target = 0;
  bool operator==(const Cnot&) const = default;
};

using Gate = std::variant<RotY, Cnot>;

// Gates are listed in operator-product order: gates[0] is the leftmost
// factor, i.e. the gate applied last to a ket.
struct GateSequence {
  unsigned qubits = 0;
  std::vector<Gate> gates;
};

// Dense complex matrix sized for simulation checks; column-major so gate
// kernels can walk columns contiguously.
class CMat {
 public:
  CMat() = default;
  explicit CMat(std::size_t dim) : dim_(dim), a_(dim * dim) {}
  static CMat identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::complex<double>& operator()(std::size_t r, std::size_t c) {
    return a_[c * dim_ + r];
  }
  std::complex<double> operator()(std::size_t r, std::size_t c) const {
    return a_[c * dim_ + r];
  }
  std::complex<double>* col(std::size_t c) { return a_.data() + c * dim_; }

  CMat adjoint() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::complex<double>> a_;
};

CMat operator*(const CMat& a, const CMat& b);
double max_abs_diff(const CMat& a, const CMat& b);
double frobenius_diff(const CMat& a, const CMat& b);
// Largest singular value of a - b (power iteration; exact enough for
// tolerance checks on small matrices).
double spectral_norm_diff(const CMat& a, const CMat& b);

inline constexpr unsigned kDefaultMaxSimQubits = 12;

// Dense unitary of the multiplexed rotation: block [[cos phi_b, sin phi_b],
// [-sin phi_b, cos phi_b]] on the target (highest) wire for control word b.
CMat multiplexor_unitary(const MultiplexorSpec& spec,
                         unsigned max_qubits = kDefaultMaxSimQubits);

// Rotation/CNOT staircase for an angle table theta (natural index order,
// length 2^k where k = pi.width() <= qubits-1).  Rotation t carries
// theta[grayish(t)]; the CNOT after it is controlled on the bit in which
// consecutive grayish words differ, the final CNOT closes the cycle.
// k = 0 yields the bare rotation.
GateSequence build_seo(const std::vector<double>& theta, const BitPermutation& pi,
                       unsigned qubits);

// Net symmetry action of conjugating and negating parameters: the gate
// list is mirrored and each gate replaced by its own inverse-with-negated
// parameters, which leaves rotation angles unchanged.  A valid multiplexor
// staircase simulates to the same unitary.
GateSequence time_reverse(const GateSequence& seq);

// Relabel CNOT control wires through a bit permutation and reassign the
// rotation angles accordingly.  Each rotation's effective block subscript is
// the XOR of the control masks of all CNOTs to its right in the operator
// product; the angle stored under subscript m moves to the rotation whose
// relabeled subscript equals m, so a valid multiplexor staircase again
// simulates to the same unitary.  Throws when the subscript set is not
// closed under the relabeling (the sequence is not a full staircase).
GateSequence permute_controls(const GateSequence& seq, const BitPermutation& pi);

// Drop rotations with |angle| < zero_tol, then cancel pairs of equal
// CNOTs separated only by CNOTs on the same target (which all commute).
GateSequence cancel_cnots(const GateSequence& seq, double zero_tol = 1e-12);

// CNOTs left after cancelling a staircase whose angle table ignores
// `deficit` control bits: 2^(qubits-1-deficit), or 0 once only the mean
// angle survives.
std::uint64_t cnot_count(unsigned qubits, unsigned deficit);

// Worst-case CNOT floor for exact synthesis of an unstructured qubits-wire
// unitary, and the CNOT total of the standard exact multiplexor compiler.
double lower_bound_cnots(unsigned qubits);
std::uint64_t unstructured_cnot_reference(unsigned qubits);

CMat simulate(const GateSequence& seq,
              unsigned max_qubits = kDefaultMaxSimQubits);

// One gate applied in place to a state-vector column.
void apply_gate(std::complex<double>* state, unsigned qubits, const Gate& g);

// Text form: QUBITS header, one gate per line (ROTY <target> <angle> /
// CNOT <control> <target>), top-to-bottom matching the product order, and
// a trailing comment with the CNOT tally.
std::string to_text(const GateSequence& seq);
void write_text(std::ostream& os, const GateSequence& seq);
GateSequence parse_gate_sequence(std::istream& is);

}  // namespace mux
