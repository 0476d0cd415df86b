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

#include <array>
#include <cstdint>
#include <vector>

#include "mux/bitcodes.hpp"
#include "mux/matrix.hpp"

namespace mux {

// A multiplexed y-rotation: one rotation angle per control word.  The
// target is the highest wire of an (controls+1)-qubit register; control
// bit a lives on wire a.
struct MultiplexorSpec {
  unsigned controls = 0;
  std::vector<double> phi;  // size 2^controls, phi[b] for control word b
};

MultiplexorSpec make_multiplexor(std::vector<double> phi);

// Angle duality: theta (staircase rotation angles, natural index order)
// is the normalized Hadamard transform of phi (per-control-word angles),
// and the transform is an involution up to the 1/N weight.
std::vector<double> theta_from_phi(const std::vector<double>& phi);
std::vector<double> phi_from_theta(const std::vector<double>& theta);

// Result of replacing a multiplexor by one whose angle table depends on
// `deficit` fewer control bits (which bits depends on the permutation).
struct Approximant {
  BitPermutation permutation;
  unsigned deficit = 0;  // number of dropped control bits
  std::vector<double> phi_prime;
  std::vector<double> theta_prime;
  double linearized_error = 0.0;  // max_b |phi'_b - phi_b|
  double operator_error = 0.0;    // max_b 2|sin((phi'_b - phi_b)/2)|
  std::uint64_t cnots = 0;        // CNOTs after cancellation
};

// Dense route: project phi onto the first 2^(controls-deficit) columns of
// the permuted-Walsh basis.  Kept as the reference implementation.
Approximant approximate(const MultiplexorSpec& spec, const BitPermutation& pi,
                        unsigned deficit);

// Fast route: shuffle into staircase listing order, average over blocks of
// 2^deficit, shuffle back.  O(N) and exactly equivalent to approximate().
Approximant approximate_fast(const MultiplexorSpec& spec, const BitPermutation& pi,
                             unsigned deficit);

// Block-averaging matrix in listing order: entry (q,s) is 2^-deficit when
// q and s share their top `kept` bits (deficit = bits - kept), else 0.
// Equals the rank-2^kept projector onto the leading Walsh columns.
Mat gamma_matrix(unsigned bits, unsigned kept);

double linearized_error(const std::vector<double>& phi,
                        const std::vector<double>& phi_prime);
double operator_error(const std::vector<double>& phi,
                      const std::vector<double>& phi_prime);

// Distance between exp(i a.sigma) and exp(i b.sigma) for Pauli vectors
// a, b: largest singular value of the difference and its Frobenius norm.
struct Su2Distance {
  double two_norm = 0.0;
  double frobenius = 0.0;
};
Su2Distance su2_distance(const std::array<double, 3>& a,
                         const std::array<double, 3>& b);

// Worst-case per-block bound for a multiplexor carrying two independent
// angle tables on orthogonal Pauli axes: max_b of the Euclidean length of
// the per-axis angle changes.
double generalized_error_bound(const std::vector<double>& phi1,
                               const std::vector<double>& phi1_prime,
                               const std::vector<double>& phi2,
                               const std::vector<double>& phi2_prime);

}  // namespace mux
