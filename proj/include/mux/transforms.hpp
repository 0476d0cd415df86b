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

#include <cstdint>
#include <vector>

#include "mux/bitcodes.hpp"
#include "mux/matrix.hpp"

namespace mux {

// Four orderings of the same +-1/sqrt(N) orthogonal basis on bits wires:
//   Hadamard       natural (tensor-product) column order
//   Paley          Hadamard columns in bit-reversed order
//   Walsh          sequency order: bit-reversed reflected-code order
//   PermutedWalsh  reflected-code order shuffled by a chosen bit permutation
enum class TransformKind { Hadamard, Paley, Walsh, PermutedWalsh };

struct TransformMatrix {
  TransformKind kind;
  unsigned bits;
  Mat m;
};

inline constexpr unsigned kDefaultMaxTransformBits = 12;

TransformMatrix build_transform(TransformKind kind, unsigned bits,
                                unsigned max_bits = kDefaultMaxTransformBits);
// PermutedWalsh needs the bit permutation; other kinds ignore it.
TransformMatrix build_transform(TransformKind kind, unsigned bits,
                                const BitPermutation& pi,
                                unsigned max_bits = kDefaultMaxTransformBits);

// Permutation matrix M with M(y,x) = 1 iff y = images[x].
Mat permutation_matrix(const std::vector<std::uint64_t>& images);

// In-place fast transform, normalized so that fwht(v) equals the Hadamard
// matrix applied to v; applying it twice returns the input.
void fwht_inplace(std::vector<double>& v);
std::vector<double> fwht(std::vector<double> v);

// Smallest length of a maximal run of equal adjacent entries.
std::size_t constancy(const std::vector<double>& v);

// Number of Hadamard columns on `bits` wires whose constancy is exactly k,
// and the number with constancy >= min_constancy.
std::uint64_t multiplicity(unsigned bits, std::uint64_t k);
std::uint64_t cumulative_multiplicity(unsigned bits, std::uint64_t min_constancy);

// Doubling constructions, one wire at a time.  Same matrices as
// build_transform / permutation_matrix of the eponymous permutations;
// kept as an independent route for consistency checks.
Mat hadamard_recursive(unsigned bits);
Mat paley_recursive(unsigned bits);
Mat walsh_recursive(unsigned bits);
Mat reversal_matrix_recursive(unsigned bits);
Mat negation_matrix_recursive(unsigned bits);
Mat reflected_code_matrix_recursive(unsigned bits);

}  // namespace mux
