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

#include "mux/approximator.hpp"
#include "mux/bitcodes.hpp"

namespace mux {

inline constexpr unsigned kDefaultMaxEnumerationBits = 8;

// All width! bit permutations, ordered lexicographically by their 1-based
// tuple notation.
std::vector<BitPermutation> all_permutations(
    unsigned width, unsigned max_bits = kDefaultMaxEnumerationBits);

// The approximation error depends on a permutation only through which
// control bits it drops, so one representative per dropped-bit subset
// covers every permutation.  Representatives keep the surviving bits in
// ascending order.
struct PermutationClass {
  std::vector<unsigned> dropped_bits;  // ascending, size = deficit
  BitPermutation representative;
};

std::vector<PermutationClass> class_representatives(unsigned width,
                                                    unsigned deficit);

enum class Criterion {
  Dominant,          // least linearized error over all classes
  HighConstancies,   // bit reversal: keeps the smoothest basis columns
  LowConstancies,    // identity permutation
};

Approximant best_permutation(const MultiplexorSpec& spec, unsigned deficit,
                             Criterion criterion);

struct ParetoRow {
  unsigned deficit = 0;
  std::vector<unsigned> dropped_bits;
  BitPermutation permutation;
  std::uint64_t cnots = 0;
  double linearized_error = 0.0;
  double operator_error = 0.0;
};

// One dominant row per deficit 0..controls: the CNOT/error trade-off curve.
std::vector<ParetoRow> pareto_table(const MultiplexorSpec& spec);

// Query the curve in either direction.  Null when no row qualifies.
const ParetoRow* min_cnots_within_error(const std::vector<ParetoRow>& table,
                                        double max_error);
const ParetoRow* min_error_within_cnots(const std::vector<ParetoRow>& table,
                                        std::uint64_t max_cnots);

}  // namespace mux
