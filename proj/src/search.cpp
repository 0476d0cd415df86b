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

#include "mux/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mux {

std::vector<BitPermutation> all_permutations(unsigned width, unsigned max_bits) {
  if (width > max_bits)
    throw std::invalid_argument("exhaustive enumeration exceeds configured cap");
  std::vector<unsigned> tuple(width);
  for (unsigned i = 0; i < width; ++i) tuple[i] = i + 1;
  std::vector<BitPermutation> out;
  do {
    out.push_back(BitPermutation::from_tuple(tuple));
  } while (std::next_permutation(tuple.begin(), tuple.end()));
  return out;
}

std::vector<PermutationClass> class_representatives(unsigned width,
                                                    unsigned deficit) {
  if (deficit > width)
    throw std::invalid_argument("deficit exceeds control count");
  const unsigned survivors = width - deficit;
  std::vector<PermutationClass> out;
  // Subsets in ascending bitmask order keeps the listing deterministic.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != deficit) continue;
    PermutationClass cls;
    std::vector<unsigned> images(width);
    unsigned next_dropped = survivors;
    unsigned next_survivor = 0;
    for (unsigned a = 0; a < width; ++a) {
      if (mask & (std::uint64_t{1} << a)) {
        cls.dropped_bits.push_back(a);
        images[a] = next_dropped++;
      } else {
        images[a] = next_survivor++;
      }
    }
    cls.representative = BitPermutation(std::move(images));
    out.push_back(std::move(cls));
  }
  return out;
}

Approximant best_permutation(const MultiplexorSpec& spec, unsigned deficit,
                             Criterion criterion) {
  switch (criterion) {
    case Criterion::HighConstancies:
      return approximate_fast(spec, BitPermutation::reversal(spec.controls),
                              deficit);
    case Criterion::LowConstancies:
      return approximate_fast(spec, BitPermutation::identity(spec.controls),
                              deficit);
    case Criterion::Dominant:
      break;
  }
  const auto classes = class_representatives(spec.controls, deficit);
  Approximant best;
  bool first = true;
  for (const PermutationClass& cls : classes) {
    Approximant a = approximate_fast(spec, cls.representative, deficit);
    // Strict comparison keeps the earliest class on ties.
    if (first || a.linearized_error < best.linearized_error) {
      best = std::move(a);
      first = false;
    }
  }
  return best;
}

std::vector<ParetoRow> pareto_table(const MultiplexorSpec& spec) {
  std::vector<ParetoRow> table;
  for (unsigned deficit = 0; deficit <= spec.controls; ++deficit) {
    const auto classes = class_representatives(spec.controls, deficit);
    const PermutationClass* best_cls = nullptr;
    Approximant best;
    for (const PermutationClass& cls : classes) {
      Approximant a = approximate_fast(spec, cls.representative, deficit);
      if (best_cls == nullptr || a.linearized_error < best.linearized_error) {
        best = std::move(a);
        best_cls = &cls;
      }
    }
    ParetoRow row;
    row.deficit = deficit;
    row.dropped_bits = best_cls->dropped_bits;
    row.permutation = best.permutation;
    row.cnots = best.cnots;
    row.linearized_error = best.linearized_error;
    row.operator_error = best.operator_error;
    table.push_back(std::move(row));
  }
  return table;
}

const ParetoRow* min_cnots_within_error(const std::vector<ParetoRow>& table,
                                        double max_error) {
  const ParetoRow* best = nullptr;
  for (const ParetoRow& row : table) {
    if (row.linearized_error > max_error) continue;
    if (best == nullptr || row.cnots < best->cnots) best = &row;
  }
  return best;
}

const ParetoRow* min_error_within_cnots(const std::vector<ParetoRow>& table,
                                        std::uint64_t max_cnots) {
  const ParetoRow* best = nullptr;
  for (const ParetoRow& row : table) {
    if (row.cnots > max_cnots) continue;
    if (best == nullptr || row.linearized_error < best->linearized_error)
      best = &row;
  }
  return best;
}

}  // namespace mux
