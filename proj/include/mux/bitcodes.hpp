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

namespace mux {

// Reflected binary (Gray) code of k, and its inverse. Bit 0 is the least
// significant bit throughout this library.
std::uint64_t gray_code(std::uint64_t k);
std::uint64_t inverse_gray_code(std::uint64_t g);

// Reverse / complement the low `width` bits of x.
std::uint64_t reverse_bits(std::uint64_t x, unsigned width);
std::uint64_t negate_bits(std::uint64_t x, unsigned width);

// Permutation of bit positions {0..width-1}.  Extended to basis-state
// indices by bit gather: bit a of apply_to_state(x) is bit map(a) of x.
class BitPermutation {
 public:
  BitPermutation() = default;
  explicit BitPermutation(std::vector<unsigned> images);

  static BitPermutation identity(unsigned width);
  static BitPermutation reversal(unsigned width);  // a -> width-1-a

  // One-line tuple notation used in tool output: entry j of the 1-based
  // tuple names the source position, counting positions and values from
  // the most significant bit.  (width,...,2,1) is reversal(); the tuple
  // (1,2,...,width) is the identity.
  static BitPermutation from_tuple(const std::vector<unsigned>& tuple);
  std::vector<unsigned> to_tuple() const;

  unsigned width() const { return static_cast<unsigned>(map_.size()); }
  unsigned operator()(unsigned pos) const { return map_[pos]; }
  BitPermutation inverse() const;

  std::uint64_t apply_to_state(std::uint64_t x) const;
  // Images of all 2^width states, in state order.
  std::vector<std::uint64_t> state_map() const;

  bool operator==(const BitPermutation& o) const { return map_ == o.map_; }

 private:
  std::vector<unsigned> map_;
};

// States 0..2^width-1 listed in the permuted reflected order: entry t is
// pi.apply_to_state(gray_code(t)).  With the identity permutation this is
// the plain Gray sequence; with reversal() it is the order in which a
// rotation staircase visits its control words.
std::vector<std::uint64_t> grayish_order(const BitPermutation& pi);

}  // namespace mux
