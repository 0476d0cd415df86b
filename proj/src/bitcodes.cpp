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

#include "mux/bitcodes.hpp"

#include <algorithm>
#include <stdexcept>

namespace mux {

namespace {

void check_width(unsigned width) {
  if (width > 63) throw std::invalid_argument("bit width must be <= 63");
}

}  // namespace

std::uint64_t gray_code(std::uint64_t k) { return k ^ (k >> 1); }

std::uint64_t inverse_gray_code(std::uint64_t g) {
  std::uint64_t k = g;
  for (unsigned s = 1; s < 64; s <<= 1) k ^= k >> s;
  return k;
}

std::uint64_t reverse_bits(std::uint64_t x, unsigned width) {
  check_width(width);
  std::uint64_t r = 0;
  for (unsigned i = 0; i < width; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

std::uint64_t negate_bits(std::uint64_t x, unsigned width) {
  check_width(width);
  return x ^ ((std::uint64_t{1} << width) - 1);
}

BitPermutation::BitPermutation(std::vector<unsigned> images) : map_(std::move(images)) {
  check_width(width());
  std::vector<bool> seen(map_.size(), false);
  for (unsigned v : map_) {
    if (v >= map_.size() || seen[v])
      throw std::invalid_argument("BitPermutation: images must be a bijection");
    seen[v] = true;
  }
}

BitPermutation BitPermutation::identity(unsigned width) {
  std::vector<unsigned> m(width);
  for (unsigned i = 0; i < width; ++i) m[i] = i;
  return BitPermutation(std::move(m));
}

BitPermutation BitPermutation::reversal(unsigned width) {
  std::vector<unsigned> m(width);
  for (unsigned i = 0; i < width; ++i) m[i] = width - 1 - i;
  return BitPermutation(std::move(m));
}

BitPermutation BitPermutation::from_tuple(const std::vector<unsigned>& tuple) {
  const unsigned n = static_cast<unsigned>(tuple.size());
  std::vector<unsigned> m(n);
  for (unsigned j = 0; j < n; ++j) {
    if (tuple[j] < 1 || tuple[j] > n)
      throw std::invalid_argument("permutation tuple entries must lie in 1..width");
    m[n - 1 - j] = n - tuple[j];
  }
  return BitPermutation(std::move(m));
}

std::vector<unsigned> BitPermutation::to_tuple() const {
  const unsigned n = width();
  std::vector<unsigned> t(n);
  for (unsigned j = 0; j < n; ++j) t[j] = n - map_[n - 1 - j];
  return t;
}

BitPermutation BitPermutation::inverse() const {
  std::vector<unsigned> inv(map_.size());
  for (unsigned i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return BitPermutation(std::move(inv));
}

std::uint64_t BitPermutation::apply_to_state(std::uint64_t x) const {
  std::uint64_t y = 0;
  for (unsigned a = 0; a < map_.size(); ++a)
    y |= ((x >> map_[a]) & 1) << a;
  return y;
}

std::vector<std::uint64_t> BitPermutation::state_map() const {
  const std::uint64_t n = std::uint64_t{1} << width();
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t x = 0; x < n; ++x) out[x] = apply_to_state(x);
  return out;
}

std::vector<std::uint64_t> grayish_order(const BitPermutation& pi) {
  const std::uint64_t n = std::uint64_t{1} << pi.width();
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t t = 0; t < n; ++t) out[t] = pi.apply_to_state(gray_code(t));
  return out;
}

}  // namespace mux
