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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mux/bitcodes.hpp"
#include "mux/transforms.hpp"
#include "oracles.hpp"

using mux::BitPermutation;
using mux::Mat;
using mux::TransformKind;

namespace {

// +1/-1 sign pattern of a built transform, row-major.
std::vector<int> signs(const Mat& m) {
  std::vector<int> s;
  s.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.push_back(m(r, c) > 0 ? 1 : -1);
  return s;
}

constexpr double kTol = 1e-12;

}  // namespace

TEST_CASE("frozen 3-bit Hadamard sign pattern") {
  const Mat h = mux::build_transform(TransformKind::Hadamard, 3).m;
  const int want[8][8] = {
      {1, 1, 1, 1, 1, 1, 1, 1},      {1, -1, 1, -1, 1, -1, 1, -1},
      {1, 1, -1, -1, 1, 1, -1, -1},  {1, -1, -1, 1, 1, -1, -1, 1},
      {1, 1, 1, 1, -1, -1, -1, -1},  {1, -1, 1, -1, -1, 1, -1, 1},
      {1, 1, -1, -1, -1, -1, 1, 1},  {1, -1, -1, 1, -1, 1, 1, -1}};
  const double w = 1.0 / std::sqrt(8.0);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      CHECK(h(r, c) == doctest::Approx(want[r][c] * w).epsilon(1e-14));
}

TEST_CASE("frozen 2-bit sign patterns of all three orderings") {
  const std::vector<int> h{1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1};
  const std::vector<int> p{1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1};
  const std::vector<int> w{1, 1, 1, 1, 1, 1, -1, -1, 1, -1, -1, 1, 1, -1, 1, -1};
  CHECK(signs(mux::build_transform(TransformKind::Hadamard, 2).m) == h);
  CHECK(signs(mux::build_transform(TransformKind::Paley, 2).m) == p);
  CHECK(signs(mux::build_transform(TransformKind::Walsh, 2).m) == w);
}

TEST_CASE("column orderings: reversal for Paley, reversed reflected for Walsh") {
  for (unsigned bits = 0; bits <= 5; ++bits) {
    const Mat h = mux::build_transform(TransformKind::Hadamard, bits).m;
    const Mat p = mux::build_transform(TransformKind::Paley, bits).m;
    const Mat w = mux::build_transform(TransformKind::Walsh, bits).m;
    const std::uint64_t n = std::uint64_t{1} << bits;
    for (std::uint64_t j = 0; j < n; ++j) {
      const std::uint64_t pj = mux::reverse_bits(j, bits);
      const std::uint64_t wj = mux::reverse_bits(mux::gray_code(j), bits);
      for (std::uint64_t r = 0; r < n; ++r) {
        CHECK(p(r, j) == h(r, pj));
        CHECK(w(r, j) == h(r, wj));
      }
    }
  }
}

TEST_CASE("permuted-Walsh columns follow the wire shuffle") {
  oracles::Rng rng(17);
  for (unsigned bits = 0; bits <= 5; ++bits) {
    const BitPermutation pi = rng.perm(bits);
    const Mat h = mux::build_transform(TransformKind::Hadamard, bits).m;
    const Mat v =
        mux::build_transform(TransformKind::PermutedWalsh, bits, pi).m;
    const std::uint64_t n = std::uint64_t{1} << bits;
    for (std::uint64_t j = 0; j < n; ++j) {
      const std::uint64_t vj = pi.apply_to_state(mux::gray_code(j));
      for (std::uint64_t r = 0; r < n; ++r) CHECK(v(r, j) == h(r, vj));
    }
    // Reversal specializes the permuted family to the sequency ordering.
    const Mat w = mux::build_transform(TransformKind::Walsh, bits).m;
    const Mat vr = mux::build_transform(TransformKind::PermutedWalsh, bits,
                                        BitPermutation::reversal(bits))
                       .m;
    CHECK(mux::max_abs_diff(w, vr) <= kTol);
  }
}

TEST_CASE("transform size cap") {
  CHECK_THROWS_AS(mux::build_transform(TransformKind::Hadamard, 13),
                  std::invalid_argument);
  CHECK_NOTHROW(mux::build_transform(TransformKind::Hadamard, 3, 3));
  CHECK_THROWS_AS(mux::build_transform(TransformKind::Hadamard, 4, 3),
                  std::invalid_argument);
}

TEST_CASE("permutation matrix places a single one per column") {
  const Mat m = mux::permutation_matrix({2, 0, 1});
  CHECK(m(2, 0) == 1.0);
  CHECK(m(0, 1) == 1.0);
  CHECK(m(1, 2) == 1.0);
  double total = 0.0;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) total += m(r, c);
  CHECK(total == 3.0);
}

TEST_CASE("butterfly transform equals the quadratic sign sum") {
  oracles::Rng rng(23);
  for (unsigned bits = 0; bits <= 8; ++bits) {
    std::vector<double> v(std::size_t{1} << bits);
    for (double& x : v) x = 2.0 * rng.real() - 1.0;
    const auto fast = mux::fwht(v);
    const auto slow = oracles::naive_sign_transform(v);
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-12));
    // Involution at this normalization.
    const auto twice = mux::fwht(fast);
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(twice[i] == doctest::Approx(v[i]).epsilon(1e-12));
  }
}

TEST_CASE("butterfly transform rejects non-power-of-two lengths") {
  std::vector<double> v(3, 1.0);
  CHECK_THROWS_AS(mux::fwht_inplace(v), std::invalid_argument);
}

TEST_CASE("constancy: frozen examples and edge cases") {
  CHECK(mux::constancy({1, -1, 1, 1}) == 1);
  CHECK(mux::constancy({1, 1, -1, -1}) == 2);
  CHECK(mux::constancy({1, 1, 1, 1}) == 4);
  CHECK(mux::constancy({1}) == 1);
  CHECK_THROWS_AS(mux::constancy({}), std::invalid_argument);
}

TEST_CASE("constancy census of Hadamard columns, frozen rows") {
  // rows: wire count 1..3; columns: run length 1, 2, 4, 8
  const std::uint64_t want[3][4] = {{1, 1, 0, 0}, {2, 1, 1, 0}, {4, 2, 1, 1}};
  for (unsigned bits = 1; bits <= 3; ++bits)
    for (unsigned j = 0; j < 4; ++j)
      CHECK(mux::multiplicity(bits, std::uint64_t{1} << j) ==
            want[bits - 1][j]);
  CHECK(mux::multiplicity(4, 3) == 0);  // only powers of two occur
  CHECK(mux::multiplicity(3, 16) == 0);
}

TEST_CASE("multiplicity matches a brute-force column census") {
  for (unsigned bits = 0; bits <= 6; ++bits) {
    const Mat h = mux::build_transform(TransformKind::Hadamard, bits).m;
    const std::uint64_t n = std::uint64_t{1} << bits;
    std::vector<std::uint64_t> census(bits + 1, 0);
    for (std::uint64_t j = 0; j < n; ++j) {
      std::vector<double> col(n);
      for (std::uint64_t r = 0; r < n; ++r) col[r] = h(r, j);
      const std::size_t c = mux::constancy(col);
      CHECK((c & (c - 1)) == 0);
      census[std::countr_zero(c)] += 1;
    }
    for (unsigned j = 0; j <= bits; ++j)
      CHECK(census[j] == mux::multiplicity(bits, std::uint64_t{1} << j));
  }
}

TEST_CASE("cumulative multiplicity: frozen rows and closed form") {
  const std::uint64_t want[3][4] = {{2, 1, 0, 0}, {4, 2, 1, 0}, {8, 4, 2, 1}};
  for (unsigned bits = 1; bits <= 3; ++bits)
    for (unsigned j = 0; j < 4; ++j)
      CHECK(mux::cumulative_multiplicity(bits, std::uint64_t{1} << j) ==
            want[bits - 1][j]);
  for (unsigned bits = 0; bits <= 6; ++bits)
    for (unsigned kept = 0; kept <= 8; ++kept)
      CHECK(mux::cumulative_multiplicity(bits, std::uint64_t{1} << kept) ==
            (kept <= bits ? std::uint64_t{1} << (bits - kept) : 0));
}

TEST_CASE("sequency ordering lists columns by non-increasing constancy") {
  for (unsigned bits = 0; bits <= 6; ++bits) {
    const Mat w = mux::build_transform(TransformKind::Walsh, bits).m;
    const std::uint64_t n = std::uint64_t{1} << bits;
    std::size_t prev = n;
    for (std::uint64_t j = 0; j < n; ++j) {
      std::vector<double> col(n);
      for (std::uint64_t r = 0; r < n; ++r) col[r] = w(r, j);
      const std::size_t c = mux::constancy(col);
      CHECK(c <= prev);
      prev = c;
    }
  }
}

TEST_CASE("doubling recursions reproduce the direct constructions") {
  for (unsigned bits = 0; bits <= 6; ++bits) {
    CHECK(mux::max_abs_diff(
              mux::hadamard_recursive(bits),
              mux::build_transform(TransformKind::Hadamard, bits).m) <= kTol);
    CHECK(mux::max_abs_diff(
              mux::paley_recursive(bits),
              mux::build_transform(TransformKind::Paley, bits).m) <= kTol);
    CHECK(mux::max_abs_diff(
              mux::walsh_recursive(bits),
              mux::build_transform(TransformKind::Walsh, bits).m) <= kTol);
    const std::uint64_t n = std::uint64_t{1} << bits;
    std::vector<std::uint64_t> neg(n), gray(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      neg[x] = mux::negate_bits(x, bits);
      gray[x] = mux::gray_code(x);
    }
    CHECK(mux::max_abs_diff(
              mux::reversal_matrix_recursive(bits),
              mux::permutation_matrix(
                  BitPermutation::reversal(bits).state_map())) == 0.0);
    CHECK(mux::max_abs_diff(mux::negation_matrix_recursive(bits),
                            mux::permutation_matrix(neg)) == 0.0);
    CHECK(mux::max_abs_diff(mux::reflected_code_matrix_recursive(bits),
                            mux::permutation_matrix(gray)) == 0.0);
  }
}
