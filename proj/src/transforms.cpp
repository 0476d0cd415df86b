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

#include "mux/transforms.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace mux {

namespace {

double parity_sign(std::uint64_t x) {
  return (std::popcount(x) & 1) ? -1.0 : 1.0;
}

void check_bits(unsigned bits, unsigned max_bits) {
  if (bits > max_bits)
    throw std::invalid_argument("transform size exceeds configured cap");
}

// Column g of the Hadamard matrix placed into column j of out.
void fill_signed_column(Mat& out, std::size_t j, std::uint64_t g, double scale) {
  for (std::size_t k = 0; k < out.rows(); ++k)
    out(k, j) = scale * parity_sign(k & g);
}

}  // namespace

TransformMatrix build_transform(TransformKind kind, unsigned bits, unsigned max_bits) {
  if (kind == TransformKind::PermutedWalsh)
    throw std::invalid_argument("PermutedWalsh requires a bit permutation");
  return build_transform(kind, bits, BitPermutation::identity(bits), max_bits);
}

TransformMatrix build_transform(TransformKind kind, unsigned bits,
                                const BitPermutation& pi, unsigned max_bits) {
  check_bits(bits, max_bits);
  if (kind == TransformKind::PermutedWalsh && pi.width() != bits)
    throw std::invalid_argument("bit permutation width mismatch");
  const std::size_t n = std::size_t{1} << bits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t g = j;
    switch (kind) {
      case TransformKind::Hadamard:
        break;
      case TransformKind::Paley:
        g = reverse_bits(j, bits);
        break;
      case TransformKind::Walsh:
        g = reverse_bits(gray_code(j), bits);
        break;
      case TransformKind::PermutedWalsh:
        g = pi.apply_to_state(gray_code(j));
        break;
    }
    fill_signed_column(m, j, g, scale);
  }
  return TransformMatrix{kind, bits, std::move(m)};
}

Mat permutation_matrix(const std::vector<std::uint64_t>& images) {
  const std::size_t n = images.size();
  Mat m(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (images[x] >= n)
      throw std::invalid_argument("permutation_matrix: image out of range");
    m(images[x], x) = 1.0;
  }
  return m;
}

void fwht_inplace(std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fwht: length must be a power of two");
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double x = v[j];
        const double y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (double& x : v) x *= scale;
}

std::vector<double> fwht(std::vector<double> v) {
  fwht_inplace(v);
  return v;
}

std::size_t constancy(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("constancy: empty vector");
  std::size_t best = v.size();
  std::size_t run = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] == v[i - 1]) {
      ++run;
    } else {
      if (run < best) best = run;
      run = 1;
    }
  }
  return run < best ? run : best;
}

std::uint64_t multiplicity(unsigned bits, std::uint64_t k) {
  if (k == 0 || (k & (k - 1)) != 0) return 0;  // constancies are powers of two
  const unsigned j = static_cast<unsigned>(std::countr_zero(k));
  if (j > bits) return 0;
  if (j == bits) return 1;  // the constant column
  return std::uint64_t{1} << (bits - 1 - j);
}

std::uint64_t cumulative_multiplicity(unsigned bits, std::uint64_t min_constancy) {
  std::uint64_t total = 0;
  for (unsigned j = 0; j <= bits; ++j) {
    const std::uint64_t k = std::uint64_t{1} << j;
    if (k >= min_constancy) total += multiplicity(bits, k);
  }
  return total;
}

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// One doubling step shared by the Paley and Walsh recursions:
// stack [top (x) (1,1); bottom (x) (1,-1)] / sqrt(2).
Mat stack_expand(const Mat& top, const Mat& bottom) {
  const std::size_t n = top.rows();
  Mat out(2 * n, 2 * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) {
      out(k, 2 * r) = kInvSqrt2 * top(k, r);
      out(k, 2 * r + 1) = kInvSqrt2 * top(k, r);
      out(n + k, 2 * r) = kInvSqrt2 * bottom(k, r);
      out(n + k, 2 * r + 1) = -kInvSqrt2 * bottom(k, r);
    }
  return out;
}

}  // namespace

Mat hadamard_recursive(unsigned bits) {
  Mat m = Mat::identity(1);
  for (unsigned v = 0; v < bits; ++v) {
    const std::size_t n = m.rows();
    Mat next(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r)
        for (unsigned i = 0; i < 2; ++i)
          for (unsigned j = 0; j < 2; ++j)
            next(2 * k + i, 2 * r + j) =
                m(k, r) * kInvSqrt2 * ((i & j) ? -1.0 : 1.0);
    m = std::move(next);
  }
  return m;
}

Mat paley_recursive(unsigned bits) {
  Mat m = Mat::identity(1);
  for (unsigned v = 0; v < bits; ++v) m = stack_expand(m, m);
  return m;
}

Mat walsh_recursive(unsigned bits) {
  Mat m = Mat::identity(1);
  for (unsigned v = 0; v < bits; ++v)
    m = stack_expand(m, negation_matrix_recursive(v) * m);
  return m;
}

Mat reversal_matrix_recursive(unsigned bits) {
  Mat m = Mat::identity(1);
  for (unsigned v = 0; v < bits; ++v) {
    const std::size_t n = m.rows();
    Mat next(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) {
        next(k, 2 * r) = m(k, r);
        next(n + k, 2 * r + 1) = m(k, r);
      }
    m = std::move(next);
  }
  return m;
}

Mat negation_matrix_recursive(unsigned bits) {
  Mat m = Mat::identity(1);
  for (unsigned v = 0; v < bits; ++v) {
    const std::size_t n = m.rows();
    Mat next(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) {
        next(2 * k, 2 * r + 1) = m(k, r);
        next(2 * k + 1, 2 * r) = m(k, r);
      }
    m = std::move(next);
  }
  return m;
}

Mat reflected_code_matrix_recursive(unsigned bits) {
  Mat m = Mat::identity(1);
  for (unsigned v = 0; v < bits; ++v) {
    const std::size_t n = m.rows();
    const Mat lower = m * negation_matrix_recursive(v);
    Mat next(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) {
        next(k, r) = m(k, r);
        next(n + k, n + r) = lower(k, r);
      }
    m = std::move(next);
  }
  return m;
}

}  // namespace mux
