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

#include <string>
#include <vector>

#include "mux/matrix.hpp"
#include "mux/transforms.hpp"

namespace mux {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// The transform family on one wire count, built once and checked together.
struct TransformSet {
  unsigned bits = 0;
  Mat hadamard, paley, walsh;
  Mat reversal, negation, reflected;  // permutation matrices
};

TransformSet make_transform_set(unsigned bits);

// Algebraic identities among one TransformSet's members.  Exposed with the
// matrices as inputs so a corrupted matrix demonstrably fails its check.
std::vector<CheckResult> identity_checks(const TransformSet& t);

// Full suite: identities, recursions, code properties, block-average
// equivalence, staircase round trips, cancellation counts, error bounds.
// `trials` scales the randomized parts.
std::vector<CheckResult> run_all_checks(unsigned max_bits, unsigned trials = 50);

}  // namespace mux
