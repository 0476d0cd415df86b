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

#include "mux/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <unordered_map>

#include "mux/approximator.hpp"
#include "mux/circuits.hpp"
#include "mux/search.hpp"

namespace mux {

namespace {

constexpr double kAlgebraTol = 1e-12;
constexpr double kSimTol = 1e-10;

// Accumulates the worst residual seen per named check.
class Suite {
 public:
  void add(const std::string& name, double residual, double tol) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      index_.emplace(name, results_.size());
      results_.push_back(CheckResult{name, residual, tol, residual <= tol});
    } else {
      CheckResult& r = results_[it->second];
      r.residual = std::max(r.residual, residual);
      r.passed = r.residual <= r.tolerance;
    }
  }
  // Counting flavor: residual is the number of violations.
  void count(const std::string& name, bool violated) {
    add(name, violated ? 1.0 : 0.0, 0.0);
    if (violated) {
      CheckResult& r = results_[index_.at(name)];
      r.residual = failures_[name] += 1.0;
      r.passed = false;
    }
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, double> failures_;
  std::vector<CheckResult> results_;
};

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double real() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen() % n; }
  BitPermutation perm(unsigned width) {
    std::vector<unsigned> m(width);
    for (unsigned i = 0; i < width; ++i) m[i] = i;
    for (unsigned i = width; i > 1; --i)
      std::swap(m[i - 1], m[below(i)]);
    return BitPermutation(std::move(m));
  }
  std::vector<double> phi(unsigned controls) {
    std::vector<double> v(std::size_t{1} << controls);
    for (double& x : v) x = real();
    return v;
  }
};

double two_norm_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TransformSet make_transform_set(unsigned bits) {
  TransformSet t;
  t.bits = bits;
  t.hadamard = build_transform(TransformKind::Hadamard, bits).m;
  t.paley = build_transform(TransformKind::Paley, bits).m;
  t.walsh = build_transform(TransformKind::Walsh, bits).m;
  t.reversal = permutation_matrix(BitPermutation::reversal(bits).state_map());
  const std::uint64_t n = std::uint64_t{1} << bits;
  std::vector<std::uint64_t> neg(n), gray(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    neg[x] = negate_bits(x, bits);
    gray[x] = gray_code(x);
  }
  t.negation = permutation_matrix(neg);
  t.reflected = permutation_matrix(gray);
  return t;
}

std::vector<CheckResult> identity_checks(const TransformSet& t) {
  const Mat eye = Mat::identity(std::size_t{1} << t.bits);
  std::vector<CheckResult> out;
  const auto push = [&](const std::string& name, double residual) {
    out.push_back(CheckResult{name, residual, kAlgebraTol, residual <= kAlgebraTol});
  };
  push("H H = I", max_abs_diff(t.hadamard * t.hadamard, eye));
  push("P P = I", max_abs_diff(t.paley * t.paley, eye));
  push("W W = I", max_abs_diff(t.walsh * t.walsh, eye));
  push("H piR = P", max_abs_diff(t.hadamard * t.reversal, t.paley));
  push("P piG = W", max_abs_diff(t.paley * t.reflected, t.walsh));
  push("P piG = piG^T P",
       max_abs_diff(t.paley * t.reflected, t.reflected.transposed() * t.paley));
  push("W = H piR piG",
       max_abs_diff(t.hadamard * t.reversal * t.reflected, t.walsh));
  return out;
}

std::vector<CheckResult> run_all_checks(unsigned max_bits, unsigned trials) {
  Suite suite;
  Rng rng(0x5eed);

  for (unsigned bits = 0; bits <= max_bits; ++bits) {
    const std::uint64_t n = std::uint64_t{1} << bits;
    const TransformSet t = make_transform_set(bits);

    for (const CheckResult& r : identity_checks(t))
      suite.add(r.name, r.residual, r.tolerance);

    suite.add("V(piR) = W",
              max_abs_diff(build_transform(TransformKind::Walsh, bits).m,
                           build_transform(TransformKind::PermutedWalsh, bits,
                                           BitPermutation::reversal(bits))
                               .m),
              kAlgebraTol);

    // Hadamard commutes with every bit shuffle: exhaustively to 4 wires,
    // sampled above that.
    std::vector<BitPermutation> perms;
    if (bits <= 4) {
      perms = all_permutations(bits);
    } else {
      perms.push_back(BitPermutation::identity(bits));
      perms.push_back(BitPermutation::reversal(bits));
      for (int i = 0; i < 20; ++i) perms.push_back(rng.perm(bits));
    }
    for (const BitPermutation& pi : perms) {
      const Mat pm = permutation_matrix(pi.state_map());
      suite.add("H piB = piB H",
                max_abs_diff(t.hadamard * pm, pm * t.hadamard), kAlgebraTol);
    }

    suite.add("recursive H = direct",
              max_abs_diff(hadamard_recursive(bits), t.hadamard), kAlgebraTol);
    suite.add("recursive P = direct",
              max_abs_diff(paley_recursive(bits), t.paley), kAlgebraTol);
    suite.add("recursive W = direct",
              max_abs_diff(walsh_recursive(bits), t.walsh), kAlgebraTol);
    suite.add("recursive piR = direct",
              max_abs_diff(reversal_matrix_recursive(bits), t.reversal), 0.0);
    suite.add("recursive piN = direct",
              max_abs_diff(negation_matrix_recursive(bits), t.negation), 0.0);
    suite.add("recursive piG = direct",
              max_abs_diff(reflected_code_matrix_recursive(bits), t.reflected),
              0.0);

    for (std::uint64_t k = 0; k < n; ++k) {
      suite.count("reflected code round trip",
                  inverse_gray_code(gray_code(k)) != k);
      if (k + 1 < n)
        suite.count("reflected code single-bit steps",
                    std::popcount(gray_code(k) ^ gray_code(k + 1)) != 1);
    }
    for (const BitPermutation& pi : perms) {
      const auto order = grayish_order(pi);
      bool ok = true;
      for (std::size_t i = 0; i < order.size(); ++i)
        ok = ok && std::popcount(order[i] ^ order[(i + 1) % order.size()]) ==
                       (order.size() > 1 ? 1 : 0);
      suite.count("shuffled listing keeps single-bit steps", !ok);
    }

    // Column constancies: census of the Hadamard family and ordering in
    // the sequency family.
    std::vector<std::uint64_t> census(bits + 1, 0);
    for (std::uint64_t j = 0; j < n; ++j) {
      std::vector<double> col(n);
      for (std::uint64_t k = 0; k < n; ++k) col[k] = t.hadamard(k, j);
      const std::size_t c = constancy(col);
      suite.count("hadamard column constancy is a power of two",
                  (c & (c - 1)) != 0);
      census[std::countr_zero(c)] += 1;
    }
    for (unsigned j = 0; j <= bits; ++j)
      suite.count("multiplicity matches column census",
                  census[j] != multiplicity(bits, std::uint64_t{1} << j));
    for (unsigned kept = 0; kept <= bits + 2; ++kept) {
      const std::uint64_t expect =
          kept <= bits ? (std::uint64_t{1} << (bits - kept)) : 0;
      suite.count("cumulative multiplicity = 2^(nu-nu')",
                  cumulative_multiplicity(bits, std::uint64_t{1} << kept) !=
                      expect);
    }
    std::size_t prev = std::size_t{1} << bits;
    for (std::uint64_t j = 0; j < n; ++j) {
      std::vector<double> col(n);
      for (std::uint64_t k = 0; k < n; ++k) col[k] = t.walsh(k, j);
      const std::size_t c = constancy(col);
      suite.count("walsh columns ordered by falling constancy", c > prev);
      prev = c;
    }

    // Block averaging in listing order is the truncated projector.
    for (unsigned kept = 0; kept <= bits; ++kept) {
      const std::size_t nk = std::size_t{1} << kept;
      Mat wk(n, nk);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < nk; ++c) wk(r, c) = t.walsh(r, c);
      suite.add("block-average matrix = truncated walsh projector",
                max_abs_diff(gamma_matrix(bits, kept), wk * wk.transposed()),
                kAlgebraTol);
    }
  }

  // Randomized cross-checks of the two approximant routes and the error
  // definitions.
  for (unsigned trial = 0; trial < trials; ++trial) {
    const unsigned bits = static_cast<unsigned>(rng.below(std::min(max_bits, 6u) + 1));
    const MultiplexorSpec spec = make_multiplexor(rng.phi(bits));
    const BitPermutation pi = rng.perm(bits);
    const unsigned deficit = static_cast<unsigned>(rng.below(bits + 1));

    const Approximant fast = approximate_fast(spec, pi, deficit);
    const Approximant dense = approximate(spec, pi, deficit);
    suite.add("fast route = dense projection route",
              linearized_error(fast.phi_prime, dense.phi_prime), kAlgebraTol);

    suite.add("angle transforms invert each other",
              linearized_error(spec.phi, phi_from_theta(theta_from_phi(spec.phi))),
              kAlgebraTol);

    const Approximant again =
        approximate_fast(make_multiplexor(fast.phi_prime), pi, deficit);
    suite.add("projection is idempotent",
              linearized_error(fast.phi_prime, again.phi_prime), kAlgebraTol);

    const auto [lo, hi] =
        std::minmax_element(spec.phi.begin(), spec.phi.end());
    double outside = 0.0;
    for (double v : fast.phi_prime)
      outside = std::max(outside, std::max(*lo - v, v - *hi));
    suite.add("averaged angles stay within the input range", outside,
              kAlgebraTol);
    double mean = 0.0, mean_prime = 0.0;
    for (double v : spec.phi) mean += v;
    for (double v : fast.phi_prime) mean_prime += v;
    suite.add("projection preserves the mean angle",
              std::abs(mean - mean_prime) / static_cast<double>(spec.phi.size()),
              kAlgebraTol);

    suite.count("operator error <= linearized error",
                fast.operator_error > fast.linearized_error + 1e-15);
    suite.count("linearized error <= angle range",
                fast.linearized_error > (*hi - *lo) + 1e-15);

    // In the staircase listing order the tail of theta' vanishes.
    const auto order = grayish_order(pi);
    double tail = 0.0;
    for (std::size_t t = (std::size_t{1} << (bits - deficit)); t < order.size(); ++t)
      tail = std::max(tail, std::abs(fast.theta_prime[order[t]]));
    suite.add("truncated theta tail vanishes in listing order", tail, kAlgebraTol);

    // Dropping more bits can only grow the 2-norm error (nested
    // projections), though not the max-norm error in general.
    double prev_l2 = -1.0;
    for (unsigned d = 0; d <= bits; ++d) {
      const double l2 =
          two_norm_diff(spec.phi, approximate_fast(spec, pi, d).phi_prime);
      suite.count("2-norm error non-decreasing along refinement chains",
                  l2 + kAlgebraTol < prev_l2);
      prev_l2 = l2;
    }

    if (bits == spec.controls && deficit == bits && bits > 0) {
      const Approximant other = approximate_fast(spec, rng.perm(bits), bits);
      suite.add("full truncation ignores the permutation",
                std::abs(other.linearized_error - fast.linearized_error),
                kAlgebraTol);
    }
  }

  // Staircases: round trip against the dense multiplexor, symmetry
  // operations, cancellation count law.
  const unsigned max_controls = std::min(4u, max_bits);
  for (unsigned controls = 0; controls <= max_controls; ++controls) {
    std::vector<BitPermutation> perms;
    if (controls <= 3) {
      perms = all_permutations(controls);
    } else {
      perms.push_back(BitPermutation::identity(controls));
      perms.push_back(BitPermutation::reversal(controls));
      for (int i = 0; i < 4; ++i) perms.push_back(rng.perm(controls));
    }
    for (const BitPermutation& pi : perms) {
      std::vector<double> theta(std::size_t{1} << controls);
      for (double& x : theta) x = 2.0 * rng.real() - 1.0;
      const GateSequence seq = build_seo(theta, pi, controls + 1);
      const CMat want = multiplexor_unitary(make_multiplexor(phi_from_theta(theta)));
      const CMat got = simulate(seq);
      suite.add("staircase simulates to the multiplexor (2-norm)",
                spectral_norm_diff(got, want), kSimTol);
      suite.add("time reversal preserves the simulated unitary",
                max_abs_diff(simulate(time_reverse(seq)), got), kSimTol);
      suite.add("control relabeling preserves the simulated unitary",
                max_abs_diff(simulate(permute_controls(seq, rng.perm(controls))),
                             got),
                kSimTol);
    }
  }
  for (unsigned qubits = 2; qubits <= std::min(max_bits + 1, 6u); ++qubits) {
    const unsigned controls = qubits - 1;
    const MultiplexorSpec spec = make_multiplexor(rng.phi(controls));
    for (unsigned deficit = 0; deficit < qubits; ++deficit) {
      for (const BitPermutation& pi :
           {BitPermutation::reversal(controls), rng.perm(controls)}) {
        const Approximant a = approximate_fast(spec, pi, deficit);
        const GateSequence cancelled =
            cancel_cnots(build_seo(a.theta_prime, pi, qubits));
        std::uint64_t cnots = 0;
        for (const Gate& g : cancelled.gates)
          if (std::holds_alternative<Cnot>(g)) ++cnots;
        suite.count("cancellation leaves 2^(nb-1-deficit) CNOTs",
                    cnots != cnot_count(qubits, deficit));
        if (qubits <= 6)
          suite.add("cancelled staircase still simulates the approximant",
                    max_abs_diff(simulate(cancelled),
                                 multiplexor_unitary(
                                     make_multiplexor(a.phi_prime))),
                    kSimTol);
      }
    }
  }

  // Pointwise rotation distances.
  for (unsigned trial = 0; trial < trials * 20; ++trial) {
    std::array<double, 3> a{}, b{};
    for (int i = 0; i < 3; ++i) {
      a[i] = 4.0 * rng.real() - 2.0;
      b[i] = 4.0 * rng.real() - 2.0;
    }
    const Su2Distance d = su2_distance(a, b);
    const double delta = std::sqrt((b[0] - a[0]) * (b[0] - a[0]) +
                                   (b[1] - a[1]) * (b[1] - a[1]) +
                                   (b[2] - a[2]) * (b[2] - a[2]));
    suite.count("su(2) distance bounded by |delta alpha|",
                d.two_norm > delta + 1e-12);
    suite.add("su(2) frobenius = sqrt(2) x 2-norm",
              std::abs(d.frobenius - std::sqrt(2.0) * d.two_norm), 1e-10);
  }

  // Two-axis bound dominates the exact per-block distance.
  for (unsigned trial = 0; trial < trials; ++trial) {
    const unsigned bits = 2;
    const MultiplexorSpec spec1 = make_multiplexor(rng.phi(bits));
    const MultiplexorSpec spec2 = make_multiplexor(rng.phi(bits));
    const BitPermutation pi = rng.perm(bits);
    const unsigned deficit = static_cast<unsigned>(rng.below(bits + 1));
    const auto p1 = approximate_fast(spec1, pi, deficit).phi_prime;
    const auto p2 = approximate_fast(spec2, pi, deficit).phi_prime;
    const double bound =
        generalized_error_bound(spec1.phi, p1, spec2.phi, p2);
    double dense = 0.0;
    for (std::size_t b = 0; b < spec1.phi.size(); ++b) {
      // axis order: x carries the second table, y the first
      const Su2Distance d =
          su2_distance({spec2.phi[b], spec1.phi[b], 0.0}, {p2[b], p1[b], 0.0});
      dense = std::max(dense, d.two_norm);
    }
    suite.count("two-axis bound dominates the block distance",
                dense > bound + 1e-12);
  }

  // Class representatives reproduce the error multiset of the full sweep.
  for (unsigned bits = 1; bits <= std::min(4u, max_bits); ++bits) {
    const MultiplexorSpec spec = make_multiplexor(rng.phi(bits));
    const auto perms = all_permutations(bits);
    for (unsigned deficit = 0; deficit <= bits; ++deficit) {
      std::vector<double> sweep, reps;
      for (const BitPermutation& pi : perms)
        sweep.push_back(approximate_fast(spec, pi, deficit).linearized_error);
      for (const PermutationClass& cls : class_representatives(bits, deficit))
        reps.push_back(
            approximate_fast(spec, cls.representative, deficit).linearized_error);
      std::sort(sweep.begin(), sweep.end());
      sweep.erase(std::unique(sweep.begin(), sweep.end(),
                              [](double x, double y) {
                                return std::abs(x - y) <= 1e-12;
                              }),
                  sweep.end());
      std::sort(reps.begin(), reps.end());
      reps.erase(std::unique(reps.begin(), reps.end(),
                             [](double x, double y) {
                               return std::abs(x - y) <= 1e-12;
                             }),
                 reps.end());
      bool same = sweep.size() == reps.size();
      for (std::size_t i = 0; same && i < sweep.size(); ++i)
        same = std::abs(sweep[i] - reps[i]) <= 1e-12;
      suite.count("class representatives cover the error sweep", !same);
    }
  }

  return suite.take();
}

}  // namespace mux
