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

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "doctest.h"
#include "mux/approximator.hpp"
#include "mux/circuits.hpp"
#include "oracles.hpp"

using mux::BitPermutation;
using mux::Cnot;
using mux::GateSequence;
using mux::RotY;

namespace {

constexpr double kSimTol = 1e-10;

bool is_rot(const mux::Gate& g, unsigned target, double angle) {
  const RotY* r = std::get_if<RotY>(&g);
  return r && r->target == target && r->angle == angle;
}
bool is_cnot(const mux::Gate& g, unsigned control, unsigned target) {
  const Cnot* c = std::get_if<Cnot>(&g);
  return c && c->control == control && c->target == target;
}
std::size_t count_cnots(const GateSequence& seq) {
  std::size_t n = 0;
  for (const auto& g : seq.gates) n += std::holds_alternative<Cnot>(g);
  return n;
}

}  // namespace

TEST_CASE("multiplexor unitary matches the series-exponential blocks") {
  oracles::Rng rng(29);
  for (unsigned controls = 0; controls <= 3; ++controls) {
    const auto spec = mux::make_multiplexor(rng.phi(controls));
    const mux::CMat u = mux::multiplexor_unitary(spec);
    const mux::CMat v = oracles::multiplexor_by_series(spec);
    CHECK(mux::max_abs_diff(u, v) <= 1e-13);
    CHECK(mux::max_abs_diff(u.adjoint() * u, mux::CMat::identity(u.dim())) <=
          1e-13);
  }
}

TEST_CASE("multiplexor unitary honours the qubit cap") {
  const auto spec = mux::make_multiplexor(std::vector<double>(16, 0.1));
  CHECK_THROWS_AS(mux::multiplexor_unitary(spec, 3), std::invalid_argument);
  CHECK_NOTHROW(mux::multiplexor_unitary(spec, 5));
}

TEST_CASE("one-control staircase: frozen gate list and simulation") {
  const std::vector<double> phi{0.8, 0.2};
  const auto theta = mux::theta_from_phi(phi);
  const GateSequence seq =
      mux::build_seo(theta, BitPermutation::identity(1), 2);
  REQUIRE(seq.gates.size() == 4);
  CHECK(is_rot(seq.gates[0], 1, theta[0]));
  CHECK(is_cnot(seq.gates[1], 0, 1));
  CHECK(is_rot(seq.gates[2], 1, theta[1]));
  CHECK(is_cnot(seq.gates[3], 0, 1));
  CHECK(mux::max_abs_diff(mux::simulate(seq),
                          mux::multiplexor_unitary(mux::make_multiplexor(phi)))
        <= 1e-14);
}

TEST_CASE("two-control staircase under the wire swap: frozen order") {
  // Listing 00,10,11,01: angle subscripts 0,2,3,1 with controls 1,0,1,0.
  const std::vector<double> theta{0.1, 0.2, 0.3, 0.4};
  const GateSequence seq =
      mux::build_seo(theta, BitPermutation::from_tuple({2, 1}), 3);
  REQUIRE(seq.gates.size() == 8);
  CHECK(is_rot(seq.gates[0], 2, theta[0]));
  CHECK(is_cnot(seq.gates[1], 1, 2));
  CHECK(is_rot(seq.gates[2], 2, theta[2]));
  CHECK(is_cnot(seq.gates[3], 0, 2));
  CHECK(is_rot(seq.gates[4], 2, theta[3]));
  CHECK(is_cnot(seq.gates[5], 1, 2));
  CHECK(is_rot(seq.gates[6], 2, theta[1]));
  CHECK(is_cnot(seq.gates[7], 0, 2));
}

TEST_CASE("zero-control staircase is a bare rotation") {
  const GateSequence seq =
      mux::build_seo({0.7}, BitPermutation::identity(0), 1);
  REQUIRE(seq.gates.size() == 1);
  CHECK(is_rot(seq.gates[0], 0, 0.7));
}

TEST_CASE("staircases simulate the multiplexor for every permutation") {
  oracles::Rng rng(31);
  for (unsigned controls = 0; controls <= 3; ++controls) {
    const auto phi = rng.phi(controls);
    const auto theta = mux::theta_from_phi(phi);
    const mux::CMat want =
        mux::multiplexor_unitary(mux::make_multiplexor(phi));
    std::vector<unsigned> tuple(controls);
    for (unsigned i = 0; i < controls; ++i) tuple[i] = i + 1;
    do {
      const GateSequence seq = mux::build_seo(
          theta, BitPermutation::from_tuple(tuple), controls + 1);
      CHECK(mux::spectral_norm_diff(mux::simulate(seq), want) <= kSimTol);
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  }
}

TEST_CASE("staircase with idle middle wires") {
  // One control on wire 0, target on wire 2, wire 1 untouched.
  const std::vector<double> phi{0.8, 0.2};
  const GateSequence seq = mux::build_seo(mux::theta_from_phi(phi),
                                          BitPermutation::identity(1), 3);
  const mux::CMat got = mux::simulate(seq);
  mux::CMat want(8);
  const double c0 = std::cos(phi[0]), s0 = std::sin(phi[0]);
  const double c1 = std::cos(phi[1]), s1 = std::sin(phi[1]);
  for (std::size_t m = 0; m < 2; ++m) {
    for (std::size_t b = 0; b < 2; ++b) {
      const double c = b ? c1 : c0, s = b ? s1 : s0;
      const std::size_t lo = 2 * m + b, hi = 4 + 2 * m + b;
      want(lo, lo) = c;
      want(lo, hi) = s;
      want(hi, lo) = -s;
      want(hi, hi) = c;
    }
  }
  CHECK(mux::max_abs_diff(got, want) <= 1e-14);
}

TEST_CASE("staircase argument validation") {
  CHECK_THROWS_AS(
      mux::build_seo({0.1, 0.2, 0.3}, BitPermutation::identity(2), 3),
      std::invalid_argument);
  CHECK_THROWS_AS(
      mux::build_seo({0.1, 0.2}, BitPermutation::identity(2), 3),
      std::invalid_argument);
  CHECK_THROWS_AS(
      mux::build_seo({0.1, 0.2}, BitPermutation::identity(1), 1),
      std::invalid_argument);
}

TEST_CASE("time reversal mirrors the gate list and keeps the unitary") {
  const std::vector<double> phi{0.8, 0.2};
  const auto theta = mux::theta_from_phi(phi);
  const GateSequence seq =
      mux::build_seo(theta, BitPermutation::identity(1), 2);
  const GateSequence rev = mux::time_reverse(seq);
  REQUIRE(rev.gates.size() == 4);
  CHECK(is_cnot(rev.gates[0], 0, 1));
  CHECK(is_rot(rev.gates[1], 1, theta[1]));
  CHECK(is_cnot(rev.gates[2], 0, 1));
  CHECK(is_rot(rev.gates[3], 1, theta[0]));
  CHECK(mux::max_abs_diff(mux::simulate(rev), mux::simulate(seq)) <= 1e-14);
  // Involution.
  const GateSequence twice = mux::time_reverse(rev);
  for (std::size_t i = 0; i < seq.gates.size(); ++i)
    CHECK(seq.gates[i] == twice.gates[i]);
}

TEST_CASE("control relabeling composes the wire shuffle into the listing") {
  oracles::Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned controls = 3;
    std::vector<double> theta(8);
    for (double& x : theta) x = 2.0 * rng.real() - 1.0;
    const BitPermutation sigma = rng.perm(controls);
    const BitPermutation pi = rng.perm(controls);
    const GateSequence seq = mux::build_seo(theta, sigma, controls + 1);
    const GateSequence got = mux::permute_controls(seq, pi);
    // Expected: the staircase whose wire map sends a to sigma(pi^-1(a)).
    const BitPermutation inv = pi.inverse();
    std::vector<unsigned> images(controls);
    for (unsigned a = 0; a < controls; ++a) images[a] = sigma(inv(a));
    const GateSequence want =
        mux::build_seo(theta, BitPermutation(std::move(images)), controls + 1);
    REQUIRE(got.gates.size() == want.gates.size());
    for (std::size_t i = 0; i < got.gates.size(); ++i)
      CHECK(got.gates[i] == want.gates[i]);
    CHECK(mux::max_abs_diff(mux::simulate(got), mux::simulate(seq)) <=
          kSimTol);
  }
}

TEST_CASE("control relabeling with the identity is a no-op") {
  const GateSequence seq = mux::build_seo(
      {0.1, 0.2, 0.3, 0.4}, BitPermutation::reversal(2), 3);
  const GateSequence same =
      mux::permute_controls(seq, BitPermutation::identity(2));
  for (std::size_t i = 0; i < seq.gates.size(); ++i)
    CHECK(seq.gates[i] == same.gates[i]);
}

TEST_CASE("control relabeling rejects open subscript sets") {
  // A lone CNOT plus rotation is not a closed staircase under a swap.
  GateSequence seq;
  seq.qubits = 3;
  seq.gates = {RotY{2, 0.4}, Cnot{0, 2}};
  CHECK_THROWS_AS(
      mux::permute_controls(seq, BitPermutation::from_tuple({2, 1})),
      std::invalid_argument);
}

TEST_CASE("cancellation: parity of commuting CNOT runs") {
  // Run C0 C1 C0 on one target: C0 appears twice and drops out.
  GateSequence seq;
  seq.qubits = 3;
  seq.gates = {RotY{2, 1.0}, Cnot{0, 2}, Cnot{1, 2}, Cnot{0, 2}};
  const GateSequence out = mux::cancel_cnots(seq);
  REQUIRE(out.gates.size() == 2);
  CHECK(is_rot(out.gates[0], 2, 1.0));
  CHECK(is_cnot(out.gates[1], 1, 2));
  CHECK(mux::max_abs_diff(mux::simulate(out), mux::simulate(seq)) <= 1e-14);
}

TEST_CASE("cancellation prunes near-zero rotations by tolerance") {
  GateSequence seq;
  seq.qubits = 2;
  seq.gates = {RotY{1, 0.5}, Cnot{0, 1}, RotY{1, 1e-13}, Cnot{0, 1}};
  const GateSequence out = mux::cancel_cnots(seq);
  REQUIRE(out.gates.size() == 1);
  CHECK(is_rot(out.gates[0], 1, 0.5));
  // The two CNOTs around the pruned rotation merged and vanished.
  CHECK(count_cnots(out) == 0);
  const GateSequence strict = mux::cancel_cnots(seq, 0.0);
  CHECK(strict.gates.size() == 4);
}

TEST_CASE("cancellation on truncated staircases matches the count law") {
  oracles::Rng rng(41);
  for (unsigned qubits = 2; qubits <= 6; ++qubits) {
    const unsigned controls = qubits - 1;
    const auto spec = mux::make_multiplexor(rng.phi(controls));
    for (unsigned deficit = 0; deficit <= controls; ++deficit) {
      const BitPermutation pi = rng.perm(controls);
      const auto a = mux::approximate_fast(spec, pi, deficit);
      const GateSequence cut =
          mux::cancel_cnots(mux::build_seo(a.theta_prime, pi, qubits));
      CHECK(count_cnots(cut) == mux::cnot_count(qubits, deficit));
      CHECK(mux::max_abs_diff(
                mux::simulate(cut),
                mux::multiplexor_unitary(mux::make_multiplexor(a.phi_prime)))
            <= kSimTol);
    }
  }
}

TEST_CASE("CNOT count law: frozen values and validation") {
  CHECK(mux::cnot_count(2, 0) == 2);
  CHECK(mux::cnot_count(2, 1) == 0);
  CHECK(mux::cnot_count(4, 0) == 8);
  CHECK(mux::cnot_count(4, 1) == 4);
  CHECK(mux::cnot_count(4, 2) == 2);
  CHECK(mux::cnot_count(4, 3) == 0);
  CHECK_THROWS_AS(mux::cnot_count(3, 3), std::invalid_argument);
}

TEST_CASE("worst-case CNOT floor: frozen table") {
  const double want[15] = {0.00,       2.25,       13.50,      60.75,
                           252.00,     1019.25,    4090.50,    16377.75,
                           65529.00,   262136.25,  1048567.50, 4194294.75,
                           16777206.00, 67108853.25, 268435444.50};
  const std::uint64_t ref[15] = {1,     4,      16,     64,      256,
                                 1024,  4096,   16384,  65536,   262144,
                                 1048576, 4194304, 16777216, 67108864,
                                 268435456};
  for (unsigned nb = 1; nb <= 15; ++nb) {
    CHECK(mux::lower_bound_cnots(nb) == want[nb - 1]);
    CHECK(mux::unstructured_cnot_reference(nb) == ref[nb - 1]);
  }
  CHECK_THROWS_AS(mux::unstructured_cnot_reference(0), std::invalid_argument);
}

TEST_CASE("simulator validates wires and applies frozen kernels") {
  GateSequence bad;
  bad.qubits = 2;
  bad.gates = {Cnot{1, 1}};
  CHECK_THROWS_AS(mux::simulate(bad), std::invalid_argument);
  bad.gates = {RotY{2, 0.1}};
  CHECK_THROWS_AS(mux::simulate(bad), std::invalid_argument);

  GateSequence rot;
  rot.qubits = 1;
  rot.gates = {RotY{0, 0.3}};
  const mux::CMat u = mux::simulate(rot);
  CHECK(u(0, 0) == std::complex<double>(std::cos(0.3), 0.0));
  CHECK(u(0, 1) == std::complex<double>(std::sin(0.3), 0.0));
  CHECK(u(1, 0) == std::complex<double>(-std::sin(0.3), 0.0));
  CHECK(u(1, 1) == std::complex<double>(std::cos(0.3), 0.0));

  GateSequence cx;
  cx.qubits = 2;
  cx.gates = {Cnot{0, 1}};
  const mux::CMat x = mux::simulate(cx);
  // Flips the target exactly when control (low wire) is set.
  CHECK(x(0, 0) == std::complex<double>(1.0, 0.0));
  CHECK(x(3, 1) == std::complex<double>(1.0, 0.0));
  CHECK(x(2, 2) == std::complex<double>(1.0, 0.0));
  CHECK(x(1, 3) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("simulator honours the qubit cap") {
  GateSequence seq;
  seq.qubits = 5;
  CHECK_THROWS_AS(mux::simulate(seq, 4), std::invalid_argument);
}

TEST_CASE("spectral norm of dense differences") {
  mux::CMat a = mux::CMat::identity(2), b = mux::CMat::identity(2);
  const double angle = 0.7;
  b(1, 1) = std::polar(1.0, angle);
  CHECK(mux::spectral_norm_diff(a, b) ==
        doctest::Approx(2.0 * std::sin(angle / 2)).epsilon(1e-12));
  CHECK(mux::spectral_norm_diff(a, a) <= 1e-14);
  // Dominated by and consistent with the Frobenius norm.
  oracles::Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s1 = mux::make_multiplexor(rng.phi(2));
    const auto s2 = mux::make_multiplexor(rng.phi(2));
    const mux::CMat u = mux::multiplexor_unitary(s1);
    const mux::CMat v = mux::multiplexor_unitary(s2);
    const double two = mux::spectral_norm_diff(u, v);
    const double fro = mux::frobenius_diff(u, v);
    CHECK(two <= fro + 1e-12);
    CHECK(fro <= std::sqrt(static_cast<double>(u.dim())) * two + 1e-12);
  }
}

TEST_CASE("text serialization round trips bit-exactly") {
  oracles::Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned controls = 1 + static_cast<unsigned>(rng.below(3));
    std::vector<double> theta(std::size_t{1} << controls);
    for (double& x : theta) x = 2.0 * rng.real() - 1.0;
    const GateSequence seq =
        mux::build_seo(theta, rng.perm(controls), controls + 1);
    std::istringstream in(mux::to_text(seq));
    const GateSequence back = mux::parse_gate_sequence(in);
    CHECK(back.qubits == seq.qubits);
    REQUIRE(back.gates.size() == seq.gates.size());
    for (std::size_t i = 0; i < seq.gates.size(); ++i)
      CHECK(back.gates[i] == seq.gates[i]);
  }
}

TEST_CASE("text form: frozen example with tally") {
  GateSequence seq;
  seq.qubits = 2;
  seq.gates = {RotY{1, 0.5}, Cnot{0, 1}, RotY{1, -0.25}, Cnot{0, 1}};
  CHECK(mux::to_text(seq) ==
        "QUBITS 2\n"
        "ROTY 1 0.5\n"
        "CNOT 0 1\n"
        "ROTY 1 -0.25\n"
        "CNOT 0 1\n"
        "# rotations 2 cnots 2\n");
}

TEST_CASE("parser reports malformed input with line numbers") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return mux::parse_gate_sequence(in);
  };
  CHECK_THROWS_AS(parse("ROTY 1 0.5\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("QUBITS 2\nROTY 5 0.5\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("QUBITS 2\nROTY 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("QUBITS 2\nSWAP 0 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("QUBITS 2\nCNOT 1 1\n"), std::runtime_error);
  const GateSequence ok =
      parse("# comment\n\nQUBITS 2\nROTY 1 0.25\nCNOT 0 1\n");
  CHECK(ok.qubits == 2);
  CHECK(ok.gates.size() == 2);
  try {
    parse("QUBITS 2\nROTY 1 0.5\nBOGUS\n");
    CHECK(false);
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}
