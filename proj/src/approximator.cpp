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

#include "mux/approximator.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "mux/circuits.hpp"
#include "mux/transforms.hpp"

namespace mux {

namespace {

unsigned log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("angle table length must be a power of two");
  return static_cast<unsigned>(std::countr_zero(n));
}

void check_instance(const MultiplexorSpec& spec, const BitPermutation& pi,
                    unsigned deficit) {
  if (spec.phi.size() != (std::size_t{1} << spec.controls))
    throw std::invalid_argument("phi length must be 2^controls");
  if (pi.width() != spec.controls)
    throw std::invalid_argument("bit permutation width must equal controls");
  if (deficit > spec.controls)
    throw std::invalid_argument("deficit exceeds control count");
}

Approximant finish(const MultiplexorSpec& spec, const BitPermutation& pi,
                   unsigned deficit, std::vector<double> phi_prime) {
  Approximant a;
  a.permutation = pi;
  a.deficit = deficit;
  a.theta_prime = theta_from_phi(phi_prime);
  a.linearized_error = linearized_error(spec.phi, phi_prime);
  a.operator_error = operator_error(spec.phi, phi_prime);
  a.cnots = cnot_count(spec.controls + 1, deficit);
  a.phi_prime = std::move(phi_prime);
  return a;
}

}  // namespace

MultiplexorSpec make_multiplexor(std::vector<double> phi) {
  MultiplexorSpec spec;
  spec.controls = log2_exact(phi.size());
  spec.phi = std::move(phi);
  return spec;
}

std::vector<double> theta_from_phi(const std::vector<double>& phi) {
  std::vector<double> theta = fwht(phi);
  const double scale = 1.0 / std::sqrt(static_cast<double>(phi.size()));
  for (double& t : theta) t *= scale;
  return theta;
}

std::vector<double> phi_from_theta(const std::vector<double>& theta) {
  std::vector<double> phi = fwht(theta);
  const double scale = std::sqrt(static_cast<double>(theta.size()));
  for (double& p : phi) p *= scale;
  return phi;
}

Approximant approximate(const MultiplexorSpec& spec, const BitPermutation& pi,
                        unsigned deficit) {
  check_instance(spec, pi, deficit);
  const std::size_t n = spec.phi.size();
  const std::size_t kept = std::size_t{1} << (spec.controls - deficit);
  const double scale = 1.0 / static_cast<double>(n);  // two 1/sqrt(N) passes

  std::vector<double> phi_prime(n, 0.0);
  for (std::size_t i = 0; i < kept; ++i) {
    const std::uint64_t g = pi.apply_to_state(gray_code(i));
    double coeff = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      coeff += ((std::popcount(k & g) & 1) ? -spec.phi[k] : spec.phi[k]);
    for (std::size_t k = 0; k < n; ++k)
      phi_prime[k] += ((std::popcount(k & g) & 1) ? -coeff : coeff) * scale;
  }
  return finish(spec, pi, deficit, std::move(phi_prime));
}

Approximant approximate_fast(const MultiplexorSpec& spec, const BitPermutation& pi,
                             unsigned deficit) {
  check_instance(spec, pi, deficit);
  const std::size_t n = spec.phi.size();
  const std::size_t block = std::size_t{1} << deficit;

  // Listing order: position u holds the angle of control word
  // pi(reverse(u)); block means over that order implement the projection.
  std::vector<std::uint64_t> slot(n);
  for (std::size_t u = 0; u < n; ++u)
    slot[u] = pi.apply_to_state(reverse_bits(u, spec.controls));

  std::vector<double> phi_prime(n);
  for (std::size_t base = 0; base < n; base += block) {
    double mean = 0.0;
    for (std::size_t u = base; u < base + block; ++u) mean += spec.phi[slot[u]];
    mean /= static_cast<double>(block);
    for (std::size_t u = base; u < base + block; ++u) phi_prime[slot[u]] = mean;
  }
  return finish(spec, pi, deficit, std::move(phi_prime));
}

Mat gamma_matrix(unsigned bits, unsigned kept) {
  if (kept > bits) throw std::invalid_argument("kept bits exceed total bits");
  const std::size_t n = std::size_t{1} << bits;
  const unsigned deficit = bits - kept;
  const double w = 1.0 / static_cast<double>(std::size_t{1} << deficit);
  Mat g(n, n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t s = 0; s < n; ++s)
      if ((q >> deficit) == (s >> deficit)) g(q, s) = w;
  return g;
}

double linearized_error(const std::vector<double>& phi,
                        const std::vector<double>& phi_prime) {
  if (phi.size() != phi_prime.size())
    throw std::invalid_argument("angle tables differ in length");
  double m = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i)
    m = std::max(m, std::abs(phi_prime[i] - phi[i]));
  return m;
}

double operator_error(const std::vector<double>& phi,
                      const std::vector<double>& phi_prime) {
  if (phi.size() != phi_prime.size())
    throw std::invalid_argument("angle tables differ in length");
  double m = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i)
    m = std::max(m, 2.0 * std::abs(std::sin(0.5 * (phi_prime[i] - phi[i]))));
  return m;
}

Su2Distance su2_distance(const std::array<double, 3>& a,
                         const std::array<double, 3>& b) {
  using cd = std::complex<double>;
  const auto expi = [](const std::array<double, 3>& v) {
    const double r = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const double c = std::cos(r);
    const double s = r < 1e-150 ? 1.0 : std::sin(r) / r;  // sinc, safe at 0
    // exp(i v.sigma) = cos r + i sinc(r) (vx X + vy Y + vz Z)
    return std::array<cd, 4>{cd(c, s * v[2]), cd(s * v[1], s * v[0]),
                             cd(-s * v[1], s * v[0]), cd(c, -s * v[2])};
  };
  const auto ua = expi(a);
  const auto ub = expi(b);
  std::array<cd, 4> d;
  for (int i = 0; i < 4; ++i) d[i] = ub[i] - ua[i];
  // Jacobi split of the 2x2 Gram matrix of the difference: no cancellation
  // even when the two singular values coincide (as they always do here).
  const double p = std::norm(d[0]) + std::norm(d[2]);
  const double q = std::norm(d[1]) + std::norm(d[3]);
  const double c = std::abs(std::conj(d[0]) * d[1] + std::conj(d[2]) * d[3]);
  double lo = p, hi = q;
  if (c > 0.0) {
    const double tau = (q - p) / (2.0 * c);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    lo = p - t * c;
    hi = q + t * c;
  }
  Su2Distance out;
  out.two_norm = std::sqrt(std::max({lo, hi, 0.0}));
  out.frobenius = std::sqrt(p + q);
  return out;
}

double generalized_error_bound(const std::vector<double>& phi1,
                               const std::vector<double>& phi1_prime,
                               const std::vector<double>& phi2,
                               const std::vector<double>& phi2_prime) {
  if (phi1.size() != phi1_prime.size() || phi1.size() != phi2.size() ||
      phi1.size() != phi2_prime.size())
    throw std::invalid_argument("angle tables differ in length");
  double m = 0.0;
  for (std::size_t i = 0; i < phi1.size(); ++i) {
    const double d1 = phi1_prime[i] - phi1[i];
    const double d2 = phi2_prime[i] - phi2[i];
    m = std::max(m, std::sqrt(d1 * d1 + d2 * d2));
  }
  return m;
}

}  // namespace mux
