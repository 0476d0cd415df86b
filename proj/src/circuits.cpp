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

#include "mux/circuits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mux {

CMat CMat::identity(std::size_t dim) {
  CMat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::adjoint() const {
  CMat m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CMat mul: size mismatch");
  const std::size_t n = a.dim();
  CMat c(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const std::complex<double> bkj = b(k, j);
      if (bkj == std::complex<double>{}) continue;
      for (std::size_t i = 0; i < n; ++i) c(i, j) += a(i, k) * bkj;
    }
  return c;
}

double max_abs_diff(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CMat diff: size mismatch");
  double m = 0.0;
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (std::size_t r = 0; r < a.dim(); ++r)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

double frobenius_diff(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CMat diff: size mismatch");
  double s = 0.0;
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (std::size_t r = 0; r < a.dim(); ++r)
      s += std::norm(a(r, c) - b(r, c));
  return std::sqrt(s);
}

double spectral_norm_diff(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CMat diff: size mismatch");
  const std::size_t n = a.dim();
  // Hermitian Gram matrix of the difference, embedded as the real
  // symmetric [[Re, -Im], [Im, Re]]; its top eigenvalue is sigma_max^2.
  std::vector<std::complex<double>> gram(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += std::conj(a(k, i) - b(k, i)) * (a(k, j) - b(k, j));
      gram[i * n + j] = acc;
    }
  const std::size_t m = 2 * n;
  std::vector<double> s(m * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::complex<double> h = gram[i * n + j];
      s[i * m + j] = h.real();
      s[(n + i) * m + (n + j)] = h.real();
      s[i * m + (n + j)] = -h.imag();
      s[(n + i) * m + j] = h.imag();
    }
  // Cyclic Jacobi sweeps; quadratic convergence makes 50 plenty.
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += s[p * m + q] * s[p * m + q];
    if (off <= 1e-30) break;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const double spq = s[p * m + q];
        if (spq == 0.0) continue;
        const double tau = (s[q * m + q] - s[p * m + p]) / (2.0 * spq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double skp = s[k * m + p];
          const double skq = s[k * m + q];
          s[k * m + p] = c * skp - sn * skq;
          s[k * m + q] = sn * skp + c * skq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double spk = s[p * m + k];
          const double sqk = s[q * m + k];
          s[p * m + k] = c * spk - sn * sqk;
          s[q * m + k] = sn * spk + c * sqk;
        }
      }
  }
  double top = 0.0;
  for (std::size_t i = 0; i < m; ++i) top = std::max(top, s[i * m + i]);
  return std::sqrt(top);
}

namespace {

void check_qubits(unsigned qubits, unsigned max_qubits) {
  if (qubits == 0) throw std::invalid_argument("need at least one qubit");
  if (qubits > max_qubits)
    throw std::invalid_argument("dense simulation size exceeds configured cap");
}

}  // namespace

CMat multiplexor_unitary(const MultiplexorSpec& spec, unsigned max_qubits) {
  const unsigned qubits = spec.controls + 1;
  check_qubits(qubits, max_qubits);
  if (spec.phi.size() != (std::size_t{1} << spec.controls))
    throw std::invalid_argument("phi length must be 2^controls");
  const std::size_t half = std::size_t{1} << spec.controls;
  CMat u(2 * half);
  for (std::size_t b = 0; b < half; ++b) {
    const double c = std::cos(spec.phi[b]);
    const double s = std::sin(spec.phi[b]);
    u(b, b) = c;
    u(b, half + b) = s;
    u(half + b, b) = -s;
    u(half + b, half + b) = c;
  }
  return u;
}

GateSequence build_seo(const std::vector<double>& theta, const BitPermutation& pi,
                       unsigned qubits) {
  const std::size_t n = theta.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("theta length must be a power of two");
  const unsigned k = static_cast<unsigned>(std::countr_zero(n));
  if (pi.width() != k)
    throw std::invalid_argument("bit permutation width must match theta length");
  if (qubits < k + 1)
    throw std::invalid_argument("not enough qubits for the control count");
  const unsigned target = qubits - 1;

  GateSequence seq;
  seq.qubits = qubits;
  if (k == 0) {
    seq.gates.push_back(RotY{target, theta[0]});
    return seq;
  }
  const std::vector<std::uint64_t> order = grayish_order(pi);
  seq.gates.reserve(2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    seq.gates.push_back(RotY{target, theta[order[t]]});
    const std::uint64_t diff = order[t] ^ order[(t + 1) % n];
    // Consecutive grayish words differ in exactly one bit.
    const unsigned control = static_cast<unsigned>(std::countr_zero(diff));
    seq.gates.push_back(Cnot{control, target});
  }
  return seq;
}

GateSequence time_reverse(const GateSequence& seq) {
  GateSequence out;
  out.qubits = seq.qubits;
  out.gates.assign(seq.gates.rbegin(), seq.gates.rend());
  return out;
}

GateSequence permute_controls(const GateSequence& seq, const BitPermutation& pi) {
  const std::size_t n = seq.gates.size();
  // suffix[i] = XOR of control masks of CNOTs at positions >= i; a rotation
  // at position i therefore carries the block subscript suffix[i + 1].
  std::vector<std::uint64_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    suffix[i] = suffix[i + 1];
    if (const Cnot* cx = std::get_if<Cnot>(&seq.gates[i])) {
      if (cx->control >= pi.width())
        throw std::invalid_argument("control wire outside permutation domain");
      suffix[i] ^= std::uint64_t{1} << cx->control;
    }
  }
  const auto relabel = [&pi](std::uint64_t m) {
    std::uint64_t r = 0;
    for (unsigned c = 0; c < pi.width(); ++c)
      if ((m >> c) & 1) r |= std::uint64_t{1} << pi(c);
    return r;
  };
  std::map<std::uint64_t, std::deque<double>> pool;
  for (std::size_t i = 0; i < n; ++i)
    if (const RotY* r = std::get_if<RotY>(&seq.gates[i]))
      pool[suffix[i + 1]].push_back(r->angle);

  GateSequence out;
  out.qubits = seq.qubits;
  out.gates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (const Cnot* cx = std::get_if<Cnot>(&seq.gates[i])) {
      out.gates.push_back(Cnot{pi(cx->control), cx->target});
    } else {
      const RotY& r = std::get<RotY>(seq.gates[i]);
      const auto it = pool.find(relabel(suffix[i + 1]));
      if (it == pool.end() || it->second.empty())
        throw std::invalid_argument(
            "rotation subscripts are not closed under the control relabeling");
      out.gates.push_back(RotY{r.target, it->second.front()});
      it->second.pop_front();
    }
  }
  return out;
}

GateSequence cancel_cnots(const GateSequence& seq, double zero_tol) {
  std::vector<Gate> kept;
  kept.reserve(seq.gates.size());
  for (const Gate& g : seq.gates) {
    if (const RotY* r = std::get_if<RotY>(&g)) {
      if (std::abs(r->angle) < zero_tol) continue;
    }
    kept.push_back(g);
  }

  // Within a run of CNOTs sharing one target all gates commute, so only
  // the parity of each control survives.
  GateSequence out;
  out.qubits = seq.qubits;
  std::size_t i = 0;
  while (i < kept.size()) {
    const Cnot* cx = std::get_if<Cnot>(&kept[i]);
    if (cx == nullptr) {
      out.gates.push_back(kept[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < kept.size()) {
      const Cnot* next = std::get_if<Cnot>(&kept[j]);
      if (next == nullptr || next->target != cx->target) break;
      ++j;
    }
    std::vector<Cnot> survivors;
    for (std::size_t p = i; p < j; ++p) {
      const Cnot cur = std::get<Cnot>(kept[p]);
      auto match = std::find_if(survivors.begin(), survivors.end(),
                                [&](const Cnot& s) { return s.control == cur.control; });
      if (match == survivors.end())
        survivors.push_back(cur);
      else
        survivors.erase(match);
    }
    for (const Cnot& s : survivors) out.gates.push_back(s);
    i = j;
  }
  return out;
}

std::uint64_t cnot_count(unsigned qubits, unsigned deficit) {
  if (qubits == 0) throw std::invalid_argument("need at least one qubit");
  if (deficit >= qubits)
    throw std::invalid_argument("deficit exceeds control count");
  const unsigned controls = qubits - 1;
  if (deficit == controls) return 0;
  return std::uint64_t{1} << (controls - deficit);
}

double lower_bound_cnots(unsigned qubits) {
  const double fourpow = std::ldexp(1.0, 2 * static_cast<int>(qubits));
  return 0.25 * (fourpow - 3.0 * qubits - 1.0);
}

std::uint64_t unstructured_cnot_reference(unsigned qubits) {
  if (qubits == 0 || qubits > 32)
    throw std::invalid_argument("qubit count out of range");
  return std::uint64_t{1} << (2 * (qubits - 1));
}

void apply_gate(std::complex<double>* state, unsigned qubits, const Gate& g) {
  const std::size_t n = std::size_t{1} << qubits;
  if (const RotY* r = std::get_if<RotY>(&g)) {
    const std::size_t tbit = std::size_t{1} << r->target;
    const double c = std::cos(r->angle);
    const double s = std::sin(r->angle);
    for (std::size_t i = 0; i < n; ++i) {
      if (i & tbit) continue;
      const std::complex<double> lo = state[i];
      const std::complex<double> hi = state[i | tbit];
      state[i] = c * lo + s * hi;
      state[i | tbit] = -s * lo + c * hi;
    }
    return;
  }
  const Cnot cx = std::get<Cnot>(g);
  const std::size_t cbit = std::size_t{1} << cx.control;
  const std::size_t tbit = std::size_t{1} << cx.target;
  if (cbit == tbit) throw std::invalid_argument("CNOT control equals target");
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(state[i], state[i | tbit]);
  }
}

CMat simulate(const GateSequence& seq, unsigned max_qubits) {
  check_qubits(seq.qubits, max_qubits);
  const std::size_t n = std::size_t{1} << seq.qubits;
  for (const Gate& g : seq.gates) {
    const unsigned t = std::holds_alternative<RotY>(g)
                           ? std::get<RotY>(g).target
                           : std::max(std::get<Cnot>(g).target,
                                      std::get<Cnot>(g).control);
    if (t >= seq.qubits) throw std::invalid_argument("gate wire out of range");
  }
  CMat u = CMat::identity(n);
  // gates[0] acts last: right-multiply the accumulator from the back.
  for (auto it = seq.gates.rbegin(); it != seq.gates.rend(); ++it)
    for (std::size_t c = 0; c < n; ++c) apply_gate(u.col(c), seq.qubits, *it);
  return u;
}

std::string to_text(const GateSequence& seq) {
  std::ostringstream os;
  write_text(os, seq);
  return os.str();
}

void write_text(std::ostream& os, const GateSequence& seq) {
  os << "QUBITS " << seq.qubits << "\n";
  std::uint64_t cnots = 0;
  std::uint64_t rotations = 0;
  char buf[64];
  for (const Gate& g : seq.gates) {
    if (const RotY* r = std::get_if<RotY>(&g)) {
      std::snprintf(buf, sizeof buf, "%.17g", r->angle);
      os << "ROTY " << r->target << " " << buf << "\n";
      ++rotations;
    } else {
      const Cnot cx = std::get<Cnot>(g);
      os << "CNOT " << cx.control << " " << cx.target << "\n";
      ++cnots;
    }
  }
  os << "# rotations " << rotations << " cnots " << cnots << "\n";
}

GateSequence parse_gate_sequence(std::istream& is) {
  GateSequence seq;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    const auto fail = [&](const char* what) {
      throw std::runtime_error("gate text line " + std::to_string(lineno) + ": " + what);
    };
    if (word == "QUBITS") {
      if (have_header) fail("duplicate QUBITS header");
      if (!(ls >> seq.qubits) || seq.qubits == 0) fail("bad qubit count");
      have_header = true;
    } else if (word == "ROTY") {
      RotY r;
      if (!have_header) fail("gate before QUBITS header");
      if (!(ls >> r.target >> r.angle)) fail("bad ROTY line");
      if (r.target >= seq.qubits) fail("rotation target out of range");
      seq.gates.push_back(r);
    } else if (word == "CNOT") {
      Cnot cx;
      if (!have_header) fail("gate before QUBITS header");
      if (!(ls >> cx.control >> cx.target)) fail("bad CNOT line");
      if (cx.control >= seq.qubits || cx.target >= seq.qubits)
        fail("CNOT wire out of range");
      if (cx.control == cx.target) fail("CNOT control equals target");
      seq.gates.push_back(cx);
    } else {
      fail("unknown gate keyword");
    }
  }
  if (!have_header) throw std::runtime_error("gate text: missing QUBITS header");
  return seq;
}

}  // namespace mux
