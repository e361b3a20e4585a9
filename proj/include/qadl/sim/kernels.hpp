// Copyright 2026 The QADL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QADL_SIM_KERNELS_HPP_
#define QADL_SIM_KERNELS_HPP_

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <string_view>

#include "qadl/ir/circuit.hpp"
#include "qadl/sim/error.hpp"
#include "qadl/sim/rng.hpp"
#include "qadl/sim/statevector.hpp"

// In-place gate kernels. Each single-qubit kernel walks the 2^(n-1)
// amplitude pairs that differ only in the target bit; nothing here builds a
// 2^n x 2^n matrix.

namespace qadl::sim {

template <typename Real>
using Matrix2 = Eigen::Matrix<std::complex<Real>, 2, 2>;

using Index = Eigen::Index;

inline constexpr Index bit(int q) { return Index{1} << q; }

/// Calls f(i0, i1) for every pair of basis indices differing only in qubit q
/// (i0 has the bit clear).
template <typename F>
void for_each_pair(Index size, int q, F&& f) {
  const Index stride = bit(q);
  for (Index base = 0; base < size; base += 2 * stride) {
    for (Index i = base; i < base + stride; ++i) f(i, i + stride);
  }
}

template <typename Real>
void apply_single(Statevector<Real>& state, int q, const Matrix2<Real>& u) {
  auto& a = state.amplitudes();
  for_each_pair(a.size(), q, [&](Index i0, Index i1) {
    const auto x = a(i0);
    const auto y = a(i1);
    a(i0) = u(0, 0) * x + u(0, 1) * y;
    a(i1) = u(1, 0) * x + u(1, 1) * y;
  });
}

template <typename Real>
void apply_hadamard(Statevector<Real>& state, int q) {
  const Real s = Real(1) / std::sqrt(Real(2));
  auto& a = state.amplitudes();
  for_each_pair(a.size(), q, [&](Index i0, Index i1) {
    const auto x = a(i0);
    const auto y = a(i1);
    a(i0) = (x + y) * s;
    a(i1) = (x - y) * s;
  });
}

template <typename Real>
void apply_pauli_x(Statevector<Real>& state, int q) {
  auto& a = state.amplitudes();
  for_each_pair(a.size(), q, [&](Index i0, Index i1) { std::swap(a(i0), a(i1)); });
}

template <typename Real>
void apply_pauli_z(Statevector<Real>& state, int q) {
  auto& a = state.amplitudes();
  for_each_pair(a.size(), q, [&](Index, Index i1) { a(i1) = -a(i1); });
}

template <typename Real>
void apply_cnot(Statevector<Real>& state, int control, int target) {
  auto& a = state.amplitudes();
  const Index c = bit(control);
  for_each_pair(a.size(), target, [&](Index i0, Index i1) {
    if (i0 & c) std::swap(a(i0), a(i1));
  });
}

template <typename Real>
void apply_cz(Statevector<Real>& state, int q0, int q1) {
  auto& a = state.amplitudes();
  const Index mask = bit(q0) | bit(q1);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & mask) == mask) a(i) = -a(i);
  }
}

/// Multiplies |..1..1..> (both bits set) by e^{i phi}.
template <typename Real>
void apply_controlled_phase(Statevector<Real>& state, int control, int target,
                            Real phi) {
  auto& a = state.amplitudes();
  const Index mask = bit(control) | bit(target);
  const auto phase = std::polar(Real(1), phi);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & mask) == mask) a(i) *= phase;
  }
}

/// Controlled RZ(theta), RZ(theta) = diag(e^{-i theta/2}, e^{+i theta/2}).
template <typename Real>
void apply_crz(Statevector<Real>& state, int control, int target, Real theta) {
  auto& a = state.amplitudes();
  const Index c = bit(control);
  const auto lo = std::polar(Real(1), -theta / 2);
  const auto hi = std::polar(Real(1), theta / 2);
  for_each_pair(a.size(), target, [&](Index i0, Index i1) {
    if (i0 & c) {
      a(i0) *= lo;
      a(i1) *= hi;
    }
  });
}

template <typename Real>
void apply_swap(Statevector<Real>& state, int q0, int q1) {
  if (q0 == q1) return;
  auto& a = state.amplitudes();
  const Index b0 = bit(q0);
  const Index b1 = bit(q1);
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & b0) && !(i & b1)) std::swap(a(i), a(i ^ b0 ^ b1));
  }
}

/// Quantum Fourier transform on the register `qubits` (qubits[0] is the
/// least significant bit of the register value):
///   |x> -> 2^{-m/2} sum_y exp(2 pi i x y / 2^m) |y>.
template <typename Real>
void apply_qft(Statevector<Real>& state, std::span<const int> qubits) {
  const int m = static_cast<int>(qubits.size());
  for (int j = m - 1; j >= 0; --j) {
    apply_hadamard(state, qubits[j]);
    for (int k = j - 1; k >= 0; --k) {
      apply_controlled_phase(state, qubits[k], qubits[j],
                             std::numbers::pi_v<Real> / Real(Index{1} << (j - k)));
    }
  }
  for (int i = 0; i < m / 2; ++i) apply_swap(state, qubits[i], qubits[m - 1 - i]);
}

/// Adjoint of apply_qft: the same network reversed with conjugated phases.
template <typename Real>
void apply_inverse_qft(Statevector<Real>& state, std::span<const int> qubits) {
  const int m = static_cast<int>(qubits.size());
  for (int i = 0; i < m / 2; ++i) apply_swap(state, qubits[i], qubits[m - 1 - i]);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < j; ++k) {
      apply_controlled_phase(state, qubits[k], qubits[j],
                             -std::numbers::pi_v<Real> / Real(Index{1} << (j - k)));
    }
    apply_hadamard(state, qubits[j]);
  }
}

/// Negates the amplitude of every basis state whose register assignment equals
/// `marked`, where marked[k] is the value of qubits[k].
template <typename Real>
void grovers_oracle(Statevector<Real>& state, std::span<const int> qubits,
                    std::string_view marked) {
  assert(marked.size() == qubits.size());
  Index mask = 0;
  Index value = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    mask |= bit(qubits[k]);
    if (marked[k] == '1') value |= bit(qubits[k]);
  }
  auto& a = state.amplitudes();
  for (Index i = 0; i < a.size(); ++i) {
    if ((i & mask) == value) a(i) = -a(i);
  }
}

/// Reflection about the uniform superposition of the register:
/// H^m (2|0><0| - I) H^m.
template <typename Real>
void grover_diffusion(Statevector<Real>& state, std::span<const int> qubits) {
  Index mask = 0;
  for (int q : qubits) {
    apply_hadamard(state, q);
    mask |= bit(q);
  }
  auto& a = state.amplitudes();
  for (Index i = 0; i < a.size(); ++i) {
    if (i & mask) a(i) = -a(i);
  }
  for (int q : qubits) apply_hadamard(state, q);
}

/// floor(pi/4 * sqrt(2^n)).
inline int grover_iterations(int n_qubits) {
  assert(n_qubits >= 1 && n_qubits <= ir::kMaxQubits);
  const double n_states = std::ldexp(1.0, n_qubits);
  return static_cast<int>(std::floor(std::numbers::pi / 4 * std::sqrt(n_states)));
}

template <typename Real>
void apply_gate(Statevector<Real>& state, const ir::GateKind& kind,
                std::span<const int> qubits) {
  using ir::GateType;
  switch (kind.type) {
    case GateType::Hadamard: apply_hadamard(state, qubits[0]); return;
    case GateType::PauliX: apply_pauli_x(state, qubits[0]); return;
    case GateType::PauliZ: apply_pauli_z(state, qubits[0]); return;
    case GateType::CNOT: apply_cnot(state, qubits[0], qubits[1]); return;
    case GateType::CZ: apply_cz(state, qubits[0], qubits[1]); return;
    case GateType::CRZ:
      apply_crz(state, qubits[0], qubits[1], static_cast<Real>(kind.theta));
      return;
    case GateType::InverseQFT: apply_inverse_qft(state, qubits); return;
    case GateType::GroverOracle: grovers_oracle(state, qubits, kind.marked); return;
    case GateType::GroverDiffusion: grover_diffusion(state, qubits); return;
  }
}

/// Born-rule probability that measuring q yields 1.
template <typename Real>
Real probability_one(const Statevector<Real>& state, int q) {
  Real p = 0;
  const auto& a = state.amplitudes();
  for_each_pair(a.size(), q, [&](Index, Index i1) { p += std::norm(a(i1)); });
  return p;
}

/// Projective measurement driven by a uniform draw r in [0,1): the outcome is
/// 1 iff r < P(1). The state collapses onto the outcome and is renormalized.
template <typename Real>
int measure(Statevector<Real>& state, int q, double r) {
  const Real p1 = probability_one(state, q);
  const int outcome = r < static_cast<double>(p1) ? 1 : 0;
  const Real p = outcome == 1 ? p1 : state.norm_squared() - p1;
  if (p < Real(1e-12)) {
    throw SimError(DiagCode::DegenerateNorm,
                   "measurement selected an outcome of negligible probability");
  }
  const Real scale = Real(1) / std::sqrt(p);
  auto& a = state.amplitudes();
  for_each_pair(a.size(), q, [&](Index i0, Index i1) {
    if (outcome == 1) {
      a(i0) = 0;
      a(i1) *= scale;
    } else {
      a(i0) *= scale;
      a(i1) = 0;
    }
  });
  return outcome;
}

template <typename Real>
int measure(Statevector<Real>& state, int q, RngStream& rng) {
  return measure(state, q, rng.uniform());
}

}  // namespace qadl::sim

#endif  // QADL_SIM_KERNELS_HPP_
