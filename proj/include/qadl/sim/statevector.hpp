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

#ifndef QADL_SIM_STATEVECTOR_HPP_
#define QADL_SIM_STATEVECTOR_HPP_

#include <Eigen/Core>
#include <cassert>
#include <complex>
#include <cstdint>

namespace qadl::sim {

template <typename Real>
using Amplitudes = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

/// Dense pure state of `n` qubits. Basis index bit k holds qubit k
/// (little-endian: qubit 0 is the least significant bit).
template <typename Real = double>
class Statevector {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Vector = Amplitudes<Real>;

  /// |0...0>
  explicit Statevector(int n_qubits)
      : n_qubits_(n_qubits), amps_(Vector::Zero(Eigen::Index{1} << n_qubits)) {
    amps_(0) = Scalar(1);
  }

  Statevector(int n_qubits, Vector amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {
    assert(amps_.size() == (Eigen::Index{1} << n_qubits));
  }

  /// |index> on n qubits.
  static Statevector basis(int n_qubits, std::uint64_t index) {
    Statevector s(n_qubits);
    s.amps_(0) = Scalar(0);
    s.amps_(static_cast<Eigen::Index>(index)) = Scalar(1);
    return s;
  }

  int n_qubits() const { return n_qubits_; }
  Eigen::Index size() const { return amps_.size(); }

  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }

  Scalar operator[](Eigen::Index i) const { return amps_(i); }
  Scalar& operator[](Eigen::Index i) { return amps_(i); }

  Real norm_squared() const { return amps_.squaredNorm(); }

  void normalize() { amps_ /= amps_.norm(); }

  template <typename Other>
  Statevector<Other> cast() const {
    return Statevector<Other>(n_qubits_,
                              amps_.template cast<std::complex<Other>>());
  }

 private:
  int n_qubits_;
  Vector amps_;
};

/// |<a|b>|^2
template <typename Real>
Real fidelity(const Statevector<Real>& a, const Statevector<Real>& b) {
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace qadl::sim

#endif  // QADL_SIM_STATEVECTOR_HPP_
