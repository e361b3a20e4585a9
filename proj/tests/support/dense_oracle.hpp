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

#ifndef QADL_TESTS_SUPPORT_DENSE_ORACLE_HPP_
#define QADL_TESTS_SUPPORT_DENSE_ORACLE_HPP_

// Reference simulator for tests. Every gate is materialized as a full
// 2^n x 2^n matrix built straight from its definition, so it shares no code
// with the in-place kernels it is used to check.

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qadl/ir/circuit.hpp"

namespace qadl::testing {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Lifts `sub` (acting on a register where qubits[k] is bit k of the
/// register index) to the full n-qubit space.
Matrix embed(const Matrix& sub, std::span<const int> qubits, int n);

/// Unitary of one gate application on n qubits.
Matrix gate_matrix(const ir::GateKind& kind, std::span<const int> qubits, int n);

/// DFT matrix F(y, x) = w^{xy} / sqrt(2^m), w = exp(2 pi i / 2^m).
Matrix dft(int m);

/// Projector onto qubit q reading `value`.
Matrix projector(int q, int value, int n);

/// States after each executed gate/measurement of one shot, using the same
/// uniform draws (RngStream::for_shot(seed, shot)) as the simulator.
std::vector<Vector> trajectory(const ir::CircuitIR& ir, std::uint64_t seed,
                               std::uint64_t shot,
                               std::optional<Vector> initial = std::nullopt);

/// Exact distribution of classical records (c0 leftmost), enumerating every
/// measurement branch with its Born weight.
std::map<std::string, double> exact_distribution(const ir::CircuitIR& ir);

/// Pure state reached by a measurement-free op list.
Vector evolve(const ir::OpList& ops, int n, Vector psi);

}  // namespace qadl::testing

#endif  // QADL_TESTS_SUPPORT_DENSE_ORACLE_HPP_
