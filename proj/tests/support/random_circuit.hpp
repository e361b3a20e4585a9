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

#ifndef QADL_TESTS_SUPPORT_RANDOM_CIRCUIT_HPP_
#define QADL_TESTS_SUPPORT_RANDOM_CIRCUIT_HPP_

#include <random>
#include <string>

#include "qadl/ir/circuit.hpp"

namespace qadl::testing {

struct RandomCircuitOptions {
  int min_qubits = 1;
  int max_qubits = 5;
  int max_ops = 30;
  bool measurements = true;
  bool conditionals = true;
};

/// Random well-formed circuit. Conditional blocks only read bits that an
/// earlier top-level measurement has written.
ir::CircuitIR random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& options = {});

/// Random single gate application on n qubits.
ir::GateOp random_gate(std::mt19937_64& rng, int n);

/// Script text for `ir` (without a flow graph) that lowers back to `ir`.
std::string to_script(const ir::CircuitIR& ir);

}  // namespace qadl::testing

#endif  // QADL_TESTS_SUPPORT_RANDOM_CIRCUIT_HPP_
