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

#ifndef QADL_SIM_RUNNER_HPP_
#define QADL_SIM_RUNNER_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qadl/ir/circuit.hpp"
#include "qadl/sim/statevector.hpp"

namespace qadl::sim {

/// Called after every executed gate or measurement of a shot.
using OpObserver =
    std::function<void(const ir::IROp& op, const Statevector<double>& state)>;

struct RunOptions {
  int shots = 1024;
  std::uint64_t seed = 0;
  bool keep_state = false;
  /// Replaces |0...0> as the starting state of every shot.
  std::optional<Statevector<double>> initial_state;
  /// Shots still running past this point abort with SimulationTimeout.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  OpObserver observer;
};

struct SimOutcome {
  std::vector<std::string> cbit_names;
  /// One bitstring per shot; character k is cbit k (c0 leftmost). Bits that
  /// were never written during the shot read as '0'.
  std::vector<std::string> records;
  /// Histogram of `records`. Empty when the circuit has no classical bits.
  std::map<std::string, int> counts;
  std::optional<Statevector<double>> final_state;
  std::uint64_t seed = 0;
  int shots = 0;
};

/// Executes `ir` for `options.shots` independent shots. Shot k draws from
/// RngStream::for_shot(seed, k). Throws SimError when a shot aborts.
SimOutcome run(const ir::CircuitIR& ir, const RunOptions& options);

/// Fraction of shots in which each classical bit read 1.
std::vector<double> marginals(const SimOutcome& outcome);

/// Text table shared by the CLI and the HTTP service: a header line, one
/// `bitstring count frequency` row per outcome sorted by count (descending)
/// then bitstring, followed by `shots:` and `seed:` lines.
std::string format_counts_table(const SimOutcome& outcome);

/// Bitstrings with their counts in table order.
std::vector<std::pair<std::string, int>> sorted_counts(const SimOutcome& outcome);

}  // namespace qadl::sim

#endif  // QADL_SIM_RUNNER_HPP_
