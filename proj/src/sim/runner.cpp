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

#include "qadl/sim/runner.hpp"

#include <algorithm>
#include <cstdio>

#include "qadl/sim/error.hpp"
#include "qadl/sim/kernels.hpp"

namespace qadl::sim {
namespace {

class Shot {
 public:
  Shot(const ir::CircuitIR& ir, const RunOptions& options, std::uint64_t index)
      : ir_(ir),
        options_(options),
        state_(options.initial_state ? *options.initial_state
                                     : Statevector<double>(ir.n_qubits)),
        bits_(ir.cbit_names.size(), -1),
        rng_(RngStream::for_shot(options.seed, index)) {}

  void run() {
    execute(ir_.ops);
    if (ir_.flow) traverse(*ir_.flow);
  }

  std::string record() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] == 1) out[i] = '1';
    }
    return out;
  }

  Statevector<double>& state() { return state_; }

 private:
  int read_bit(int cbit, const Span& span) const {
    const int v = bits_[static_cast<std::size_t>(cbit)];
    if (v < 0) {
      throw SimError(DiagCode::UnsetCbitRead,
                     "classical bit '" + ir_.cbit_names[cbit] +
                         "' is read before any measurement wrote it",
                     span);
    }
    return v;
  }

  void check_deadline() {
    if (options_.deadline && (++ticks_ & 0xFF) == 0 &&
        std::chrono::steady_clock::now() > *options_.deadline) {
      throw SimError(DiagCode::SimulationTimeout,
                     "simulation exceeded its time limit");
    }
  }

  void execute(const ir::OpList& ops) {
    for (const ir::IROp& op : ops) {
      check_deadline();
      if (const auto* g = std::get_if<ir::GateOp>(&op.op)) {
        apply_gate(state_, g->kind, g->qubits);
        if (options_.observer) options_.observer(op, state_);
      } else if (const auto* m = std::get_if<ir::MeasureOp>(&op.op)) {
        bits_[m->cbit] = measure(state_, m->qubit, rng_);
        if (options_.observer) options_.observer(op, state_);
      } else {
        const auto& c = std::get<ir::CondBlock>(op.op);
        if (read_bit(c.cbit, op.span) == c.expected) execute(c.body);
      }
    }
  }

  void traverse(const ir::FlowGraph& flow) {
    const ir::FlowNode* node = flow.find(flow.start);
    int steps = 0;
    while (node) {
      if (++steps > ir::kFlowStepLimit) {
        throw SimError(DiagCode::FlowCycleLimitExceeded,
                       "flow executed more than " +
                           std::to_string(ir::kFlowStepLimit) +
                           " nodes; the graph likely cycles forever",
                       node->span);
      }
      execute(node->ops);
      const ir::FlowNode* next = nullptr;
      for (const ir::FlowEdge& e : flow.edges) {
        if (e.from != node->name) continue;
        if (e.guard && read_bit(e.guard->cbit, e.span) != e.guard->expected)
          continue;
        next = flow.find(e.to);
        break;
      }
      node = next;
    }
  }

  const ir::CircuitIR& ir_;
  const RunOptions& options_;
  Statevector<double> state_;
  std::vector<int> bits_;
  RngStream rng_;
  unsigned ticks_ = 0;
};

}  // namespace

SimOutcome run(const ir::CircuitIR& ir, const RunOptions& options) {
  if (options.shots < 1) {
    throw std::invalid_argument("shots must be at least 1");
  }
  if (options.initial_state &&
      options.initial_state->n_qubits() != ir.n_qubits) {
    throw std::invalid_argument("initial state has the wrong qubit count");
  }
  SimOutcome out;
  out.cbit_names = ir.cbit_names;
  out.seed = options.seed;
  out.shots = options.shots;
  out.records.reserve(static_cast<std::size_t>(options.shots));
  for (int k = 0; k < options.shots; ++k) {
    if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
      throw SimError(DiagCode::SimulationTimeout,
                     "simulation exceeded its time limit");
    }
    Shot shot(ir, options, static_cast<std::uint64_t>(k));
    shot.run();
    out.records.push_back(shot.record());
    if (!ir.cbit_names.empty()) ++out.counts[out.records.back()];
    if (options.shots == 1 && options.keep_state) {
      out.final_state = std::move(shot.state());
    }
  }
  return out;
}

std::vector<double> marginals(const SimOutcome& outcome) {
  std::vector<double> ones(outcome.cbit_names.size(), 0.0);
  for (const std::string& r : outcome.records) {
    for (std::size_t i = 0; i < r.size(); ++i) ones[i] += r[i] == '1';
  }
  for (double& v : ones) v /= std::max(1, outcome.shots);
  return ones;
}

std::vector<std::pair<std::string, int>> sorted_counts(const SimOutcome& outcome) {
  std::vector<std::pair<std::string, int>> rows(outcome.counts.begin(),
                                                outcome.counts.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  return rows;
}

std::string format_counts_table(const SimOutcome& outcome) {
  const auto rows = sorted_counts(outcome);
  const std::size_t bits_w =
      std::max<std::size_t>(9, outcome.cbit_names.size()) + 2;
  std::size_t count_w = 5;
  for (const auto& [_, n] : rows) count_w = std::max(count_w, std::to_string(n).size());
  count_w += 2;

  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  std::string out = pad("bitstring", bits_w) + pad("count", count_w) + "frequency\n";
  for (const auto& [bits, n] : rows) {
    char freq[32];
    std::snprintf(freq, sizeof freq, "%.6f",
                  static_cast<double>(n) / static_cast<double>(outcome.shots));
    out += pad(bits, bits_w) + pad(std::to_string(n), count_w) + freq + "\n";
  }
  out += "shots: " + std::to_string(outcome.shots) + "\n";
  out += "seed: " + std::to_string(outcome.seed) + "\n";
  return out;
}

}  // namespace qadl::sim
