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

#include "dense_oracle.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "qadl/sim/rng.hpp"

namespace qadl::testing {

Matrix embed(const Matrix& sub, std::span<const int> qubits, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::uint64_t reg_mask = 0;
  for (int q : qubits) reg_mask |= 1ull << q;
  auto reg_index = [&](std::uint64_t i) {
    Eigen::Index s = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      s |= static_cast<Eigen::Index>((i >> qubits[k]) & 1u) << k;
    }
    return s;
  };
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if ((static_cast<std::uint64_t>(i) & ~reg_mask) !=
          (static_cast<std::uint64_t>(j) & ~reg_mask))
        continue;
      m(i, j) = sub(reg_index(i), reg_index(j));
    }
  }
  return m;
}

Matrix dft(int m) {
  const Eigen::Index dim = Eigen::Index{1} << m;
  Matrix f(dim, dim);
  for (Eigen::Index y = 0; y < dim; ++y) {
    for (Eigen::Index x = 0; x < dim; ++x) {
      const double angle = 2 * std::numbers::pi * static_cast<double>((x * y) % dim) /
                           static_cast<double>(dim);
      f(y, x) = std::polar(1.0, angle) / std::sqrt(static_cast<double>(dim));
    }
  }
  return f;
}

Matrix gate_matrix(const ir::GateKind& kind, std::span<const int> qubits, int n) {
  using ir::GateType;
  const double r = 1 / std::sqrt(2.0);
  Matrix sub;
  switch (kind.type) {
    case GateType::Hadamard:
      sub.resize(2, 2);
      sub << r, r, r, -r;
      break;
    case GateType::PauliX:
      sub.resize(2, 2);
      sub << 0, 1, 1, 0;
      break;
    case GateType::PauliZ:
      sub.resize(2, 2);
      sub << 1, 0, 0, -1;
      break;
    case GateType::CNOT:
      // register index = control + 2 * target
      sub = Matrix::Zero(4, 4);
      sub(0, 0) = 1;
      sub(2, 2) = 1;
      sub(3, 1) = 1;
      sub(1, 3) = 1;
      break;
    case GateType::CZ:
      sub = Matrix::Identity(4, 4);
      sub(3, 3) = -1;
      break;
    case GateType::CRZ:
      sub = Matrix::Identity(4, 4);
      sub(1, 1) = std::polar(1.0, -kind.theta / 2);
      sub(3, 3) = std::polar(1.0, kind.theta / 2);
      break;
    case GateType::InverseQFT:
      sub = dft(static_cast<int>(qubits.size())).adjoint();
      break;
    case GateType::GroverOracle: {
      const Eigen::Index dim = Eigen::Index{1} << qubits.size();
      sub = Matrix::Identity(dim, dim);
      Eigen::Index s = 0;
      for (std::size_t k = 0; k < kind.marked.size(); ++k) {
        if (kind.marked[k] == '1') s |= Eigen::Index{1} << k;
      }
      sub(s, s) = -1;
      break;
    }
    case GateType::GroverDiffusion: {
      const Eigen::Index dim = Eigen::Index{1} << qubits.size();
      Vector uniform = Vector::Constant(dim, 1 / std::sqrt(static_cast<double>(dim)));
      sub = 2 * uniform * uniform.adjoint() - Matrix::Identity(dim, dim);
      break;
    }
  }
  return embed(sub, qubits, n);
}

Matrix projector(int q, int value, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix p = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (((i >> q) & 1) == value) p(i, i) = 1;
  }
  return p;
}

namespace {

struct Branch {
  Vector psi;
  std::vector<int> bits;
};

class DenseShot {
 public:
  DenseShot(const ir::CircuitIR& ir, std::uint64_t seed, std::uint64_t shot, Vector psi)
      : ir_(ir), rng_(sim::RngStream::for_shot(seed, shot)) {
    branch_.psi = std::move(psi);
    branch_.bits.assign(ir.cbit_names.size(), -1);
  }

  std::vector<Vector> run() {
    exec(ir_.ops);
    if (ir_.flow) {
      const ir::FlowNode* node = ir_.flow->find(ir_.flow->start);
      for (int steps = 0; node && steps < ir::kFlowStepLimit; ++steps) {
        exec(node->ops);
        const ir::FlowNode* next = nullptr;
        for (const ir::FlowEdge& e : ir_.flow->edges) {
          if (e.from != node->name) continue;
          if (e.guard && branch_.bits[e.guard->cbit] != e.guard->expected) continue;
          next = ir_.flow->find(e.to);
          break;
        }
        node = next;
      }
    }
    return std::move(states_);
  }

 private:
  void exec(const ir::OpList& ops) {
    const int n = ir_.n_qubits;
    for (const ir::IROp& op : ops) {
      if (const auto* g = std::get_if<ir::GateOp>(&op.op)) {
        branch_.psi = gate_matrix(g->kind, g->qubits, n) * branch_.psi;
        states_.push_back(branch_.psi);
      } else if (const auto* m = std::get_if<ir::MeasureOp>(&op.op)) {
        Vector one = projector(m->qubit, 1, n) * branch_.psi;
        const double p1 = one.squaredNorm();
        const int outcome = rng_.uniform() < p1 ? 1 : 0;
        Vector kept = projector(m->qubit, outcome, n) * branch_.psi;
        branch_.psi = kept / kept.norm();
        branch_.bits[m->cbit] = outcome;
        states_.push_back(branch_.psi);
      } else {
        const auto& c = std::get<ir::CondBlock>(op.op);
        if (branch_.bits[c.cbit] == c.expected) exec(c.body);
      }
    }
  }

  const ir::CircuitIR& ir_;
  sim::RngStream rng_;
  Branch branch_;
  std::vector<Vector> states_;
};

// Branch enumeration over a linear op list followed by a continuation that
// knows how to finish the shot (rest of enclosing lists, then the flow).
using Cont = std::function<void(Branch, double)>;

void walk(const ir::CircuitIR& ir, const ir::OpList& ops, std::size_t i, Branch b,
          double weight, const Cont& k) {
  const int n = ir.n_qubits;
  for (; i < ops.size(); ++i) {
    const ir::IROp& op = ops[i];
    if (const auto* g = std::get_if<ir::GateOp>(&op.op)) {
      b.psi = gate_matrix(g->kind, g->qubits, n) * b.psi;
    } else if (const auto* m = std::get_if<ir::MeasureOp>(&op.op)) {
      for (int outcome : {0, 1}) {
        Vector kept = projector(m->qubit, outcome, n) * b.psi;
        const double p = kept.squaredNorm();
        if (p < 1e-15) continue;
        Branch next{kept / std::sqrt(p), b.bits};
        next.bits[m->cbit] = outcome;
        walk(ir, ops, i + 1, std::move(next), weight * p, k);
      }
      return;
    } else {
      const auto& c = std::get<ir::CondBlock>(op.op);
      if (b.bits[c.cbit] == c.expected) {
        walk(ir, c.body, 0, std::move(b), weight, [&, i](Branch nb, double w) {
          walk(ir, ops, i + 1, std::move(nb), w, k);
        });
        return;
      }
    }
  }
  k(std::move(b), weight);
}

void enumerate_flow(const ir::CircuitIR& ir, const ir::FlowNode* node, Branch b,
                    double weight, int steps,
                    std::vector<std::pair<Branch, double>>& out) {
  if (!node || steps >= ir::kFlowStepLimit) {
    out.emplace_back(std::move(b), weight);
    return;
  }
  walk(ir, node->ops, 0, std::move(b), weight, [&](Branch nb, double w) {
    const ir::FlowNode* next = nullptr;
    for (const ir::FlowEdge& e : ir.flow->edges) {
      if (e.from != node->name) continue;
      if (e.guard && nb.bits[e.guard->cbit] != e.guard->expected) continue;
      next = ir.flow->find(e.to);
      break;
    }
    enumerate_flow(ir, next, std::move(nb), w, steps + 1, out);
  });
}

}  // namespace

std::vector<Vector> trajectory(const ir::CircuitIR& ir, std::uint64_t seed,
                               std::uint64_t shot, std::optional<Vector> initial) {
  Vector psi = initial ? *initial : Vector::Unit(Eigen::Index{1} << ir.n_qubits, 0);
  return DenseShot(ir, seed, shot, std::move(psi)).run();
}

std::map<std::string, double> exact_distribution(const ir::CircuitIR& ir) {
  std::vector<std::pair<Branch, double>> leaves;
  Branch start{Vector::Unit(Eigen::Index{1} << ir.n_qubits, 0),
               std::vector<int>(ir.cbit_names.size(), -1)};
  walk(ir, ir.ops, 0, std::move(start), 1.0, [&](Branch b, double w) {
    if (ir.flow) {
      enumerate_flow(ir, ir.flow->find(ir.flow->start), std::move(b), w, 0, leaves);
    } else {
      leaves.emplace_back(std::move(b), w);
    }
  });
  std::map<std::string, double> dist;
  for (const auto& [b, w] : leaves) {
    std::string key(b.bits.size(), '0');
    for (std::size_t i = 0; i < b.bits.size(); ++i) {
      if (b.bits[i] == 1) key[i] = '1';
    }
    dist[key] += w;
  }
  return dist;
}

Vector evolve(const ir::OpList& ops, int n, Vector psi) {
  for (const ir::IROp& op : ops) {
    const auto* g = std::get_if<ir::GateOp>(&op.op);
    if (!g) throw std::invalid_argument("evolve: op list contains non-gate ops");
    psi = gate_matrix(g->kind, g->qubits, n) * psi;
  }
  return psi;
}

}  // namespace qadl::testing
