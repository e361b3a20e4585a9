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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qadl/ir/lower.hpp"
#include "qadl/sim/error.hpp"
#include "qadl/sim/kernels.hpp"
#include "qadl/sim/runner.hpp"
#include "support/dense_oracle.hpp"
#include "support/files.hpp"
#include "support/random_circuit.hpp"

namespace qadl::sim {
namespace {

namespace qt = qadl::testing;
using State = Statevector<double>;

State random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {g(rng), g(rng)};
  v.normalize();
  return State(n, v);
}

RunOptions single_options(int shots, std::uint64_t seed) {
  RunOptions o;
  o.shots = shots;
  o.seed = seed;
  return o;
}

double max_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

ir::CircuitIR compiled(const std::string& name) {
  ir::Compilation c = ir::compile(qt::sample(name));
  EXPECT_TRUE(c.ok()) << name;
  return *c.ir;
}

TEST(Kernels, EveryGateMatchesDenseMatrix) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    ir::GateOp g = qt::random_gate(rng, n);
    State s = random_state(rng, n);
    const Eigen::VectorXcd expected = qt::gate_matrix(g.kind, g.qubits, n) * s.amplitudes();
    apply_gate(s, g.kind, g.qubits);
    EXPECT_LT(max_diff(s.amplitudes(), expected), 1e-12)
        << ir::canonical_name(g.kind.type) << " n=" << n;
  }
}

TEST(Kernels, QftIsTheDft) {
  std::mt19937_64 rng(3);
  for (int m = 1; m <= 5; ++m) {
    std::vector<int> qubits(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) qubits[static_cast<std::size_t>(k)] = k;
    State s = random_state(rng, m);
    const Eigen::VectorXcd expected = qt::dft(m) * s.amplitudes();
    apply_qft(s, qubits);
    EXPECT_LT(max_diff(s.amplitudes(), expected), 1e-12) << m;
  }
}

TEST(Kernels, CrzOnBasisStates) {
  State s = State::basis(2, 3);  // control and target both 1
  apply_crz(s, 0, 1, std::numbers::pi);
  EXPECT_NEAR(std::abs(s[3] - std::complex<double>(0, 1)), 0, 1e-15);
  State t = State::basis(2, 2);  // control 0: untouched
  apply_crz(t, 0, 1, 1.0);
  EXPECT_EQ(t[2], std::complex<double>(1, 0));
}

TEST(Kernels, SelfInverseGatesAndRotationAdjoint) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    ir::GateOp g = qt::random_gate(rng, n);
    State s = random_state(rng, n);
    const State before = s;
    apply_gate(s, g.kind, g.qubits);
    if (g.kind.type == ir::GateType::CRZ) {
      ir::GateKind inv = g.kind;
      inv.theta = -inv.theta;
      apply_gate(s, inv, g.qubits);
    } else if (g.kind.type == ir::GateType::InverseQFT) {
      apply_qft(s, std::span<const int>(g.qubits));
    } else {
      apply_gate(s, g.kind, g.qubits);
    }
    EXPECT_LT(max_diff(s.amplitudes(), before.amplitudes()), 1e-10)
        << ir::canonical_name(g.kind.type);
  }
}

TEST(Kernels, InverseQftUndoesQft) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> qubits(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) qubits[static_cast<std::size_t>(k)] = n - 1 - k;
    State s = random_state(rng, n);
    const State before = s;
    apply_qft(s, qubits);
    apply_inverse_qft(s, qubits);
    EXPECT_LT(max_diff(s.amplitudes(), before.amplitudes()), 1e-12);
  }
}

TEST(Kernels, GroverIterations) {
  EXPECT_EQ(grover_iterations(2), 1);
  EXPECT_EQ(grover_iterations(3), 2);
  EXPECT_EQ(grover_iterations(4), 3);
}

TEST(Kernels, MeasurementCollapses) {
  State s(2);
  apply_hadamard(s, 0);
  apply_cnot(s, 0, 1);
  EXPECT_NEAR(probability_one(s, 1), 0.5, 1e-15);
  EXPECT_EQ(measure(s, 0, 0.25), 1);  // r < P(1)
  EXPECT_NEAR(std::abs(s[3]), 1.0, 1e-15);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  State t(1);
  EXPECT_EQ(measure(t, 0, 0.0), 0);
}

TEST(Rng, EngineMatchesStandardSequence) {
  std::mt19937_64 e;  // default seed 5489
  e.discard(9999);
  EXPECT_EQ(e(), 9981545732273789042ull);
  RngStream r(5489);
  for (int i = 0; i < 9999; ++i) r.next_u64();
  EXPECT_EQ(r.next_u64(), 9981545732273789042ull);
}

TEST(Rng, ShotStreamsAreIndependentOfOrder) {
  RngStream a = RngStream::for_shot(42, 7);
  RngStream b = RngStream::for_shot(42, 7);
  RngStream c = RngStream::for_shot(42, 8);
  for (int i = 0; i < 10; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_NE(a.uniform(), c.uniform());
}

TEST(Runner, DeterministicForEqualSeeds) {
  const ir::CircuitIR ir = compiled("teleportation.qadl");
  RunOptions o;
  o.shots = 500;
  o.seed = 99;
  SimOutcome a = run(ir, o);
  SimOutcome b = run(ir, o);
  EXPECT_EQ(a.records, b.records);
  EXPECT_EQ(format_counts_table(a), format_counts_table(b));
  o.seed = 100;
  EXPECT_NE(run(ir, o).records, a.records);
}

TEST(Runner, TrajectoryMatchesDenseOracle) {
  for (const char* name : qt::kSampleNames) {
    const ir::CircuitIR ir = compiled(name);
    for (int shot = 0; shot < 8; ++shot) {
      // Run shots 0..shot; the last shot's states end the observed sequence.
      std::vector<Eigen::VectorXcd> got;
      RunOptions o;
      o.shots = shot + 1;
      o.seed = 1234;
      o.observer = [&](const ir::IROp&, const State& s) { got.push_back(s.amplitudes()); };
      run(ir, o);
      const auto expected = qt::trajectory(ir, o.seed, static_cast<std::uint64_t>(shot));
      ASSERT_GE(got.size(), expected.size());
      const std::size_t start = got.size() - expected.size();
      for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_LT(max_diff(got[start + i], expected[i]), 1e-10) << name << " op " << i;
      }
    }
  }
}

TEST(Runner, NoCbitsMeansEmptyCounts) {
  ir::Compilation c = ir::compile("@startqadl\nCircuit U {\n    qubit a\n    gate H a\n}\n@endqadl\n");
  ASSERT_TRUE(c.ok());
  SimOutcome out = run(*c.ir, single_options(10, 1));
  EXPECT_TRUE(out.counts.empty());
  EXPECT_EQ(out.records.size(), 10u);
}

TEST(Runner, UnsetBitReadAborts) {
  ir::CircuitIR ir;
  ir.n_qubits = 1;
  ir.qubit_names = {"a"};
  ir.cbit_names = {"c"};
  ir::CondBlock cb;
  cb.cbit = 0;
  cb.body.push_back({ir::GateOp{{ir::GateType::PauliX, 0, ""}, {0}}, {}});
  ir.ops.push_back({std::move(cb), Span{3, 5, 2, 30}});
  try {
    run(ir, single_options(1, 0));
    FAIL() << "expected SimError";
  } catch (const SimError& e) {
    EXPECT_EQ(e.code(), DiagCode::UnsetCbitRead);
    EXPECT_EQ(e.span().line, 3);
  }
}

TEST(Runner, FlowCycleLimit) {
  ir::Compilation c = ir::compile(
      "@startqadl\nCircuit Loop {\n    qubit a\n    node A {\n        gate X a\n    }\n"
      "    flow start: A\n    edge A -> A\n}\n@endqadl\n");
  ASSERT_TRUE(c.ok());
  try {
    run(*c.ir, single_options(1, 0));
    FAIL() << "expected SimError";
  } catch (const SimError& e) {
    EXPECT_EQ(e.code(), DiagCode::FlowCycleLimitExceeded);
  }
}

TEST(Runner, DeadlineAborts) {
  const ir::CircuitIR ir = compiled("grover.qadl");
  RunOptions o;
  o.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  try {
    run(ir, o);
    FAIL() << "expected SimError";
  } catch (const SimError& e) {
    EXPECT_EQ(e.code(), DiagCode::SimulationTimeout);
  }
}

TEST(Runner, KeepStateAndInitialState) {
  const ir::CircuitIR ir = compiled("grover_canonical.qadl");
  RunOptions o;
  o.shots = 1;
  o.keep_state = true;
  SimOutcome out = run(ir, o);
  ASSERT_TRUE(out.final_state);
  EXPECT_NEAR(out.final_state->norm_squared(), 1.0, 1e-12);
  o.initial_state = State(2);
  EXPECT_THROW(run(ir, o), std::invalid_argument);
  EXPECT_THROW(run(ir, single_options(0, 0)), std::invalid_argument);
}

TEST(Runner, ExactDistributionOfCorrectedTeleport) {
  // q0 is prepared as H * diag(1, e^{-i pi/6}) * H |0>, so the teleported
  // qubit reads 1 with probability (1 - cos(pi/6)) / 2.
  const ir::CircuitIR ir = compiled("teleport_corrected.qadl");
  double p1 = 0;
  for (const auto& [bits, p] : qt::exact_distribution(ir)) p1 += bits[2] == '1' ? p : 0;
  EXPECT_NEAR(p1, (1 - std::cos(std::numbers::pi / 6)) / 2, 1e-12);
}

TEST(Runner, CountsTableFormat) {
  SimOutcome out;
  out.cbit_names = {"c0", "c1"};
  out.shots = 4;
  out.seed = 17;
  out.records = {"01", "11", "01", "00"};
  out.counts = {{"01", 2}, {"11", 1}, {"00", 1}};
  EXPECT_EQ(format_counts_table(out),
            "bitstring  count  frequency\n"
            "01         2      0.500000\n"
            "00         1      0.250000\n"
            "11         1      0.250000\n"
            "shots: 4\n"
            "seed: 17\n");
  const std::vector<double> m = marginals(out);
  EXPECT_DOUBLE_EQ(m[0], 0.25);
  EXPECT_DOUBLE_EQ(m[1], 0.75);
}

}  // namespace
}  // namespace qadl::sim
