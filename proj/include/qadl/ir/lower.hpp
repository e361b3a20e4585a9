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

#ifndef QADL_IR_LOWER_HPP_
#define QADL_IR_LOWER_HPP_

#include <optional>
#include <string_view>

#include "qadl/ir/circuit.hpp"
#include "qadl/syntax/ast.hpp"

namespace qadl::ir {

struct LowerResult {
  std::optional<CircuitIR> ir;  // set only when there are no errors
  Diagnostics diagnostics;

  bool ok() const { return ir.has_value(); }
};

/// Resolves names, evaluates parameters, expands broadcasts and unrolls
/// repeat blocks. Qubit wires follow declaration order; classical bits are
/// registered in the order they first appear as a measurement target.
LowerResult lower(const syntax::SyntaxTree& tree);

/// Evaluates a numeric parameter expression; nullopt with `reason` set for
/// bitstrings or non-finite results.
std::optional<double> evaluate(const syntax::ParamExpr& expr,
                               std::string* reason = nullptr);

/// Output of the whole front end for one source text.
struct Compilation {
  std::optional<syntax::SyntaxTree> tree;
  std::optional<CircuitIR> ir;
  Diagnostics diagnostics;

  bool ok() const { return ir.has_value() && !has_errors(diagnostics); }
};

/// tokenize, parse and lower. Lowering runs only when parsing succeeded.
Compilation compile(std::string_view source);

}  // namespace qadl::ir

#endif  // QADL_IR_LOWER_HPP_
