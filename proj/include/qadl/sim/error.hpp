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

#ifndef QADL_SIM_ERROR_HPP_
#define QADL_SIM_ERROR_HPP_

#include <stdexcept>
#include <string>

#include "qadl/syntax/diagnostic.hpp"

namespace qadl::sim {

/// Aborts a shot. Carries enough to be reported as a Diagnostic.
class SimError : public std::runtime_error {
 public:
  SimError(DiagCode code, const std::string& message, Span span = {})
      : std::runtime_error(message), code_(code), span_(span) {}

  DiagCode code() const { return code_; }
  const Span& span() const { return span_; }

  Diagnostic to_diagnostic() const {
    return Diagnostic::error(code_, what(), span_);
  }

 private:
  DiagCode code_;
  Span span_;
};

}  // namespace qadl::sim

#endif  // QADL_SIM_ERROR_HPP_
