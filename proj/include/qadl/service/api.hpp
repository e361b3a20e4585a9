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

#ifndef QADL_SERVICE_API_HPP_
#define QADL_SERVICE_API_HPP_

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qadl/syntax/diagnostic.hpp"

namespace qadl::service {

inline constexpr std::string_view kVersion = "0.1.0";
/// Requests with larger bodies are rejected with 413.
inline constexpr std::size_t kMaxBodyBytes = std::size_t{1} << 20;
/// Wall-clock budget for one /api/simulate call.
inline constexpr std::chrono::milliseconds kSimulationBudget{10'000};
inline constexpr int kMaxShots = 1'000'000;

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// Dispatches one request. The function keeps no state between calls, so
/// the HTTP layer may invoke it concurrently.
///
/// POST bodies are `{"source": text, "options": {...}}`. `source` may also be
/// an architecture description (as text or as a JSON object). Successful and
/// language-level failures answer 200 with
/// `{"ok": bool, "diagnostics": [...], "result": ...}`; malformed requests
/// answer 400 with an `error` object.
ApiResponse handle(std::string_view method, std::string_view path,
                   std::string_view body);

/// `{severity, code, message, line, col, len[, hint]}` per diagnostic.
nlohmann::json diagnostics_json(const Diagnostics& diags);

/// Body used for every non-200 answer.
nlohmann::json error_body(std::string_view code, std::string_view message);

}  // namespace qadl::service

#endif  // QADL_SERVICE_API_HPP_
