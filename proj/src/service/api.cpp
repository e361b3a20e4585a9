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

#include "qadl/service/api.hpp"

#include <charconv>
#include <random>

#include "qadl/render/arch.hpp"
#include "qadl/render/render.hpp"
#include "qadl/service/input.hpp"
#include "qadl/sim/error.hpp"
#include "qadl/sim/runner.hpp"

namespace qadl::service {

using nlohmann::json;

namespace {

// Thrown for requests that cannot be interpreted at all (400).
struct BadRequest {
  std::string message;
};

struct Request {
  std::string source;
  json options = json::object();
};

Request parse_request(std::string_view body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw BadRequest{"request body is not valid JSON"};
  if (!doc.is_object()) throw BadRequest{"request body must be a JSON object"};
  Request req;
  if (!doc.contains("source")) throw BadRequest{"missing field 'source'"};
  const json& src = doc["source"];
  if (src.is_string()) {
    req.source = src.get<std::string>();
  } else if (src.is_object()) {
    req.source = src.dump();  // architecture description sent inline
  } else {
    throw BadRequest{"'source' must be a string or an architecture description"};
  }
  if (doc.contains("options") && !doc["options"].is_null()) {
    if (!doc["options"].is_object()) throw BadRequest{"'options' must be an object"};
    req.options = doc["options"];
  }
  return req;
}

int shots_option(const json& options) {
  if (!options.contains("shots")) return 1024;
  const json& v = options["shots"];
  if (!v.is_number_integer()) throw BadRequest{"'options.shots' must be an integer"};
  const auto shots = v.get<long long>();
  if (shots < 1 || shots > kMaxShots) {
    throw BadRequest{"'options.shots' must be between 1 and " +
                     std::to_string(kMaxShots)};
  }
  return static_cast<int>(shots);
}

std::uint64_t seed_option(const json& options) {
  if (!options.contains("seed") || options["seed"].is_null()) {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  const json& v = options["seed"];
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) {
    // Seeds above 2^53 do not survive a round trip through JavaScript
    // numbers, so the decimal string form is accepted too.
    const std::string s = v.get<std::string>();
    std::uint64_t seed = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (r.ec == std::errc() && r.ptr == s.data() + s.size() && !s.empty()) return seed;
  }
  throw BadRequest{"'options.seed' must be a non-negative integer"};
}

std::string format_option(const json& options) {
  if (!options.contains("format")) return "text";
  const json& v = options["format"];
  if (!v.is_string()) throw BadRequest{"'options.format' must be a string"};
  std::string f = v.get<std::string>();
  if (f != "text" && f != "svg") {
    throw BadRequest{"unsupported format '" + f + "' (expected text or svg)"};
  }
  return f;
}

bool ascii_option(const json& options) {
  if (!options.contains("ascii_only")) return false;
  if (!options["ascii_only"].is_boolean()) {
    throw BadRequest{"'options.ascii_only' must be a boolean"};
  }
  return options["ascii_only"].get<bool>();
}

json envelope(bool ok, const Diagnostics& diags) {
  return json{{"ok", ok}, {"diagnostics", diagnostics_json(diags)}};
}

std::string file_stem(const ir::CircuitIR& ir) {
  return ir.name.empty() ? std::string("circuit") : ir.name;
}

json summary(const ir::CircuitIR& ir, bool from_arch) {
  const ir::OpCounts counts = ir::count_ops(ir);
  return json{{"name", ir.name},
              {"input", from_arch ? "arch" : "script"},
              {"qubits", ir.n_qubits},
              {"cbits", ir.cbit_names.size()},
              {"qubit_names", ir.qubit_names},
              {"cbit_names", ir.cbit_names},
              {"gates", counts.gates},
              {"measures", counts.measures},
              {"conditionals", counts.cond_blocks},
              {"flow_nodes", ir.flow ? ir.flow->nodes.size() : 0}};
}

json do_parse(const Request& req) {
  LoadedCircuit c = load_circuit(req.source);
  json out = envelope(c.ok(), c.diagnostics);
  if (c.ok()) out["result"] = summary(*c.ir, is_arch_document(req.source));
  return out;
}

json do_render(const Request& req) {
  const std::string format = format_option(req.options);
  const bool ascii = ascii_option(req.options);
  LoadedCircuit c = load_circuit(req.source);
  json out = envelope(c.ok(), c.diagnostics);
  if (!c.ok()) return out;
  const render::Diagram d = render::layout(*c.ir);
  const bool svg = format == "svg";
  out["result"] = {
      {"format", format},
      {"filename", file_stem(*c.ir) + (svg ? ".svg" : ".txt")},
      {"document", svg ? render::render_svg(d)
                       : render::render_text(d, render::TextOptions{ascii})}};
  return out;
}

json do_simulate(const Request& req) {
  sim::RunOptions opts;
  opts.shots = shots_option(req.options);
  opts.seed = seed_option(req.options);
  LoadedCircuit c = load_circuit(req.source);
  if (!c.ok()) return envelope(false, c.diagnostics);
  Diagnostics diags = c.diagnostics;
  if (c.ir->cbit_names.empty()) {
    diags.push_back(Diagnostic::warning(
        DiagCode::NoMeasurements, "circuit has no measurements; counts are empty",
        Span{1, 1, 0, 0}));
  }
  opts.deadline = std::chrono::steady_clock::now() + kSimulationBudget;
  sim::SimOutcome outcome;
  try {
    outcome = sim::run(*c.ir, opts);
  } catch (const sim::SimError& e) {
    diags.push_back(e.to_diagnostic());
    return envelope(false, diags);
  }
  json counts = json::object();
  for (const auto& [bits, n] : sim::sorted_counts(outcome)) counts[bits] = n;
  json marginals = json::object();
  const std::vector<double> m = sim::marginals(outcome);
  for (std::size_t i = 0; i < m.size(); ++i) marginals[outcome.cbit_names[i]] = m[i];
  json out = envelope(true, diags);
  out["result"] = {{"counts", std::move(counts)},
                   {"marginals", std::move(marginals)},
                   {"cbits", outcome.cbit_names},
                   {"shots", outcome.shots},
                   {"seed", outcome.seed},
                   {"seed_text", std::to_string(outcome.seed)},
                   {"table", sim::format_counts_table(outcome)}};
  return out;
}

json do_export(const Request& req) {
  LoadedCircuit c = load_circuit(req.source);
  json out = envelope(c.ok(), c.diagnostics);
  if (!c.ok()) return out;
  out["result"] = {{"filename", file_stem(*c.ir) + std::string(render::kArchExtension)},
                   {"document", render::export_description(*c.ir)},
                   {"text", render::export_description_text(*c.ir)}};
  return out;
}

}  // namespace

json diagnostics_json(const Diagnostics& diags) {
  json out = json::array();
  for (const Diagnostic& d : diags) {
    json j{{"severity", severity_name(d.severity)},
           {"code", code_name(d.code)},
           {"message", d.message},
           {"line", d.span.line},
           {"col", d.span.col},
           {"len", d.span.len}};
    if (d.hint) j["hint"] = *d.hint;
    out.push_back(std::move(j));
  }
  return out;
}

json error_body(std::string_view code, std::string_view message) {
  return json{{"ok", false},
              {"diagnostics", json::array()},
              {"error", {{"code", code}, {"message", message}}}};
}

ApiResponse handle(std::string_view method, std::string_view path,
                   std::string_view body) {
  if (path == "/api/health") {
    if (method != "GET") return {405, error_body("MethodNotAllowed", "use GET")};
    return {200, json{{"status", "ok"}, {"version", kVersion}}};
  }
  json (*op)(const Request&) = nullptr;
  if (path == "/api/parse") op = do_parse;
  else if (path == "/api/render") op = do_render;
  else if (path == "/api/simulate") op = do_simulate;
  else if (path == "/api/export") op = do_export;
  if (!op) {
    return {404, error_body("NotFound", "no endpoint " + std::string(path))};
  }
  if (method != "POST") return {405, error_body("MethodNotAllowed", "use POST")};
  if (body.size() > kMaxBodyBytes) {
    return {413, error_body("PayloadTooLarge", "request body exceeds 1 MiB")};
  }
  try {
    return {200, op(parse_request(body))};
  } catch (const BadRequest& e) {
    return {400, error_body("BadRequest", e.message)};
  }
}

}  // namespace qadl::service
