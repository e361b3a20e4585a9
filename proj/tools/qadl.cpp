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

// qadl: command-line front end for checking, simulating, rendering and
// exporting QADL scripts.
//
// Exit codes: 0 success, 1 language or simulation error, 2 I/O or usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "qadl/render/arch.hpp"
#include "qadl/render/render.hpp"
#include "qadl/service/api.hpp"
#include "qadl/service/input.hpp"
#include "qadl/service/server.hpp"
#include "qadl/sim/error.hpp"
#include "qadl/sim/runner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kLanguageError = 1;
constexpr int kEnvironmentError = 2;

struct Input {
  std::string display_name;
  std::string text;
};

std::optional<Input> read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    if (std::cin.bad()) return std::nullopt;
    return Input{"<stdin>", buf.str()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return Input{path, buf.str()};
}

void report_io(const std::string& what, const std::string& path) {
  const qadl::Diagnostic d = qadl::Diagnostic::error(
      qadl::DiagCode::IoError, "cannot " + what + " '" + path + "'", qadl::Span{1, 1, 0, 0});
  std::cerr << "qadl: " << qadl::severity_name(d.severity) << ": " << d.message << "\n";
}

void print_diagnostics(const qadl::Diagnostics& diags, const std::string& file) {
  for (const qadl::Diagnostic& d : diags) {
    std::cerr << qadl::format_diagnostic(d, file) << "\n";
  }
}

void print_machine_diagnostics(const qadl::Diagnostics& diags, const std::string& file) {
  for (nlohmann::json j : qadl::service::diagnostics_json(diags)) {
    j["file"] = file;
    std::cout << j.dump() << "\n";
  }
}

// Writes to --output when given, stdout otherwise.
bool emit(const std::string& output, const std::string& document) {
  if (output.empty() || output == "-") {
    std::cout << document;
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(output, std::ios::binary);
  out << document;
  out.close();
  return static_cast<bool>(out);
}

std::optional<std::uint64_t> parse_seed(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    const std::uint64_t next = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (next / 10 != v) return std::nullopt;
    v = next;
  }
  return v;
}

std::string format_state(const qadl::sim::Statevector<double>& state) {
  std::string out = "state:\n";
  const int n = state.n_qubits();
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    const std::complex<double> a = state[i];
    if (std::abs(a) < 1e-12) continue;
    std::string ket(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
      if ((i >> q) & 1) ket[static_cast<std::size_t>(n - 1 - q)] = '1';
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "  |%s>  %+.10f %+.10fi\n", ket.c_str(), a.real(),
                  a.imag());
    out += buf;
  }
  return out;
}

struct Common {
  std::string path;
  std::string format;
  std::string output;
};

// Loads the circuit and prints its diagnostics. Returns an exit code when
// the command cannot continue.
std::optional<int> load(const Common& c, qadl::service::LoadedCircuit& loaded,
                        std::string& display, bool machine = false) {
  std::optional<Input> in = read_input(c.path);
  if (!in) {
    report_io("read", c.path);
    return kEnvironmentError;
  }
  display = in->display_name;
  loaded = qadl::service::load_circuit(in->text);
  if (machine) {
    print_machine_diagnostics(loaded.diagnostics, display);
  } else {
    print_diagnostics(loaded.diagnostics, display);
  }
  if (!loaded.ok()) return kLanguageError;
  return std::nullopt;
}

int cmd_check(const Common& c) {
  qadl::service::LoadedCircuit loaded;
  std::string display;
  if (auto code = load(c, loaded, display, c.format == "machine-diagnostics")) return *code;
  return kOk;
}

int cmd_run(const Common& c, int shots, const std::string& seed_text, bool keep_state) {
  std::uint64_t seed = 0;
  if (!seed_text.empty()) {
    auto s = parse_seed(seed_text);
    if (!s) {
      std::cerr << "qadl: error: invalid --seed '" << seed_text << "'\n";
      return kEnvironmentError;
    }
    seed = *s;
  } else if (const char* env = std::getenv("QADL_SEED"); env && *env) {
    auto s = parse_seed(env);
    if (!s) {
      std::cerr << "qadl: error: invalid QADL_SEED '" << env << "'\n";
      return kEnvironmentError;
    }
    seed = *s;
  } else {
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  if (keep_state && shots != 1) {
    std::cerr << "qadl: error: --keep-state requires --shots 1\n";
    return kEnvironmentError;
  }

  qadl::service::LoadedCircuit loaded;
  std::string display;
  if (auto code = load(c, loaded, display)) return *code;
  if (loaded.ir->cbit_names.empty()) {
    print_diagnostics({qadl::Diagnostic::warning(
                          qadl::DiagCode::NoMeasurements,
                          "circuit has no measurements; counts are empty",
                          qadl::Span{1, 1, 0, 0})},
                      display);
  }
  qadl::sim::RunOptions opts;
  opts.shots = shots;
  opts.seed = seed;
  opts.keep_state = keep_state;
  qadl::sim::SimOutcome outcome;
  try {
    outcome = qadl::sim::run(*loaded.ir, opts);
  } catch (const qadl::sim::SimError& e) {
    print_diagnostics({e.to_diagnostic()}, display);
    return kLanguageError;
  }
  std::string document = qadl::sim::format_counts_table(outcome);
  if (outcome.final_state) document += format_state(*outcome.final_state);
  if (!emit(c.output, document)) {
    report_io("write", c.output);
    return kEnvironmentError;
  }
  return kOk;
}

int cmd_render(const Common& c, bool ascii_only) {
  qadl::service::LoadedCircuit loaded;
  std::string display;
  if (auto code = load(c, loaded, display)) return *code;
  std::string document;
  if (c.format == "arch") {
    document = qadl::render::export_description_text(*loaded.ir);
  } else {
    const qadl::render::Diagram d = qadl::render::layout(*loaded.ir);
    document = c.format == "svg" ? qadl::render::render_svg(d)
                                 : qadl::render::render_text(d, {ascii_only});
  }
  if (!emit(c.output, document)) {
    report_io("write", c.output);
    return kEnvironmentError;
  }
  return kOk;
}

int cmd_serve(int port, const std::string& host, const std::string& static_dir) {
  qadl::service::Server server({host, port, static_dir});
  if (server.bind() < 0) {
    std::cerr << "qadl: error: cannot listen on " << host << ":" << port << "\n";
    return kEnvironmentError;
  }
  std::cerr << "qadl: serving on http://" << host << ":" << server.port() << "\n";
  return server.listen() ? kOk : kEnvironmentError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QADL script toolchain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qadl::service::kVersion));

  Common common;
  int shots = 1024;
  std::string seed;
  bool keep_state = false;
  bool ascii_only = false;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string static_dir;

  auto add_path = [&](CLI::App* sub) {
    sub->add_option("path", common.path, "Script or .qadl.arch file; '-' reads stdin")
        ->required();
  };

  CLI::App* check = app.add_subcommand("check", "Validate a script");
  add_path(check);
  common.format = "text";
  check->add_option("--format", common.format, "Diagnostic format")
      ->check(CLI::IsMember({"text", "machine-diagnostics"}));

  CLI::App* run = app.add_subcommand("run", "Simulate and print measurement counts");
  add_path(run);
  run->add_option("--shots", shots, "Number of shots")->check(CLI::Range(1, 1'000'000));
  run->add_option("--seed", seed, "RNG seed (default: $QADL_SEED, else random)");
  run->add_flag("--keep-state", keep_state, "Print the final statevector (needs --shots 1)");
  run->add_option("--output,-o", common.output, "Write the table to a file");

  CLI::App* render = app.add_subcommand("render", "Draw the circuit diagram");
  add_path(render);
  std::string render_format = "text";
  render->add_option("--format", render_format, "Document format")
      ->check(CLI::IsMember({"text", "svg", "arch"}));
  render->add_flag("--ascii-only", ascii_only, "Use plain ASCII in text diagrams");
  render->add_option("--output,-o", common.output, "Write the document to a file");

  CLI::App* exp = app.add_subcommand("export", "Write the architecture description");
  add_path(exp);
  exp->add_option("--output,-o", common.output, "Write the document to a file");

  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", port, "Port to listen on (0 picks a free one)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--static-dir", static_dir, "UI assets served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kEnvironmentError;
  }

  if (check->parsed()) return cmd_check(common);
  if (run->parsed()) return cmd_run(common, shots, seed, keep_state);
  if (render->parsed()) {
    common.format = render_format;
    return cmd_render(common, ascii_only);
  }
  if (exp->parsed()) {
    common.format = "arch";
    return cmd_render(common, false);
  }
  if (serve->parsed()) return cmd_serve(port, host, static_dir);
  return kEnvironmentError;
}
