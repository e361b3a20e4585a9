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

#ifndef QADL_TESTS_SUPPORT_PROCESS_HPP_
#define QADL_TESTS_SUPPORT_PROCESS_HPP_

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "files.hpp"

namespace qadl::testing {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string temp_path(const std::string& suffix) {
  static std::atomic<int> counter{0};
  return (std::filesystem::temp_directory_path() /
          ("qadl_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + suffix))
      .string();
}

inline std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

/// Runs the CLI with `args` (already quoted as needed) through /bin/sh.
inline ProcessResult run_cli(const std::string& args, const std::string& stdin_text = "",
                             const std::string& env = "") {
  const std::string in = temp_path(".in");
  const std::string out = temp_path(".out");
  const std::string err = temp_path(".err");
  write_file(in, stdin_text);
  const std::string cmd = env + " " + shell_quote(QADL_CLI_PATH) + " " + args + " <" +
                          shell_quote(in) + " >" + shell_quote(out) + " 2>" + shell_quote(err);
  const int status = std::system(cmd.c_str());
  ProcessResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

}  // namespace qadl::testing

#endif  // QADL_TESTS_SUPPORT_PROCESS_HPP_
