// Copyright 2026 The ghzprep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ghzprep::cli {

struct RunConfig {
  std::string subcommand;  // prepare | search | analyze
  int qubits = 0;
  std::string method = "auto";   // auto | direct | reinit | retard
  std::string variant = "plus";  // plus | minus
  std::vector<std::uint64_t> marked;
  std::string format = "json";   // json | csv | text
  std::string dump_trajectory;   // CSV path; empty = none
  bool validate = false;         // dense-oracle cross-check (n <= 8)
  bool full_state = false;       // dump the whole amplitude vector (n <= 16)
};

// Exit codes: 0 success, 2 usage error, 3 numerical failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int cmd_prepare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ghzprep::cli
