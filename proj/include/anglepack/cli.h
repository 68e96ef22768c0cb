// Copyright 2026 The anglepack Authors
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

// Subcommands of the anglepack tool. `args` excludes the program and
// subcommand names.
//
// Exit codes: 0 solved (optimal or feasible), 1 infeasible or invalid
// layout, 2 time limit or budget hit without an answer, 3 invalid input.

#ifndef ANGLEPACK_CLI_H_
#define ANGLEPACK_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace anglepack::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitTimeout = 2;
inline constexpr int kExitInvalid = 3;

int run_solve(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err);
int run_validate(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);
int run_oracle(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);
int run_render(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);
int run_bench(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err);

// args[0] names the subcommand.
int run_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace anglepack::cli

#endif  // ANGLEPACK_CLI_H_
