// Copyright 2026 The emocov Authors.
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

#ifndef EMOCOV_CLI_H_
#define EMOCOV_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace emocov {

// Entry point of the emocov command line tool. `args` excludes the program
// name. Machine-readable results go to `out` or to files; progress and error
// records go to `err`.
//
// Exit codes: 0 success, 2 usage, 3 endpoint failure, 4 data error.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace emocov

#endif  // EMOCOV_CLI_H_
