// Copyright 2026 The Suzuki Groups Authors
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

// In-process entry point for the command-line tool, so tests can drive it
// without spawning a process.
//
//   suzuki [--machine] <subcommand> ...
//
// Exit codes: 0 success / member / pass / vacuous, 1 negative answer
// (non-member, failed suite or identity), 2 malformed input or usage error.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace suzuki::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suzuki::cli
