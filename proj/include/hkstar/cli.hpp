// Copyright 2026 The hkstar Authors
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

#include <string>
#include <vector>

namespace hkstar {

struct CommandResult {
  int exit_code = 0;  // 0 ok, 1 property violation, 2 usage or input error
  std::string out;    // data
  std::string err;    // diagnostics and timings
};

/// Runs one verb. `args` excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace hkstar
