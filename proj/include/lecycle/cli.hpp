/*
   Copyright 2026 The lecycle Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lecycle {

/// Process exit codes.
enum ExitCode : int {
    kExitPass = 0,
    kExitFail = 1,    ///< assertion failure or computation error
    kExitInput = 2,   ///< unusable input or flags
    kExitBudget = 3,  ///< step budget exhausted
};

/// Default step budget, read from this variable when set.
inline constexpr const char* kBudgetEnv = "LECYCLE_BUDGET";

/// Runs one command. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with args excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lecycle
