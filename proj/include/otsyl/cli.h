// Copyright 2026 The otsyl Authors
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

#ifndef OTSYL_CLI_H_
#define OTSYL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace otsyl {

// Runs the command line given argv-style arguments (without the program
// name). Writes results to `out` and problems (plus the check
// subcommand's divergence log) to `err`.
//
// Exit status: 0 on success, 1 when `check` finds divergences in restart
// mode, 2 on usage or input errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace otsyl

#endif  // OTSYL_CLI_H_
