// Copyright 2026 The auraspace Authors
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

#ifndef AURASPACE_CLI_HPP_
#define AURASPACE_CLI_HPP_

#include <iosfwd>

namespace auraspace {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // law violation, corpus mismatch, invalid space
inline constexpr int kExitUsage = 2;    // bad flags, unreadable or unparsable input
inline constexpr int kExitScale = 3;    // request beyond enumeration caps

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace auraspace

#endif  // AURASPACE_CLI_HPP_
