// Copyright 2026 The sublocal Authors
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

#include <iosfwd>

namespace sublocal::cli {

/// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kIoOrParse = 2;
inline constexpr int kNotSlOrFailed = 3;
inline constexpr int kDomain = 4;

/// Runs one command line. Machine-readable JSON goes to `out`, messages to
/// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sublocal::cli
