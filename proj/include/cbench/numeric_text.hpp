// Copyright 2026 The corruption-bench Authors
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

namespace cbench {

/// Shortest text that parses back to exactly `v`.
std::string format_double(double v);

/// Strict whole-token parse of a finite number. Throws ParameterError
/// prefixed with `where`.
double parse_double(const std::string& tok, const std::string& where);

}  // namespace cbench
