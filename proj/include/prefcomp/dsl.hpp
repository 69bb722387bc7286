// Copyright 2026 The prefcomp Authors
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

#ifndef PREFCOMP_DSL_HPP
#define PREFCOMP_DSL_HPP

// Line-oriented text format for statement sets:
//
//   # comment
//   feature A { a, a! }
//   pref C | A=a & B=b : c > c!
//
// Features must be declared before they are referenced.

#include <string>
#include <string_view>

#include "prefcomp/model.hpp"

namespace prefcomp {

// Throws ParseError with the line and column of the first problem.
StatementSet parse_statements(std::string_view text);

std::string serialize(const StatementSet& set);

}  // namespace prefcomp

#endif  // PREFCOMP_DSL_HPP
