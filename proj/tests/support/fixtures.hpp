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

#ifndef PREFCOMP_TESTS_FIXTURES_HPP
#define PREFCOMP_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "prefcomp/dsl.hpp"

namespace prefcomp::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(PREFCOMP_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline StatementSet load(const std::string& name) {
  return parse_statements(read_data(name));
}

}  // namespace prefcomp::testing

#endif  // PREFCOMP_TESTS_FIXTURES_HPP
