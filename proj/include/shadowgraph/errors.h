// Copyright 2026 The Shadowgraph Authors
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

#ifndef SHADOWGRAPH_ERRORS_H_
#define SHADOWGRAPH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace shadowgraph {

// A caller-supplied argument violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what)
      : std::invalid_argument(what) {}
};

// An exact enumeration would exceed the configured state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// An experiment configuration is malformed or inconsistent.
class InvalidConfig : public std::invalid_argument {
 public:
  explicit InvalidConfig(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_ERRORS_H_
