// Copyright 2026 The colotto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLOTTO_ERRORS_HPP_
#define COLOTTO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace colotto {

// Raised when an input violates a documented parameter constraint.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised for malformed sweep grids and CLI configuration.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Raised when a computation reaches a state the closed-form analysis rules
// out (failed root bracket, violated payoff conservation). The message
// carries the offending game for reproduction.
class InconsistencyError : public std::logic_error {
 public:
  explicit InconsistencyError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace colotto

#endif  // COLOTTO_ERRORS_HPP_
