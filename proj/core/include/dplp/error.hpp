//
// Copyright 2026 The DPLP Authors
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
//

#ifndef DPLP_ERROR_HPP_
#define DPLP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dplp {

// Raised when a text input (edge list, score file) cannot be parsed.
// Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           message),
        line_number_(line_number) {}

  std::size_t line_number() const { return line_number_; }

 private:
  std::size_t line_number_;
};

}  // namespace dplp

#endif  // DPLP_ERROR_HPP_
