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

#ifndef DPLP_FORMAT_HPP_
#define DPLP_FORMAT_HPP_

#include <cstdio>
#include <stdexcept>
#include <string>

namespace dplp {

// Fixed formatting for CSV bodies: identical values must render to identical
// bytes. NaN/Inf are never emitted; callers gate degenerate values.
inline std::string format_double(double x) {
  if (!(x == x) || x == 1.0 / 0.0 || x == -1.0 / 0.0) {
    throw std::invalid_argument("refusing to format NaN/Inf");
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace dplp

#endif  // DPLP_FORMAT_HPP_
