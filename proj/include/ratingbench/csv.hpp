// Copyright 2026 The ratingbench Authors
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

#ifndef RATINGBENCH_CSV_HPP_
#define RATINGBENCH_CSV_HPP_

#include <cmath>
#include <cstdio>
#include <string>

namespace ratingbench {

// Fixed-point formatting for CSV output; NaN prints as "nan".
inline std::string fmt_fixed(double value, int precision = 6) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

}  // namespace ratingbench

#endif  // RATINGBENCH_CSV_HPP_
