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

#ifndef RATINGBENCH_TESTS_HELPERS_HPP_
#define RATINGBENCH_TESTS_HELPERS_HPP_

#include <string>

#include "ratingbench/dataset.hpp"

namespace ratingbench::testing {

inline Team make_team(const std::string& id) {
  Team t;
  t.id = id;
  for (std::size_t i = 0; i < kRosterSize; ++i) t.roster[i] = id + "_p" + std::to_string(i + 1);
  return t;
}

inline MatchRecord make_match(const std::string& id, const std::string& a, const std::string& b,
                              Outcome outcome, std::int64_t ts = 0) {
  return MatchRecord{id, make_team(a), make_team(b), outcome, ts};
}

}  // namespace ratingbench::testing

#endif  // RATINGBENCH_TESTS_HELPERS_HPP_
