// Copyright 2026 The auraspace Authors
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

#ifndef AURASPACE_TESTS_SUPPORT_HPP_
#define AURASPACE_TESTS_SUPPORT_HPP_

#include <string>

#include "auraspace/enumeration.hpp"
#include "auraspace/point_set.hpp"
#include "auraspace/space_io.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(AURASPACE_FIXTURES_DIR) + "/" + name; }

inline auraspace::IdealAuraSpace fixture(const std::string& name) {
  return auraspace::load_space(fixture_path(name + ".json"));
}

inline auraspace::PointSet set(const auraspace::IdealAuraSpace& s, const std::string& text) {
  return auraspace::parse_set(s.universe(), text);
}

/// Calls fn(space) for every enumerated space on lo..hi points.
template <class Fn>
void for_each_space(int lo, int hi, Fn&& fn) {
  const auto source = auraspace::SpaceSource::exhaustive(lo, hi);
  for (std::uint64_t i = 0; i < source.size(); ++i) fn(source.at(i));
}

}  // namespace testing

#endif  // AURASPACE_TESTS_SUPPORT_HPP_
