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

#include <doctest.h>

#include <json.hpp>

#include "auraspace/space_io.hpp"
#include "support.hpp"

using namespace auraspace;

TEST_SUITE("space_io") {

TEST_CASE("point sets") {
  const Universe u = Universe::letters(4);
  CHECK(format_set(u, parse_set(u, "{d,a}")) == "{a,d}");
  CHECK(format_set(u, parse_set(u, "{}")) == "{}");
  CHECK_THROWS_AS(parse_set(u, "{a,z}"), SpaceError);
  CHECK_THROWS_AS(parse_set(u, "a,b"), SpaceError);
  CHECK(complement(PointSet::of({0, 2}), 4) == PointSet::of({1, 3}));
  int count = 0;
  for_each_subset(PointSet::of({1, 3}), [&](PointSet) { ++count; });
  CHECK(count == 4);
}

TEST_CASE("topology validation lists every violation") {
  const Universe u = Universe::letters(3);
  const auto v = validate_topology(u, SetFamily{PointSet::of({0}), PointSet::of({1})});
  REQUIRE(!v.ok());
  bool missing_empty = false, missing_full = false, not_union = false;
  for (const auto& x : v.violations()) {
    missing_empty |= x.kind == ViolationKind::MissingEmpty;
    missing_full |= x.kind == ViolationKind::MissingFull;
    not_union |= x.kind == ViolationKind::NotUnionClosed;
  }
  CHECK(missing_empty);
  CHECK(missing_full);
  CHECK(not_union);
}

TEST_CASE("ideal validation") {
  const Universe u = Universe::letters(2);
  CHECK(!validate_ideal(u, SetFamily{PointSet{}, PointSet::of({0, 1})}).ok());
  CHECK(validate_ideal(u, SetFamily{PointSet{}, PointSet::of({0})}).ok());
  const Ideal gen = ideal_from_generators(u, SetFamily{PointSet::of({0}), PointSet::of({1})});
  CHECK(gen.is_improper());
}

TEST_CASE("scope validation") {
  const Universe u = Universe::letters(2);
  const auto t = FiniteTopology::make(u, SetFamily{PointSet{}, PointSet::of({0}), u.full()});
  CHECK(validate_scope(t, {PointSet::of({0}), u.full()}).ok());
  CHECK(!validate_scope(t, {PointSet::of({1}), u.full()}).ok());
  CHECK(!validate_scope(t, {PointSet::of({0})}).ok());
}

TEST_CASE("space files: canonical round trip and order independence") {
  const char* shuffled = R"({"points": ["a","b","c"],
    "opens": [["a","b","c"],["a","b"],["b"],["a"],[]],
    "ideal": {"generators": [["c"]]},
    "aura": {"c": ["c","b","a"], "b": ["b","a"], "a": ["a"]}})";
  const auto s = parse_space(shuffled);
  const std::string canon = serialize_space(s);
  CHECK(serialize_space(parse_space(canon)) == canon);
  CHECK(parse_space(canon) == testing::fixture("strict-inclusion"));
  const auto doc = nlohmann::json::parse(canon);
  CHECK(doc["format"] == "auraspace/1");
}

TEST_CASE("space files: malformed input collects problems") {
  try {
    parse_space(R"({"points": ["a","b"], "opens": [["a"]], "ideal": {"members": [[]]}, "aura": {"a": ["b"]}})");
    FAIL("expected SpaceFormatError");
  } catch (const SpaceFormatError& e) {
    CHECK(e.problems().size() >= 3);
  }
  CHECK_THROWS_AS(parse_space("not json"), SpaceError);
  CHECK_THROWS_AS(parse_space(R"({"format": "other/2", "points": []})"), SpaceError);
  CHECK_THROWS_AS(load_space("/nonexistent/space.json"), SpaceError);
}

}  // TEST_SUITE
