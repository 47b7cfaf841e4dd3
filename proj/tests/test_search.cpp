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

#include "auraspace/search.hpp"
#include "auraspace/space_io.hpp"
#include "support.hpp"

using namespace auraspace;

namespace {

SearchConfig config(int n, TopologySource t = TopologySource::All) {
  SearchConfig c;
  c.n = n;
  c.topology_source = t;
  return c;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("predicate parsing") {
  CHECK(parse_predicate("NONIDEMPOTENT_K(3)").k == 3);
  CHECK(parse_predicate("NONIDEMPOTENT_K:4").k == 4);
  CHECK(parse_predicate("NONIDEMPOTENT_K").k == 2);
  CHECK(parse_predicate("STRICT_STAR_AURA").text() == "STRICT_STAR_AURA");
  CHECK_THROWS_AS(parse_predicate("NOPE"), UnknownPredicate);
  CHECK_THROWS_AS(parse_predicate("STRICT_STAR_AURA(2)"), SpaceError);
}

TEST_CASE("strictness witnesses") {
  const auto strict = find_witness(parse_predicate("STRICT_STAR_AURA"), config(3));
  REQUIRE(strict.witness);
  CHECK(verify_witness(*strict.witness));
  CHECK(find_witness(parse_predicate("TAU_AURA_STRICT_TAUSA"), config(3)).witness.has_value());
  CHECK(!find_witness(parse_predicate("NONIDEMPOTENT_K(3)"), config(3)).witness.has_value());
}

TEST_CASE("three-step closure needs four points") {
  const auto r = find_witness(parse_predicate("NONIDEMPOTENT_K(3)"), config(4, TopologySource::Discrete));
  REQUIRE(r.witness);
  CHECK(r.witness->index == 84);
  CHECK(r.witness->metrics["stabilized_at"] == 3);
}

TEST_CASE("witness files round trip and re-verify") {
  const auto r = find_witness(parse_predicate("COMPARISON_III_FAIL"), config(2));
  REQUIRE(r.witness);
  const std::string text = serialize_witness(*r.witness);
  CHECK(has_witness_block(text));
  const Witness back = parse_witness(text);
  CHECK(serialize_witness(back) == text);
  CHECK(verify_witness(back));
  CHECK(parse_space(text) == r.witness->space);

  Witness forged = back;
  forged.subsets.front().second = PointSet{};
  CHECK(!verify_witness(forged));
}

TEST_CASE("random search is deterministic and reports exhaustion") {
  SearchConfig c = config(4);
  c.mode = SearchMode::Random;
  c.seed = 5;
  c.budget = 200;
  const auto p = parse_predicate("STRICT_STAR_AURA");
  const auto a = find_witness(p, c);
  const auto b = find_witness(p, c);
  REQUIRE(a.witness);
  CHECK(a.witness->index == b.witness->index);

  const auto none = find_witness(parse_predicate("NONIDEMPOTENT_K(4)"), c);
  CHECK(!none.witness);
  CHECK(none.budget_exhausted);
  CHECK(describe_outcome(parse_predicate("NONIDEMPOTENT_K(4)"), none).find("budget exhausted") != std::string::npos);
}

TEST_CASE("open question outcome wording") {
  const auto p = parse_predicate("PROPERTY_VII_NONTRANSITIVE_FAIL");
  const auto r = find_witness(p, config(3));
  CHECK(!r.witness);
  CHECK(describe_outcome(p, r).find("evidence, not proof") != std::string::npos);
}

TEST_CASE("stabilization census") {
  const auto two = stabilization_census(config(2));
  CHECK(two.max_index == 1);
  const auto three = stabilization_census(config(3));
  CHECK(three.max_index == 2);
  for (const auto& [k, count] : three.transitive) CHECK(k <= 1);
  CHECK(format_census(three).find("transitive") != std::string::npos);
}

}  // TEST_SUITE
