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

#include <set>

#include "auraspace/enumeration.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace auraspace;

TEST_SUITE("enumeration") {

TEST_CASE("topology counts match a brute-force scan of all families") {
  CHECK(oracle::topologies(1).size() == 1);
  CHECK(oracle::topologies(2).size() == 4);
  CHECK(oracle::topologies(3).size() == 29);
  for (int n = 1; n <= 3; ++n) {
    std::set<oracle::Family> ours;
    for (const auto& t : all_topologies(n)) ours.insert(oracle::to_family(t.opens()));
    const auto ref = oracle::topologies(n);
    CHECK(ours == std::set<oracle::Family>(ref.begin(), ref.end()));
    CHECK(all_topologies(n).size() == ref.size());
  }
  CHECK(all_topologies(4).size() == 355);
}

TEST_CASE("ideals on a finite set are exactly the principal ones") {
  for (int n = 1; n <= 3; ++n) {
    const auto ref = oracle::ideals(n);
    CHECK(ref.size() == (std::size_t{1} << n));
    std::set<oracle::Family> ours;
    for (const auto& i : all_ideals(Universe::letters(n))) ours.insert(oracle::to_family(i.members()));
    CHECK(ours == std::set<oracle::Family>(ref.begin(), ref.end()));
  }
}

TEST_CASE("two points with the discrete topology give 4 ideals times 4 scope functions") {
  SearchConfig c;
  c.n = 2;
  c.topology_source = TopologySource::Discrete;
  CHECK(stream_length(c) == 16);
  const auto choices = scope_choices(FiniteTopology::discrete(Universe::letters(2)));
  CHECK(choices[0].size() == 2);
  CHECK(choices[1].size() == 2);
}

TEST_CASE("stream lengths") {
  CHECK(SpaceSource::exhaustive(1, 1).size() == 2);
  CHECK(SpaceSource::exhaustive(1, 3).size() == 2934);
  SearchConfig c;
  c.n = 5;
  CHECK_THROWS_AS(check_config(c), ScaleRefused);
}

TEST_CASE("xorshift64* reference values") {
  Xorshift64Star r(1);
  // x = 1: x ^= x >> 12 -> 1; x ^= x << 25 -> 0x2000001; x ^= x >> 27 -> 0x2000001.
  CHECK(r.next() == 0x2000001ULL * 0x2545F4914F6CDD1DULL);
  Xorshift64Star zero(0);
  Xorshift64Star one(1);
  CHECK(zero.next() == one.next());
}

TEST_CASE("random spaces are reproducible from seed and index") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto a = random_space_between(4, 5, 7, i);
    const auto b = random_space_between(4, 5, 7, i);
    REQUIRE(a == b);
    REQUIRE(a.size() >= 4);
    REQUIRE(a.size() <= 5);
  }
  int differ = 0;
  for (std::uint64_t i = 0; i < 50; ++i) differ += random_space_between(4, 5, 7, i) == random_space_between(4, 5, 8, i) ? 0 : 1;
  CHECK(differ > 0);
}

TEST_CASE("canonical forms collapse relabelings") {
  SearchConfig c;
  c.n = 2;
  std::set<std::string> seen;
  std::uint64_t canonical = 0;
  enumerate_spaces(c, [&](std::uint64_t, const IdealAuraSpace& s) {
    seen.insert(serialize_space(canonical_form(s)));
    if (is_canonical(s, c)) ++canonical;
    return true;
  });
  CHECK(canonical == seen.size());
}

TEST_CASE("space source syntax") {
  CHECK(SpaceSource::parse("enum:n=2", 1).size() == SpaceSource::exhaustive(2, 2).size());
  CHECK(SpaceSource::parse("random:n=4..5:count=12", 3).size() == 12);
  CHECK_THROWS_AS(SpaceSource::parse("enum:n=5", 1), ScaleRefused);
  CHECK_THROWS_AS(SpaceSource::parse("bogus:", 1), SpaceError);
  const auto files = SpaceSource::parse(testing::fixture_path("hier.json"), 1);
  CHECK(files.size() == 1);
  CHECK(files.at(0).size() == 4);
}

}  // TEST_SUITE
