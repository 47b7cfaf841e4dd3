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

#include "auraspace/continuity.hpp"
#include "auraspace/topologies.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace auraspace;
using testing::fixture;
using testing::set;

TEST_SUITE("continuity") {

TEST_CASE("identity from the aura topology to the original topology fails on chain-strict") {
  const auto s = fixture("chain-strict-v1");
  const auto map = SpaceMap::identity(s);
  const auto w = continuity_witness(map.table(), gen_tau_aura(s).opens(), s.topology().opens());
  REQUIRE(w.has_value());
  CHECK(s.topology().opens().contains(*w));
  CHECK(!gen_tau_aura(s).opens().contains(*w));
}

TEST_CASE("identity on a transitive space is continuous in every sense onto its own family") {
  const auto s = fixture("chain-strict-v1");
  const auto map = SpaceMap::identity(s);
  const auto family = target_family(s, TargetFamily::CechIdealAura);
  const auto p = ia_continuity_profile(map, family);
  CHECK(p.continuous);
  CHECK(p.alpha);
  CHECK(p.beta);
  const auto d = decomposition_check(map, family);
  CHECK(d.holds());
  const auto c = comparison_chain_check(map, family);
  CHECK(c.chain_holds());
}

TEST_CASE("constant maps are continuous for every family") {
  testing::for_each_space(1, 3, [](const IdealAuraSpace& s) {
    const auto target = fixture("chain-strict-v1");
    for (int y = 0; y < target.size(); ++y) {
      const SpaceMap map(s, target, std::vector<int>(static_cast<std::size_t>(s.size()), y));
      for (auto which : {TargetFamily::CechIdealAura, TargetFamily::Topology}) {
        const auto p = ia_continuity_profile(map, target_family(target, which));
        REQUIRE(p.continuous);
        REQUIRE(p.beta);
      }
    }
  });
}

TEST_CASE("decomposition gap map") {
  const auto map = load_map(testing::fixture_path("maps/decomposition-gap.json"));
  REQUIRE(map.source().is_transitive());
  const auto family = target_family(map.target(), TargetFamily::Topology);
  const auto d = decomposition_check(map, family);
  CHECK(!d.holds());
  REQUIRE(d.witness.has_value());
  CHECK(format_set(map.target().universe(), *d.witness) == "{p}");
  const auto p = ia_continuity_profile(map, family);
  CHECK(p.alpha);
  CHECK(!p.continuous);
}

TEST_CASE("profile agrees with the reference over all maps into a two-point target") {
  const auto target = fixture("chain-strict-v1");
  const Universe yu = Universe::letters(2);
  const auto ys = IdealAuraSpace::make(FiniteTopology::make(yu, SetFamily{PointSet{}, PointSet::of({0}), yu.full()}),
                                       Ideal::trivial(yu), {PointSet::of({0}), yu.full()});
  const auto sigma = ys.topology().opens();
  const auto sigma_o = oracle::to_family(sigma);
  testing::for_each_space(1, 3, [&](const IdealAuraSpace& s) {
    const oracle::Space o(s);
    const int n = s.size();
    int combos = 1;
    for (int i = 0; i < n; ++i) combos *= 2;
    for (int code = 0; code < combos; ++code) {
      std::vector<int> table;
      for (int i = 0; i < n; ++i) table.push_back((code >> i) & 1);
      const auto p = ia_continuity_profile(SpaceMap(s, ys, table), sigma);
      REQUIRE(p.continuous == oracle::continuous(table, sigma_o, [&](const auto& a) { return o.ia_open(a); }));
      REQUIRE(p.alpha == oracle::continuous(table, sigma_o, [&](const auto& a) { return o.alpha(a); }));
      REQUIRE(p.semi == oracle::continuous(table, sigma_o, [&](const auto& a) { return o.semi(a); }));
      REQUIRE(p.pre == oracle::continuous(table, sigma_o, [&](const auto& a) { return o.pre(a); }));
      REQUIRE(p.beta == oracle::continuous(table, sigma_o, [&](const auto& a) { return o.beta(a); }));
      REQUIRE(p.respects_hierarchy());
    }
  });
  (void)target;
}

TEST_CASE("map files reject partial tables") {
  CHECK_THROWS_AS(parse_map(R"({"source": {"points": ["a"], "opens": [[], ["a"]], "ideal": {"members": [[]]},
                                           "aura": {"a": ["a"]}},
                                "target": {"points": ["p"], "opens": [[], ["p"]], "ideal": {"members": [[]]},
                                           "aura": {"p": ["p"]}},
                                "map": {}})"),
                  SpaceError);
}

}  // TEST_SUITE
