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

#include "auraspace/operators.hpp"
#include "auraspace/topologies.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace auraspace;
using testing::fixture;
using testing::set;

TEST_SUITE("topologies") {

TEST_CASE("chain-strict first space: aura topology equals the ideal-aura topology") {
  const auto s = fixture("chain-strict-v1");
  const auto tau_aura = gen_tau_aura(s).opens();
  CHECK(format_family(s.universe(), tau_aura) == "{{},{b},{a,b},{c},{b,c},{a,b,c}}");
  CHECK(gen_tausa(s).opens() == tau_aura);
  CHECK(!gen_tausa(s).opens().contains(set(s, "{a}")));
}

TEST_CASE("chain-strict second space: {a} separates the aura topology from the ideal-aura topology") {
  const auto s = fixture("chain-strict-v2");
  const auto tausa = gen_tausa(s).opens();
  CHECK(tausa.contains(set(s, "{a}")));
  CHECK(!gen_tau_aura(s).opens().contains(set(s, "{a}")));
  CHECK(tausa.size() == 8);
  CHECK(gen_tau_star(s).opens().size() == 8);
}

TEST_CASE("trivial ideal: the star topology is the original topology") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : all_topologies(n)) {
      std::vector<PointSet> aura(static_cast<std::size_t>(n), t.universe().full());
      const auto s = IdealAuraSpace::make(t, Ideal::trivial(t.universe()), aura);
      REQUIRE(gen_tau_star(s).opens() == t.opens());
    }
  }
}

TEST_CASE("generated families agree with the reference on every space up to 3 points") {
  testing::for_each_space(1, 3, [](const IdealAuraSpace& s) {
    const oracle::Space o(s);
    REQUIRE(oracle::to_family(gen_tau_aura(s).opens()) == o.tau_aura());
    REQUIRE(oracle::to_family(gen_tau_star(s).opens()) == o.tau_star());
    REQUIRE(oracle::to_family(gen_tausa(s).opens()) == o.tausa());
    REQUIRE(oracle::to_family(gen_tausa_c(s).opens()) == o.tausa_c());
    REQUIRE(oracle::to_family(gen_basis_beta(s)) == o.basis());
    REQUIRE(oracle::is_topology(o.tausa(), s.size()));
  });
}

TEST_CASE("basis generates the fixpoint topology for transitive scope functions") {
  testing::for_each_space(1, 3, [](const IdealAuraSpace& s) {
    if (!s.is_transitive()) return;
    const auto generated = topology_from_basis(s.universe(), gen_basis_beta(s));
    REQUIRE(generated.ok());
    REQUIRE(generated.value().opens() == gen_tausa(s).opens());
  });
}

TEST_CASE("basis validation reports uncovered points") {
  const Universe u = Universe::letters(2);
  const auto r = topology_from_basis(u, SetFamily{PointSet::of({0})});
  CHECK(!r.ok());
  CHECK_THROWS_AS(r.value(), ValidationError);
}

TEST_CASE("gen_family rejects unknown names") {
  const auto s = fixture("hierarchy-strict");
  CHECK_THROWS(gen_family(s, "nope"));
  CHECK(gen_family(s, "tau") == s.topology().opens());
}

}  // TEST_SUITE
