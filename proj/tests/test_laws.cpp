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

#include "auraspace/laws.hpp"
#include "support.hpp"

using namespace auraspace;

TEST_SUITE("laws") {

TEST_CASE("registry covers every topic with an asserted law or a probe") {
  const std::set<std::string> expected{
      "local-function", "star-vs-aura-local", "aura-local-properties", "aura-local-not-closed",
      "aura-local-vs-closure", "cech-closure", "non-idempotency", "iterated-closure", "topology-chain",
      "transitivity-idempotency", "trivial-ideal", "improper-ideal", "chain-equalities", "finite-ideal",
      "psi-aura", "psi-characterization", "basis", "interior", "generalized-open-hierarchy", "compatibility",
      "ideal-adds-no-opens", "continuity-hierarchy", "decomposition", "comparison"};
  std::set<std::string> topics, ids;
  for (const auto& l : law_registry()) {
    topics.insert(l.topic);
    CHECK(ids.insert(l.id).second);
    CHECK(!l.statement.empty());
    CHECK((l.space_fn != nullptr) != (l.map_fn != nullptr));
  }
  CHECK(topics == expected);
  CHECK_THROWS_AS(find_law("nope"), UnknownLaw);
}

TEST_CASE("space laws pass on every space up to 3 points") {
  const auto source = SpaceSource::exhaustive(1, 3);
  for (const auto& l : law_registry()) {
    if (l.kind != LawKind::Asserted || l.scope != LawScope::Space) continue;
    const auto r = run_law(l.id, source);
    INFO(l.id);
    CHECK(r.status() == "pass");
    CHECK(r.spaces_checked + r.spaces_skipped == source.size());
  }
}

TEST_CASE("decomposition fails on transitive sources while the alpha form holds") {
  const auto source = SpaceSource::exhaustive(1, 3);
  const auto d = run_law("decomposition", source);
  CHECK(d.status() == "fail");
  CHECK(d.violation_count == 192);
  CHECK(!d.violations.empty());
  CHECK(d.violations.size() <= LawReport::kMaxViolations);
  CHECK(run_law("alpha_decomposition", source).status() == "pass");
  CHECK(run_law("continuity_hierarchy", source).maps_checked == 2373336);
}

TEST_CASE("probes report findings without failing") {
  const auto source = SpaceSource::exhaustive(1, 3);
  const auto r = run_law("semi_pre_alpha_nontransitive", source);
  CHECK(r.status() == "probe-only");
  CHECK(r.ok());
  CHECK(r.violation_count == 36);
  CHECK(run_law("psi_characterization_nontransitive", source).violation_count == 0);
  CHECK(run_law("basis_theorem_nontransitive", source).violation_count > 0);
}

TEST_CASE("reports do not depend on the number of workers") {
  const auto source = SpaceSource::random(4, 5, 600, 11);
  const std::vector<std::string> ids{"cech_axioms", "aura_local_not_closed", "topology_chain"};
  const auto one = run_laws(ids, source, 1);
  const auto four = run_laws(ids, source, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(law_report_to_json(one[i]).dump() == law_report_to_json(four[i]).dump());
  }
}

TEST_CASE("map laws skip sources beyond three points") {
  const auto r = run_law("continuity_hierarchy", SpaceSource::random(4, 4, 5, 1));
  CHECK(r.map_scale_skipped);
  CHECK(r.maps_checked == 0);
}

}  // TEST_SUITE
