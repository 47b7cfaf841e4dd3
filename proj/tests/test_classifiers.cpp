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

#include "auraspace/classifiers.hpp"
#include "auraspace/operators.hpp"
#include "auraspace/topologies.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace auraspace;
using testing::fixture;
using testing::set;

TEST_SUITE("classifiers") {

TEST_CASE("hierarchy example") {
  const auto s = fixture("hierarchy-strict");
  const auto a = classify(s, set(s, "{a,c}"));
  CHECK(!a.semi);
  CHECK(!a.pre);
  CHECK(!a.beta);
  const auto b = classify(s, set(s, "{b,c,d}"));
  CHECK(b.ia_open);
  CHECK(b.alpha);
  CHECK(b.semi);
  CHECK(b.pre);
  CHECK(b.beta);
  const auto families = class_families(s);
  CHECK(families.at(OpenClass::IaOpen).contains(set(s, "{a,b,d}")));
  CHECK(families.at(OpenClass::IaOpen).contains(set(s, "{b,c,d}")));
}

TEST_CASE("b-set decomposition of {a,c} matches an exhaustive pair scan") {
  const auto s = fixture("hierarchy-strict");
  const auto a = set(s, "{a,c}");
  const auto w = is_b_set(s, a);
  CHECK(w.has_value() == oracle::Space(s).b_set(oracle::to_set(a)));
  if (w) {
    CHECK((w->u & w->v) == a);
    CHECK(gen_tausa_c(s).opens().contains(w->u));
    CHECK(ia_closure(s, ia_interior(s, w->v)) == w->v);
  }
}

TEST_CASE("empty set and whole space carry every class") {
  testing::for_each_space(1, 3, [](const IdealAuraSpace& s) {
    for (PointSet a : {PointSet{}, s.full()}) {
      const auto p = classify(s, a);
      REQUIRE((p.ia_open && p.semi && p.pre && p.alpha && p.beta && p.b_set));
    }
  });
}

TEST_CASE("classification agrees with the reference on every space up to 3 points") {
  testing::for_each_space(1, 3, [](const IdealAuraSpace& s) {
    const oracle::Space o(s);
    const auto table = classify_all(s);
    for_each_subset(s.full(), [&](PointSet a) {
      const auto A = oracle::to_set(a);
      const auto& p = table[a.bits()];
      REQUIRE(p.ia_open == o.ia_open(A));
      REQUIRE(p.semi == o.semi(A));
      REQUIRE(p.pre == o.pre(A));
      REQUIRE(p.alpha == o.alpha(A));
      REQUIRE(p.beta == o.beta(A));
      REQUIRE(p.b_set == o.b_set(A));
      REQUIRE(p.respects_hierarchy());
    });
  });
}

TEST_CASE("open class equals the single-step ideal-aura topology") {
  testing::for_each_space(1, 3, [](const IdealAuraSpace& s) {
    REQUIRE(class_families(s).at(OpenClass::IaOpen) == gen_tausa_c(s).opens());
  });
}

TEST_CASE("improper ideal makes every subset carry every class") {
  testing::for_each_space(1, 2, [](const IdealAuraSpace& base) {
    const auto s = base.with_ideal(Ideal::improper(base.universe()));
    for (const auto& p : classify_all(s)) {
      REQUIRE((p.ia_open && p.semi && p.pre && p.alpha && p.beta));
    }
  });
}

TEST_CASE("fixpoint composition only differs on non-transitive spaces") {
  int differing = 0;
  testing::for_each_space(1, 3, [&](const IdealAuraSpace& s) {
    const auto single = classify_all(s);
    const auto fix = classify_all(s, {Composition::Fixpoint});
    if (s.is_transitive()) {
      REQUIRE(single == fix);
    } else if (single != fix) {
      ++differing;
    }
  });
  CHECK(differing > 0);
}

}  // TEST_SUITE
