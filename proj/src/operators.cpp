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

#include "auraspace/operators.hpp"

#include <stdexcept>

#include "check.hpp"

namespace auraspace {

PointSet local_star(const IdealAuraSpace& space, PointSet a) {
  // Every open neighbourhood of x contains the minimal one, so by heredity of
  // the ideal it suffices to test that one.
  const auto& tau = space.topology();
  PointSet out;
  for (int x = 0; x < space.size(); ++x) {
    if (!space.ideal().contains(tau.minimal_neighborhood(x) & a)) out |= PointSet::singleton(x);
  }
  return out;
}

PointSet aura_local(const IdealAuraSpace& space, PointSet a) {
  const PointSet support = space.ideal().support();
  PointSet out;
  for (int x = 0; x < space.size(); ++x) {
    if (!(space.aura(x) & a).subset_of(support)) out |= PointSet::singleton(x);
  }
  return out;
}

PointSet star_closure(const IdealAuraSpace& space, PointSet a) { return a | local_star(space, a); }

PointSet psi(const IdealAuraSpace& space, PointSet a) {
  const int n = space.size();
  return complement(local_star(space, complement(a, n)), n);
}

PointSet aura_closure(const IdealAuraSpace& space, PointSet a) {
  PointSet out;
  for (int x = 0; x < space.size(); ++x) {
    if (space.aura(x).intersects(a)) out |= PointSet::singleton(x);
  }
  return out;
}

PointSet aura_interior(const IdealAuraSpace& space, PointSet a) {
  PointSet out;
  for (int x : a) {
    if (space.aura(x).subset_of(a)) out |= PointSet::singleton(x);
  }
  return out;
}

PointSet ia_closure(const IdealAuraSpace& space, PointSet a) { return a | aura_local(space, a); }

PointSet psi_aura(const IdealAuraSpace& space, PointSet a) {
  PointSet by_escape;
  for (int x = 0; x < space.size(); ++x) {
    if (space.ideal().contains(space.aura(x) - a)) by_escape |= PointSet::singleton(x);
  }
  AURASPACE_CHECK(by_escape == complement(aura_local(space, complement(a, space.size())), space.size()),
                  "psi_aura: escape form and complement form disagree");
  return by_escape;
}

PointSet ia_interior(const IdealAuraSpace& space, PointSet a) {
  const int n = space.size();
  const PointSet dual = complement(ia_closure(space, complement(a, n)), n);
#if AURASPACE_INTERNAL_CHECKS
  PointSet pointwise;
  for (int x : a) {
    if (space.ideal().contains(space.aura(x) - a)) pointwise |= PointSet::singleton(x);
  }
  AURASPACE_CHECK(dual == pointwise, "ia_interior: dual form and pointwise form disagree");
  AURASPACE_CHECK(dual == (a & psi_aura(space, a)), "ia_interior: dual form and A ∩ psi_aura(A) disagree");
#endif
  return dual;
}

ClosureTrace ia_closure_trace(const IdealAuraSpace& space, PointSet a) {
  ClosureTrace trace;
  trace.steps.push_back(a);
  while (true) {
    const PointSet next = ia_closure(space, trace.steps.back());
    if (next == trace.steps.back()) break;
    AURASPACE_CHECK(trace.steps.back().subset_of(next), "ia_closure is not extensive");
    trace.steps.push_back(next);
  }
  trace.stabilized_at = static_cast<int>(trace.steps.size()) - 1;
  AURASPACE_CHECK(trace.stabilized_at <= space.size() - a.size(), "closure chain longer than |X| - |A|");
  return trace;
}

PointSet ia_closure_fixpoint(const IdealAuraSpace& space, PointSet a) {
  PointSet current = a;
  while (true) {
    const PointSet next = ia_closure(space, current);
    if (next == current) return current;
    current = next;
  }
}

}  // namespace auraspace
