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

#include "auraspace/topologies.hpp"

#include <stdexcept>
#include <string>

#include "auraspace/operators.hpp"
#include "check.hpp"

namespace auraspace {
namespace {

template <class Pred>
FiniteTopology collect(const IdealAuraSpace& space, std::string_view name, Pred&& is_member) {
  std::vector<PointSet> opens;
  for_each_subset(space.full(), [&](PointSet a) {
    if (is_member(a)) opens.push_back(a);
  });
  auto v = validate_topology(space.universe(), SetFamily(std::move(opens)));
  if (!v) throw std::logic_error(std::string(name) + " is not a topology on this space");
  return std::move(v).value();
}

}  // namespace

FiniteTopology gen_tau_aura(const IdealAuraSpace& space) {
  auto t = collect(space, "tau_aura", [&](PointSet a) { return aura_interior(space, a) == a; });
  AURASPACE_CHECK(t.opens().subset_of(space.topology().opens()), "tau_aura is not coarser than tau");
  return t;
}

FiniteTopology gen_tau_star(const IdealAuraSpace& space) {
  const int n = space.size();
  auto t = collect(space, "tau_star", [&](PointSet a) {
    const PointSet f = complement(a, n);
    return star_closure(space, f) == f;
  });
  AURASPACE_CHECK(space.topology().opens().subset_of(t.opens()), "tau is not coarser than tau_star");
  return t;
}

FiniteTopology gen_tausa(const IdealAuraSpace& space) {
  const int n = space.size();
  return collect(space, "tausa", [&](PointSet a) {
    const PointSet f = complement(a, n);
    return ia_closure_fixpoint(space, f) == f;
  });
}

FiniteTopology gen_tausa_c(const IdealAuraSpace& space) {
  const int n = space.size();
  auto t = collect(space, "tausa_c", [&](PointSet a) {
    const PointSet f = complement(a, n);
    return ia_closure(space, f) == f;
  });
  return t;
}

SetFamily gen_basis_beta(const IdealAuraSpace& space) {
  std::vector<PointSet> members;
  for (int x = 0; x < space.size(); ++x) {
    for (PointSet j : space.ideal().members()) members.push_back(space.aura(x) - j);
  }
  return SetFamily(std::move(members));
}

Validated<FiniteTopology> topology_from_basis(const Universe& u, const SetFamily& basis) {
  std::vector<Violation> violations;
  const PointSet covered = basis.union_all();
  for (int x = 0; x < u.size(); ++x) {
    if (!covered.contains(x)) violations.push_back({ViolationKind::NotACover, {}, {}, x});
  }
  for (PointSet b : basis) {
    if (!u.contains(b)) violations.push_back({ViolationKind::OutOfUniverse, b, {}, -1});
  }
  if (!violations.empty()) return violations;

  const std::size_t count = std::size_t{1} << u.size();
  std::vector<bool> member(count, false);
  std::vector<PointSet> opens{PointSet{}};
  member[0] = true;
  for (PointSet b : basis) {
    // Add b to every union already present.
    const std::size_t existing = opens.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const PointSet c = opens[i] | b;
      if (!member[c.bits()]) {
        member[c.bits()] = true;
        opens.push_back(c);
      }
    }
  }
  return validate_topology(u, SetFamily(std::move(opens)));
}

TopologyBundle gen_topologies(const IdealAuraSpace& space) {
  TopologyBundle b{gen_tau_aura(space), gen_tau_star(space), gen_tausa(space), gen_tausa_c(space)};
  AURASPACE_CHECK(b.tausa.opens().subset_of(b.tausa_c.opens()), "tausa is not coarser than tausa_c");
  return b;
}

SetFamily gen_family(const IdealAuraSpace& space, std::string_view name) {
  if (name == "tau_aura") return gen_tau_aura(space).opens();
  if (name == "tau_star") return gen_tau_star(space).opens();
  if (name == "tausa") return gen_tausa(space).opens();
  if (name == "tausa_c") return gen_tausa_c(space).opens();
  if (name == "beta") return gen_basis_beta(space);
  if (name == "tau") return space.topology().opens();
  throw SpaceError("unknown topology generator '" + std::string(name) + "'");
}

}  // namespace auraspace
