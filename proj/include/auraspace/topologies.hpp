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

#ifndef AURASPACE_TOPOLOGIES_HPP_
#define AURASPACE_TOPOLOGIES_HPP_

#include <string_view>

#include "auraspace/space.hpp"

namespace auraspace {

/// Sets A with 𝔞(x) ⊆ A for every x ∈ A.
FiniteTopology gen_tau_aura(const IdealAuraSpace& space);
/// Complements of sets fixed by star_closure.
FiniteTopology gen_tau_star(const IdealAuraSpace& space);
/// Complements of sets fixed by the iterated (fixpoint) ideal-aura closure.
FiniteTopology gen_tausa(const IdealAuraSpace& space);
/// Complements of sets fixed by a single ideal-aura closure step.
FiniteTopology gen_tausa_c(const IdealAuraSpace& space);

/// {𝔞(x) \ J : x ∈ X, J ∈ 𝓘}.
SetFamily gen_basis_beta(const IdealAuraSpace& space);

/// All unions of subfamilies of `basis`. Fails with NotACover for each
/// uncovered point.
Validated<FiniteTopology> topology_from_basis(const Universe& u, const SetFamily& basis);

struct TopologyBundle {
  FiniteTopology tau_aura;
  FiniteTopology tau_star;
  FiniteTopology tausa;
  FiniteTopology tausa_c;
};

TopologyBundle gen_topologies(const IdealAuraSpace& space);

/// Generator by CLI name: tau_aura | tau_star | tausa | tausa_c | beta.
/// Throws SpaceError for an unknown name.
SetFamily gen_family(const IdealAuraSpace& space, std::string_view name);

}  // namespace auraspace

#endif  // AURASPACE_TOPOLOGIES_HPP_
