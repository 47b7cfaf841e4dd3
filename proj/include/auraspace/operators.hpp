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

// Point-set operators of an ideal-aura space. All functions are pure and take
// subsets of the space's universe.

#ifndef AURASPACE_OPERATORS_HPP_
#define AURASPACE_OPERATORS_HPP_

#include <vector>

#include "auraspace/space.hpp"

namespace auraspace {

/// Local function A*: points x with O ∩ A ∉ 𝓘 for every open O ∋ x.
PointSet local_star(const IdealAuraSpace& space, PointSet a);

/// Aura-local function A^𝔞: points x with 𝔞(x) ∩ A ∉ 𝓘.
PointSet aura_local(const IdealAuraSpace& space, PointSet a);

/// A ∪ A*.
PointSet star_closure(const IdealAuraSpace& space, PointSet a);

/// Classical ψ(A) = X \ (X \ A)*.
PointSet psi(const IdealAuraSpace& space, PointSet a);

/// {x : 𝔞(x) ∩ A ≠ ∅}.
PointSet aura_closure(const IdealAuraSpace& space, PointSet a);
/// {x ∈ A : 𝔞(x) ⊆ A}.
PointSet aura_interior(const IdealAuraSpace& space, PointSet a);

/// Single-step ideal-aura closure A ∪ A^𝔞. Additive Čech, not idempotent in general.
PointSet ia_closure(const IdealAuraSpace& space, PointSet a);

/// X \ ia_closure(X \ A), equivalently {x ∈ A : 𝔞(x) \ A ∈ 𝓘}.
PointSet ia_interior(const IdealAuraSpace& space, PointSet a);

/// {x : 𝔞(x) \ A ∈ 𝓘}, equivalently X \ (X \ A)^𝔞.
PointSet psi_aura(const IdealAuraSpace& space, PointSet a);

/// Iterates of ia_closure starting at A, up to and including the first fixpoint.
struct ClosureTrace {
  std::vector<PointSet> steps;
  /// Index k of the first fixpoint: steps[k] is fixed by ia_closure.
  int stabilized_at = 0;

  PointSet limit() const { return steps.back(); }
};

ClosureTrace ia_closure_trace(const IdealAuraSpace& space, PointSet a);

/// Limit of the ia_closure chain; a Kuratowski closure on finite spaces.
PointSet ia_closure_fixpoint(const IdealAuraSpace& space, PointSet a);

}  // namespace auraspace

#endif  // AURASPACE_OPERATORS_HPP_
