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

// Membership in the five generalized-open classes built from the ideal-aura
// closure and interior, plus the B-set decomposition.

#ifndef AURASPACE_CLASSIFIERS_HPP_
#define AURASPACE_CLASSIFIERS_HPP_

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include "auraspace/space.hpp"

namespace auraspace {

/// Which closure the class definitions compose with. The definitions use the
/// single-step closure; Fixpoint substitutes its Kuratowski limit.
enum class Composition { SingleStep, Fixpoint };

struct ClassifierOptions {
  Composition composition = Composition::SingleStep;
};

struct OpennessProfile {
  bool ia_open = false;
  bool semi = false;
  bool pre = false;
  bool alpha = false;
  bool beta = false;
  bool b_set = false;

  /// ia_open ⇒ alpha ⇒ (semi ∧ pre), semi ⇒ beta, pre ⇒ beta.
  bool respects_hierarchy() const {
    return (!ia_open || alpha) && (!alpha || (semi && pre)) && (!semi || beta) && (!pre || beta);
  }
  friend bool operator==(const OpennessProfile&, const OpennessProfile&) = default;
};

/// The five containment tests for an arbitrary closure/interior pair.
/// b_set is left false; it depends on more than the two operators.
template <class Closure, class Interior>
OpennessProfile classify_with(Closure&& cl, Interior&& in, PointSet a) {
  OpennessProfile p;
  const PointSet in_a = in(a);
  const PointSet cl_a = cl(a);
  const PointSet cl_in_a = cl(in_a);
  p.ia_open = a.subset_of(in_a);
  p.semi = a.subset_of(cl_in_a);
  p.pre = a.subset_of(in(cl_a));
  p.alpha = a.subset_of(in(cl_in_a));
  p.beta = a.subset_of(cl(in(cl_a)));
  return p;
}

OpennessProfile classify(const IdealAuraSpace& space, PointSet a, ClassifierOptions options = {});

/// Profiles of every subset, indexed by mask.
std::vector<OpennessProfile> classify_all(const IdealAuraSpace& space, ClassifierOptions options = {});

/// A = U ∩ V with U open for the single-step closure and cl(int(V)) = V.
struct BSetWitness {
  PointSet u;
  PointSet v;
};

std::optional<BSetWitness> is_b_set(const IdealAuraSpace& space, PointSet a,
                                    ClassifierOptions options = {});

enum class OpenClass { IaOpen, Semi, Pre, Alpha, Beta, BSet };
inline constexpr std::array<OpenClass, 6> kOpenClasses = {
    OpenClass::IaOpen, OpenClass::Semi, OpenClass::Pre, OpenClass::Alpha, OpenClass::Beta, OpenClass::BSet};

std::string_view to_string(OpenClass c);
bool has_class(const OpennessProfile& p, OpenClass c);

std::map<OpenClass, SetFamily> class_families(const IdealAuraSpace& space, ClassifierOptions options = {});

}  // namespace auraspace

#endif  // AURASPACE_CLASSIFIERS_HPP_
