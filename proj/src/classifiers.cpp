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

#include "auraspace/classifiers.hpp"

#include "auraspace/operators.hpp"

namespace auraspace {
namespace {

struct Operators {
  const IdealAuraSpace& space;
  Composition composition;

  PointSet closure(PointSet a) const {
    return composition == Composition::SingleStep ? ia_closure(space, a) : ia_closure_fixpoint(space, a);
  }
  PointSet interior(PointSet a) const {
    const int n = space.size();
    return complement(closure(complement(a, n)), n);
  }
};

OpennessProfile five_flags(const Operators& ops, PointSet a) {
  return classify_with([&](PointSet s) { return ops.closure(s); },
                       [&](PointSet s) { return ops.interior(s); }, a);
}

// Candidates for the two halves of a B-set decomposition.
struct BSetParts {
  std::vector<PointSet> opens;    // U with cl(X \ U) = X \ U
  std::vector<PointSet> regular;  // V with cl(int(V)) = V
};

BSetParts b_set_parts(const Operators& ops) {
  BSetParts parts;
  const int n = ops.space.size();
  for_each_subset(ops.space.full(), [&](PointSet s) {
    // U is drawn from the single-step (Čech) topology regardless of composition.
    const PointSet f = complement(s, n);
    if (ia_closure(ops.space, f) == f) parts.opens.push_back(s);
    if (ops.closure(ops.interior(s)) == s) parts.regular.push_back(s);
  });
  return parts;
}

std::optional<BSetWitness> find_b_set(const BSetParts& parts, PointSet a) {
  for (PointSet u : parts.opens) {
    if (!a.subset_of(u)) continue;
    for (PointSet v : parts.regular) {
      if ((u & v) == a) return BSetWitness{u, v};
    }
  }
  return std::nullopt;
}

}  // namespace

OpennessProfile classify(const IdealAuraSpace& space, PointSet a, ClassifierOptions options) {
  const Operators ops{space, options.composition};
  OpennessProfile p = five_flags(ops, a);
  p.b_set = find_b_set(b_set_parts(ops), a).has_value();
  return p;
}

std::vector<OpennessProfile> classify_all(const IdealAuraSpace& space, ClassifierOptions options) {
  const Operators ops{space, options.composition};
  const BSetParts parts = b_set_parts(ops);
  std::vector<OpennessProfile> out(std::size_t{1} << space.size());
  for_each_subset(space.full(), [&](PointSet a) {
    OpennessProfile p = five_flags(ops, a);
    p.b_set = find_b_set(parts, a).has_value();
    out[a.bits()] = p;
  });
  return out;
}

std::optional<BSetWitness> is_b_set(const IdealAuraSpace& space, PointSet a, ClassifierOptions options) {
  return find_b_set(b_set_parts(Operators{space, options.composition}), a);
}

std::string_view to_string(OpenClass c) {
  switch (c) {
    case OpenClass::IaOpen: return "ia_open";
    case OpenClass::Semi: return "semi";
    case OpenClass::Pre: return "pre";
    case OpenClass::Alpha: return "alpha";
    case OpenClass::Beta: return "beta";
    case OpenClass::BSet: return "b_set";
  }
  return "?";
}

bool has_class(const OpennessProfile& p, OpenClass c) {
  switch (c) {
    case OpenClass::IaOpen: return p.ia_open;
    case OpenClass::Semi: return p.semi;
    case OpenClass::Pre: return p.pre;
    case OpenClass::Alpha: return p.alpha;
    case OpenClass::Beta: return p.beta;
    case OpenClass::BSet: return p.b_set;
  }
  return false;
}

std::map<OpenClass, SetFamily> class_families(const IdealAuraSpace& space, ClassifierOptions options) {
  const auto profiles = classify_all(space, options);
  std::map<OpenClass, SetFamily> out;
  for (OpenClass c : kOpenClasses) {
    std::vector<PointSet> members;
    for (std::size_t bits = 0; bits < profiles.size(); ++bits) {
      if (has_class(profiles[bits], c)) members.emplace_back(static_cast<PointSet::Bits>(bits));
    }
    out.emplace(c, SetFamily(std::move(members)));
  }
  return out;
}

}  // namespace auraspace
