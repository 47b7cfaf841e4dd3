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

#include "auraspace/space.hpp"

#include <algorithm>

namespace auraspace {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::OutOfUniverse: return "OutOfUniverse";
    case ViolationKind::MissingEmpty: return "MissingEmpty";
    case ViolationKind::MissingFull: return "MissingFull";
    case ViolationKind::NotUnionClosed: return "NotUnionClosed";
    case ViolationKind::NotIntersectionClosed: return "NotIntersectionClosed";
    case ViolationKind::NotHereditary: return "NotHereditary";
    case ViolationKind::NotACover: return "NotACover";
    case ViolationKind::ScopeArity: return "ScopeArity";
    case ViolationKind::ScopeMissesPoint: return "ScopeMissesPoint";
    case ViolationKind::ScopeNotOpen: return "ScopeNotOpen";
    case ViolationKind::UniverseMismatch: return "UniverseMismatch";
  }
  return "Unknown";
}

std::string Violation::describe(const Universe& u) const {
  std::string out(to_string(kind));
  auto point_name = [&](int p) {
    return p >= 0 && p < u.size() ? u.name(p) : "#" + std::to_string(p);
  };
  switch (kind) {
    case ViolationKind::MissingEmpty:
    case ViolationKind::MissingFull:
    case ViolationKind::UniverseMismatch:
      break;
    case ViolationKind::OutOfUniverse:
      out += "(" + format_set(u, first) + ")";
      break;
    case ViolationKind::NotUnionClosed:
    case ViolationKind::NotIntersectionClosed:
    case ViolationKind::NotHereditary:
      out += "(" + format_set(u, first) + "," + format_set(u, second) + ")";
      break;
    case ViolationKind::NotACover:
    case ViolationKind::ScopeMissesPoint:
      out += "(" + point_name(point) + ")";
      break;
    case ViolationKind::ScopeNotOpen:
      out += "(" + point_name(point) + "," + format_set(u, first) + ")";
      break;
    case ViolationKind::ScopeArity:
      out += "(" + std::to_string(point) + ")";
      break;
  }
  return out;
}

namespace {

void check_in_universe(const Universe& u, const SetFamily& family, std::vector<Violation>& out) {
  for (PointSet s : family) {
    if (!u.contains(s)) out.push_back({ViolationKind::OutOfUniverse, s, {}, -1});
  }
}

std::string summarize(std::string_view what, const Universe& u, const std::vector<Violation>& v) {
  std::string msg(what);
  msg += ":";
  for (const auto& item : v) msg += " " + item.describe(u);
  return msg;
}

}  // namespace

// --- topology --------------------------------------------------------------

FiniteTopology::FiniteTopology(Universe u, SetFamily opens)
    : universe_(std::move(u)), opens_(std::move(opens)) {
  const int n = universe_.size();
  membership_.assign(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0);
  for (PointSet s : opens_) membership_[s.bits() >> 6] |= std::uint64_t{1} << (s.bits() & 63);
  min_nbhd_.assign(static_cast<std::size_t>(n), universe_.full());
  for (PointSet s : opens_) {
    for (int x : s) min_nbhd_[static_cast<std::size_t>(x)] &= s;
  }
}

Validated<FiniteTopology> validate_topology(const Universe& u, SetFamily family) {
  std::vector<Violation> violations;
  check_in_universe(u, family, violations);
  if (!violations.empty()) return violations;
  if (!family.contains(PointSet{})) violations.push_back({ViolationKind::MissingEmpty, {}, {}, -1});
  if (!family.contains(u.full())) violations.push_back({ViolationKind::MissingFull, {}, {}, -1});
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!family.contains(m[i] | m[j])) {
        violations.push_back({ViolationKind::NotUnionClosed, m[i], m[j], -1});
      }
    }
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!family.contains(m[i] & m[j])) {
        violations.push_back({ViolationKind::NotIntersectionClosed, m[i], m[j], -1});
      }
    }
  }
  if (!violations.empty()) return violations;
  return FiniteTopology(u, std::move(family));
}

FiniteTopology FiniteTopology::make(const Universe& u, SetFamily opens) {
  auto v = validate_topology(u, std::move(opens));
  if (!v) throw ValidationError(summarize("invalid topology", u, v.violations()), v.violations());
  return std::move(v).value();
}

FiniteTopology FiniteTopology::discrete(const Universe& u) {
  return FiniteTopology(u, power_set(u.size()));
}

FiniteTopology FiniteTopology::indiscrete(const Universe& u) {
  return FiniteTopology(u, SetFamily{PointSet{}, u.full()});
}

FiniteTopology topology_from_subbasis(const Universe& u, const std::vector<PointSet>& subbasis) {
  const int n = u.size();
  std::vector<bool> member(std::size_t{1} << n, false);
  std::vector<PointSet> opens{PointSet{}, u.full()};
  member[0] = true;
  member[u.full().bits()] = true;
  for (PointSet s : subbasis) {
    s &= u.full();
    if (!member[s.bits()]) {
      member[s.bits()] = true;
      opens.push_back(s);
    }
  }
  // Close under pairwise ∪ and ∩ until nothing new appears.
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (PointSet c : {opens[i] | opens[j], opens[i] & opens[j]}) {
        if (!member[c.bits()]) {
          member[c.bits()] = true;
          opens.push_back(c);
        }
      }
    }
  }
  return FiniteTopology::make(u, SetFamily(std::move(opens)));
}

std::vector<PointSet> minimal_scope(const FiniteTopology& topology) {
  std::vector<PointSet> aura;
  for (int x = 0; x < topology.universe().size(); ++x) aura.push_back(topology.minimal_neighborhood(x));
  return aura;
}

// --- ideal -----------------------------------------------------------------

Ideal::Ideal(Universe u, SetFamily members)
    : universe_(std::move(u)), members_(std::move(members)), support_(members_.union_all()) {}

Validated<Ideal> validate_ideal(const Universe& u, SetFamily family) {
  std::vector<Violation> violations;
  check_in_universe(u, family, violations);
  if (!violations.empty()) return violations;
  if (!family.contains(PointSet{})) violations.push_back({ViolationKind::MissingEmpty, {}, {}, -1});
  for (PointSet a : family) {
    for_each_subset(a, [&](PointSet b) {
      if (!family.contains(b)) violations.push_back({ViolationKind::NotHereditary, a, b, -1});
    });
  }
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!family.contains(m[i] | m[j])) {
        violations.push_back({ViolationKind::NotUnionClosed, m[i], m[j], -1});
      }
    }
  }
  if (!violations.empty()) return violations;
  return Ideal(u, std::move(family));
}

Ideal Ideal::make(const Universe& u, SetFamily members) {
  auto v = validate_ideal(u, std::move(members));
  if (!v) throw ValidationError(summarize("invalid ideal", u, v.violations()), v.violations());
  return std::move(v).value();
}

Ideal Ideal::principal(const Universe& u, PointSet top) {
  if (!u.contains(top)) throw SpaceError("ideal support lies outside the universe");
  std::vector<PointSet> members;
  for_each_subset(top, [&](PointSet s) { members.push_back(s); });
  return Ideal(u, SetFamily(std::move(members)));
}

Ideal ideal_from_generators(const Universe& u, const SetFamily& generators) {
  for (PointSet g : generators) {
    if (!u.contains(g)) throw SpaceError("generator " + format_set(u, g) + " lies outside the universe");
  }
  return Ideal::principal(u, generators.union_all());
}

// --- scope -----------------------------------------------------------------

bool ScopeFunction::is_transitive() const {
  for (std::size_t x = 0; x < aura_.size(); ++x) {
    for (int y : aura_[x]) {
      if (!aura_[static_cast<std::size_t>(y)].subset_of(aura_[x])) return false;
    }
  }
  return true;
}

Validated<ScopeFunction> validate_scope(const FiniteTopology& topology, std::vector<PointSet> aura) {
  std::vector<Violation> violations;
  const int n = topology.universe().size();
  if (static_cast<int>(aura.size()) != n) {
    violations.push_back({ViolationKind::ScopeArity, {}, {}, static_cast<int>(aura.size())});
    return violations;
  }
  for (int x = 0; x < n; ++x) {
    const PointSet ax = aura[static_cast<std::size_t>(x)];
    if (!topology.universe().contains(ax)) {
      violations.push_back({ViolationKind::OutOfUniverse, ax, {}, x});
      continue;
    }
    if (!ax.contains(x)) violations.push_back({ViolationKind::ScopeMissesPoint, ax, {}, x});
    if (!topology.is_open(ax)) violations.push_back({ViolationKind::ScopeNotOpen, ax, {}, x});
  }
  if (!violations.empty()) return violations;
  return ScopeFunction(std::move(aura));
}

// --- space -----------------------------------------------------------------

IdealAuraSpace::IdealAuraSpace(FiniteTopology t, Ideal i, ScopeFunction s)
    : topology_(std::move(t)), ideal_(std::move(i)), scope_(std::move(s)) {
  transitive_ = scope_.is_transitive();
}

Validated<IdealAuraSpace> validate_space(FiniteTopology topology, Ideal ideal,
                                         std::vector<PointSet> aura) {
  std::vector<Violation> violations;
  if (!(topology.universe() == ideal.universe())) {
    violations.push_back({ViolationKind::UniverseMismatch, {}, {}, -1});
  }
  auto scope = validate_scope(topology, std::move(aura));
  if (!scope) {
    violations.insert(violations.end(), scope.violations().begin(), scope.violations().end());
  }
  if (!violations.empty()) return violations;
  return IdealAuraSpace(std::move(topology), std::move(ideal), std::move(scope).value());
}

IdealAuraSpace IdealAuraSpace::make(FiniteTopology topology, Ideal ideal, std::vector<PointSet> aura) {
  const Universe u = topology.universe();
  auto v = validate_space(std::move(topology), std::move(ideal), std::move(aura));
  if (!v) throw ValidationError(summarize("invalid space", u, v.violations()), v.violations());
  return std::move(v).value();
}

IdealAuraSpace IdealAuraSpace::with_ideal(Ideal ideal) const {
  if (!(ideal.universe() == universe())) throw SpaceError("ideal is over a different universe");
  return IdealAuraSpace(topology_, std::move(ideal), scope_);
}

// --- classical operators ---------------------------------------------------

SetFamily neighborhoods(const FiniteTopology& topology, int x) {
  if (x < 0 || x >= topology.universe().size()) {
    throw SpaceError("unknown point index " + std::to_string(x));
  }
  std::vector<PointSet> out;
  for (PointSet o : topology.opens()) {
    if (o.contains(x)) out.push_back(o);
  }
  return SetFamily(std::move(out));
}

SetFamily neighborhoods(const IdealAuraSpace& space, int x) {
  return neighborhoods(space.topology(), x);
}

PointSet classical_closure(const FiniteTopology& topology, PointSet a) {
  PointSet cl;
  for (int x = 0; x < topology.universe().size(); ++x) {
    if (topology.minimal_neighborhood(x).intersects(a)) cl |= PointSet::singleton(x);
  }
  return cl;
}

PointSet classical_interior(const FiniteTopology& topology, PointSet a) {
  PointSet in;
  for (int x : a) {
    if (topology.minimal_neighborhood(x).subset_of(a)) in |= PointSet::singleton(x);
  }
  return in;
}

}  // namespace auraspace
