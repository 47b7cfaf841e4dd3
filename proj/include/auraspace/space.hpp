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

// Finite topologies, ideals and scope functions, with exhaustive axiom
// validation. Every type here is an immutable value once constructed.

#ifndef AURASPACE_SPACE_HPP_
#define AURASPACE_SPACE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "auraspace/point_set.hpp"

namespace auraspace {

enum class ViolationKind {
  OutOfUniverse,          // a member mentions a point outside the universe
  MissingEmpty,
  MissingFull,
  NotUnionClosed,         // first ∪ second is missing
  NotIntersectionClosed,  // first ∩ second is missing
  NotHereditary,          // second ⊆ first is missing
  NotACover,              // `point` lies in no basis member
  ScopeArity,             // scope has the wrong number of entries
  ScopeMissesPoint,       // point ∉ aura(point)
  ScopeNotOpen,           // aura(point) is not open
  UniverseMismatch,
};

std::string_view to_string(ViolationKind kind);

/// One failed axiom together with the sets (or point) that witness it.
struct Violation {
  ViolationKind kind;
  PointSet first;
  PointSet second;
  int point = -1;

  std::string describe(const Universe& u) const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Raised by the throwing constructors; carries every violation found.
class ValidationError : public SpaceError {
 public:
  ValidationError(std::string what, std::vector<Violation> violations)
      : SpaceError(std::move(what)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Either a validated value or the complete list of violations.
template <class T>
class Validated {
 public:
  Validated(T value) : value_(std::move(value)) {}
  Validated(std::vector<Violation> violations) : violations_(std::move(violations)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }
  const std::vector<Violation>& violations() const { return violations_; }

  const T& value() const& {
    if (!value_) throw ValidationError("value is not valid", violations_);
    return *value_;
  }
  T value() && {
    if (!value_) throw ValidationError("value is not valid", violations_);
    return std::move(*value_);
  }

 private:
  std::optional<T> value_;
  std::vector<Violation> violations_;
};

class FiniteTopology {
 public:
  const Universe& universe() const { return universe_; }
  const SetFamily& opens() const { return opens_; }
  bool is_open(PointSet s) const {
    const auto b = s.bits();
    return (membership_[b >> 6] >> (b & 63)) & 1U;
  }
  bool is_closed(PointSet s) const { return is_open(complement(s, universe_.size())); }
  /// Intersection of all opens containing `x`; itself open on a finite space.
  PointSet minimal_neighborhood(int x) const { return min_nbhd_[static_cast<std::size_t>(x)]; }

  static FiniteTopology discrete(const Universe& u);
  static FiniteTopology indiscrete(const Universe& u);
  /// Throws ValidationError listing every violation.
  static FiniteTopology make(const Universe& u, SetFamily opens);

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.universe_ == b.universe_ && a.opens_ == b.opens_;
  }

 private:
  friend Validated<FiniteTopology> validate_topology(const Universe&, SetFamily);
  FiniteTopology(Universe u, SetFamily opens);

  Universe universe_;
  SetFamily opens_;
  std::vector<std::uint64_t> membership_;
  std::vector<PointSet> min_nbhd_;
};

Validated<FiniteTopology> validate_topology(const Universe& u, SetFamily family);

/// An ideal on a finite universe. Union-closure plus heredity force it to be
/// the power set of its largest member (`support`).
class Ideal {
 public:
  const Universe& universe() const { return universe_; }
  const SetFamily& members() const { return members_; }
  PointSet support() const { return support_; }
  bool contains(PointSet s) const { return s.subset_of(support_); }
  bool is_trivial() const { return support_.empty(); }
  bool is_improper() const { return support_ == universe_.full(); }

  static Ideal trivial(const Universe& u) { return principal(u, PointSet{}); }
  static Ideal improper(const Universe& u) { return principal(u, u.full()); }
  /// All subsets of `top`.
  static Ideal principal(const Universe& u, PointSet top);
  static Ideal make(const Universe& u, SetFamily members);

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.universe_ == b.universe_ && a.support_ == b.support_;
  }

 private:
  friend Validated<Ideal> validate_ideal(const Universe&, SetFamily);
  Ideal(Universe u, SetFamily members);

  Universe universe_;
  SetFamily members_;
  PointSet support_;
};

Validated<Ideal> validate_ideal(const Universe& u, SetFamily family);

/// Smallest ideal containing every generator: all subsets of finite unions.
Ideal ideal_from_generators(const Universe& u, const SetFamily& generators);

/// aura[i] is the fixed open neighbourhood assigned to point i.
class ScopeFunction {
 public:
  const std::vector<PointSet>& values() const { return aura_; }
  PointSet operator()(int x) const { return aura_[static_cast<std::size_t>(x)]; }
  int size() const { return static_cast<int>(aura_.size()); }
  /// y ∈ aura(x) implies aura(y) ⊆ aura(x).
  bool is_transitive() const;

  friend bool operator==(const ScopeFunction&, const ScopeFunction&) = default;

 private:
  friend class IdealAuraSpace;
  friend Validated<ScopeFunction> validate_scope(const FiniteTopology&, std::vector<PointSet>);
  explicit ScopeFunction(std::vector<PointSet> aura) : aura_(std::move(aura)) {}
  std::vector<PointSet> aura_;
};

Validated<ScopeFunction> validate_scope(const FiniteTopology& topology, std::vector<PointSet> aura);

/// The quadruple (X, τ, 𝓘, 𝔞).
class IdealAuraSpace {
 public:
  const Universe& universe() const { return topology_.universe(); }
  int size() const { return universe().size(); }
  PointSet full() const { return universe().full(); }
  const FiniteTopology& topology() const { return topology_; }
  const Ideal& ideal() const { return ideal_; }
  const ScopeFunction& scope() const { return scope_; }
  PointSet aura(int x) const { return scope_(x); }
  bool is_transitive() const { return transitive_; }

  /// Same topology and scope function under another ideal on the same universe.
  IdealAuraSpace with_ideal(Ideal ideal) const;

  /// Throws ValidationError listing every violation.
  static IdealAuraSpace make(FiniteTopology topology, Ideal ideal, std::vector<PointSet> aura);

  friend bool operator==(const IdealAuraSpace& a, const IdealAuraSpace& b) {
    return a.topology_ == b.topology_ && a.ideal_ == b.ideal_ && a.scope_ == b.scope_;
  }

 private:
  friend Validated<IdealAuraSpace> validate_space(FiniteTopology, Ideal, std::vector<PointSet>);
  IdealAuraSpace(FiniteTopology t, Ideal i, ScopeFunction s);

  FiniteTopology topology_;
  Ideal ideal_;
  ScopeFunction scope_;
  bool transitive_ = false;
};

Validated<IdealAuraSpace> validate_space(FiniteTopology topology, Ideal ideal,
                                         std::vector<PointSet> aura);

/// All opens containing x. Throws SpaceError for an unknown point.
SetFamily neighborhoods(const FiniteTopology& topology, int x);
SetFamily neighborhoods(const IdealAuraSpace& space, int x);

PointSet classical_closure(const FiniteTopology& topology, PointSet a);
PointSet classical_interior(const FiniteTopology& topology, PointSet a);

/// Finite topology generated by `subbasis`: ∅, X and the closure under ∪ and ∩.
FiniteTopology topology_from_subbasis(const Universe& u, const std::vector<PointSet>& subbasis);

/// Scope function assigning each point its minimal open neighbourhood.
std::vector<PointSet> minimal_scope(const FiniteTopology& topology);

}  // namespace auraspace

#endif  // AURASPACE_SPACE_HPP_
