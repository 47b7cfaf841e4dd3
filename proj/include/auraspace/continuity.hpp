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

// Maps between finite ideal-aura spaces and the continuity notions built on
// the generalized-open classes.
//
// Every check takes the target family explicitly. The class-based continuity
// notions are defined against the codomain's single-step ideal-aura topology
// (TargetFamily::CechIdealAura); the comparison chain is stated for the
// codomain's own topology (TargetFamily::Topology).

#ifndef AURASPACE_CONTINUITY_HPP_
#define AURASPACE_CONTINUITY_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "auraspace/classifiers.hpp"
#include "auraspace/space.hpp"

namespace auraspace {

class SpaceMap {
 public:
  /// table[x] is the image of source point x. Throws SpaceError if the table
  /// is not total or mentions an out-of-range target point.
  SpaceMap(IdealAuraSpace source, IdealAuraSpace target, std::vector<int> table);

  const IdealAuraSpace& source() const { return source_; }
  const IdealAuraSpace& target() const { return target_; }
  const std::vector<int>& table() const { return table_; }

  PointSet preimage(PointSet v) const;
  PointSet image(PointSet a) const;

  static SpaceMap identity(const IdealAuraSpace& space);

 private:
  IdealAuraSpace source_;
  IdealAuraSpace target_;
  std::vector<int> table_;
};

PointSet preimage(std::span<const int> table, PointSet v);

enum class TargetFamily { CechIdealAura, Topology };
SetFamily target_family(const IdealAuraSpace& target, TargetFamily which);

/// Preimage of every member of target_family lies in source_family.
bool is_continuous(const SpaceMap& map, const SetFamily& source_family, const SetFamily& target_family);
/// First target member whose preimage falls outside source_family.
std::optional<PointSet> continuity_witness(std::span<const int> table, const SetFamily& source_family,
                                           const SetFamily& target_family);

struct ContinuityProfile {
  bool continuous = true;
  bool alpha = true;
  bool semi = true;
  bool pre = true;
  bool beta = true;

  bool respects_hierarchy() const {
    return (!continuous || alpha) && (!alpha || (semi && pre)) && (!semi || beta) && (!pre || beta);
  }
  friend bool operator==(const ContinuityProfile&, const ContinuityProfile&) = default;
};

/// Profile from precomputed per-subset source classes (indexed by mask).
ContinuityProfile continuity_profile(std::span<const OpennessProfile> source_classes,
                                     std::span<const int> table, const SetFamily& target_family);

ContinuityProfile ia_continuity_profile(const SpaceMap& map, const SetFamily& target_family,
                                        ClassifierOptions options = {});
/// Against the target's single-step ideal-aura topology.
ContinuityProfile ia_continuity_profile(const SpaceMap& map);

class NotTransitive : public SpaceError {
 public:
  NotTransitive() : SpaceError("decomposition check requires a transitive source scope function") {}
};

/// Both decomposition equivalences for one map:
///   first:  preimages in the fixpoint topology  ⇔  (semi-continuous ∧ pre-continuous)
///   second: preimages in the fixpoint topology  ⇔  alpha-continuous
struct DecompositionReport {
  bool source_transitive = false;
  bool tausa_continuous = false;
  ContinuityProfile profile;
  bool first_holds = true;
  bool second_holds = true;
  /// Target member whose preimage is alpha-open (hence semi and pre) but not
  /// open in the fixpoint topology, when one exists.
  std::optional<PointSet> witness;

  bool holds() const { return first_holds && second_holds; }
};

DecompositionReport decomposition_from_tables(bool source_transitive,
                                              std::span<const OpennessProfile> source_classes,
                                              const SetFamily& source_tausa, std::span<const int> table,
                                              const SetFamily& target_family);

/// Throws NotTransitive for a non-transitive source unless `probe` is set.
DecompositionReport decomposition_check(const SpaceMap& map, const SetFamily& target_family, bool probe = false);

/// Continuity of one map with the source carrying each topology of the chain.
struct ComparisonReport {
  bool aura_continuous = false;
  bool tausa_continuous = false;
  bool star_continuous = false;
  bool tau_continuous = false;
  /// Preimage in tau_star but not in tau, when tau_star-continuity holds and
  /// tau-continuity fails.
  std::optional<PointSet> statement_iii_witness;

  /// tau_aura-continuous ⇒ tausa-continuous ⇒ tau_star-continuous.
  bool chain_holds() const { return (!aura_continuous || tausa_continuous) && (!tausa_continuous || star_continuous); }
  /// tau_star-continuous ⇒ tau-continuous. Probed only; it fails in general.
  bool statement_iii_holds() const { return !star_continuous || tau_continuous; }
};

ComparisonReport comparison_chain_check(const SpaceMap& map, const SetFamily& target_family);

/// Map file: {"source": <space or path>, "target": <space or path>, "map": {"a": "x", ...}}.
/// Relative paths resolve against base_dir.
SpaceMap parse_map(std::string_view text, const std::filesystem::path& base_dir = {});
SpaceMap load_map(const std::filesystem::path& path);
nlohmann::ordered_json map_to_json(const SpaceMap& map);

}  // namespace auraspace

#endif  // AURASPACE_CONTINUITY_HPP_
