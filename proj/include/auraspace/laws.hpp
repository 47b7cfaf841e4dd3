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

// Executable law suite. Each law is quantified over every subset of every
// space in a SpaceSource; map laws additionally range over every map into every
// topology on at most three points.
//
// Asserted laws fail the suite on any violation. Probes record
// counterexamples and observations but never fail.

#ifndef AURASPACE_LAWS_HPP_
#define AURASPACE_LAWS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "auraspace/classifiers.hpp"
#include "auraspace/enumeration.hpp"

namespace auraspace {

class UnknownLaw : public SpaceError {
 public:
  explicit UnknownLaw(std::string_view id) : SpaceError("unknown law '" + std::string(id) + "'") {}
};

enum class LawKind { Asserted, Probe };
enum class LawScope { Space, Map };
/// Spaces failing the hypothesis are skipped, never evaluated.
enum class Hypothesis { None, Transitive, NonTransitive, TrivialIdeal, NontrivialIdeal, ImproperIdeal, FullScope };

std::string_view to_string(LawKind k);
std::string_view to_string(Hypothesis h);

/// Every operator evaluated on every subset, indexed by mask.
struct SpaceTables {
  explicit SpaceTables(IdealAuraSpace space);

  IdealAuraSpace space;
  int n;
  PointSet full;
  std::uint32_t count;  // 2^n
  bool transitive;

  std::vector<PointSet> star, aura_local, star_closure, cl_aura, int_aura, clsa, clsa_inf, intsa, psi_aura, psi,
      cl, interior;
  std::vector<int> stabilized_at;
  SetFamily tau, tau_aura, tau_star, tausa, tausa_c;
  std::vector<OpennessProfile> classes;

  bool satisfies(Hypothesis h) const;
};

class Outcome {
 public:
  void fail(std::string detail);
  void remark(std::string detail);

  bool failed() const { return failures_ > 0; }
  std::uint64_t failures() const { return failures_; }
  std::uint64_t remarks() const { return remarks_; }
  const std::vector<std::string>& failure_details() const { return failure_details_; }
  const std::vector<std::string>& remark_details() const { return remark_details_; }

 private:
  static constexpr std::size_t kKeep = 3;
  std::uint64_t failures_ = 0;
  std::uint64_t remarks_ = 0;
  std::vector<std::string> failure_details_;
  std::vector<std::string> remark_details_;
};

/// A map table from a source space into a finite topology on points 0..m-1.
struct MapCase {
  std::span<const int> table;
  const SetFamily& target;  // target open sets
  int target_size;
};

using SpaceLawFn = void (*)(const SpaceTables&, Outcome&);
using MapLawFn = void (*)(const SpaceTables&, const MapCase&, Outcome&);

struct LawInfo {
  std::string id;
  LawKind kind;
  LawScope scope;
  Hypothesis hypothesis;
  std::string topic;
  std::string statement;
  SpaceLawFn space_fn = nullptr;
  MapLawFn map_fn = nullptr;
};

const std::vector<LawInfo>& law_registry();
/// Throws UnknownLaw.
const LawInfo& find_law(std::string_view id);

struct LawViolation {
  std::uint64_t space_index;
  std::string space;  // compact JSON of the space
  std::string detail;
};

struct LawReport {
  std::string law_id;
  LawKind kind = LawKind::Asserted;
  std::uint64_t spaces_checked = 0;
  std::uint64_t spaces_skipped = 0;
  std::uint64_t maps_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<LawViolation> violations;  // lowest space indices first, at most kMaxViolations
  std::uint64_t finding_count = 0;
  std::vector<LawViolation> findings;
  /// Set when a map law skipped spaces larger than kMapLawMaxSource.
  bool map_scale_skipped = false;

  static constexpr std::size_t kMaxViolations = 5;

  /// "pass" | "fail" | "probe-only"
  std::string status() const;
  bool ok() const { return kind == LawKind::Probe || violation_count == 0; }
};

inline constexpr int kMapLawMaxSource = 3;
inline constexpr int kMapLawMaxTarget = 3;

std::vector<LawReport> run_laws(const std::vector<std::string>& law_ids, const SpaceSource& source, int jobs = 1);
LawReport run_law(std::string_view law_id, const SpaceSource& source, int jobs = 1);
std::vector<std::string> all_law_ids();

std::string format_law_report(const LawReport& r);
nlohmann::ordered_json law_report_to_json(const LawReport& r);

}  // namespace auraspace

#endif  // AURASPACE_LAWS_HPP_
