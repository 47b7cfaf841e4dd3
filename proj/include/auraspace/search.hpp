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

// Witness search over the enumeration stream. Every predicate is invariant
// under relabeling points, and reports the first satisfying subsets of a space
// in mask order so that a serialized witness re-verifies exactly.

#ifndef AURASPACE_SEARCH_HPP_
#define AURASPACE_SEARCH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "auraspace/enumeration.hpp"

namespace auraspace {

class UnknownPredicate : public SpaceError {
 public:
  explicit UnknownPredicate(std::string_view id) : SpaceError("unknown predicate '" + std::string(id) + "'") {}
};

enum class PredicateRole {
  Strictness,   // exhibits that an inclusion can be strict
  Refutation,   // contradicts a statement that its own proof withdraws
  OpenQuestion, // existence unknown; NotFound is evidence only
  Census,       // collects positive instances
};

struct PredicateInfo {
  std::string id;
  PredicateRole role;
  std::string description;
};

const std::vector<PredicateInfo>& predicate_registry();

/// `NONIDEMPOTENT_K(3)`, `NONIDEMPOTENT_K:3` and `NONIDEMPOTENT_K` (k = 2) are
/// accepted; other ids take no parameter.
struct PredicateSpec {
  std::string id;
  int k = 0;

  std::string text() const;
  const PredicateInfo& info() const;
};

PredicateSpec parse_predicate(std::string_view text);

struct Witness {
  std::string predicate;  // PredicateSpec::text()
  std::uint64_t index = 0;
  std::string config;
  std::vector<std::pair<std::string, PointSet>> subsets;
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  IdealAuraSpace space;
};

/// Empty when the space does not satisfy the predicate.
std::optional<Witness> evaluate_predicate(const PredicateSpec& p, const IdealAuraSpace& space);

struct SearchResult {
  std::optional<Witness> witness;
  std::uint64_t examined = 0;  // stream positions up to and including the witness
  std::uint64_t skipped = 0;   // non-canonical positions among them
  bool budget_exhausted = false;
  std::string config;
};

SearchResult find_witness(const PredicateSpec& p, const SearchConfig& config);

/// One line: found / NotFound plus the role-specific reading of the outcome.
std::string describe_outcome(const PredicateSpec& p, const SearchResult& r);

std::string serialize_witness(const Witness& w);
/// Throws SpaceFormatError / SpaceError for malformed input.
Witness parse_witness(std::string_view text);
/// True iff re-running the predicate on the witness space reproduces its
/// subsets and metrics.
bool verify_witness(const Witness& w);
bool has_witness_block(std::string_view text);

struct StabilizationCensus {
  std::map<int, std::uint64_t> transitive;      // max stabilized_at -> spaces
  std::map<int, std::uint64_t> non_transitive;
  std::uint64_t examined = 0;
  int max_index = 0;
};

/// Throws std::logic_error if any trace exceeds n steps.
StabilizationCensus stabilization_census(const SearchConfig& config);
std::string format_census(const StabilizationCensus& c);
nlohmann::ordered_json census_to_json(const StabilizationCensus& c);

}  // namespace auraspace

#endif  // AURASPACE_SEARCH_HPP_
