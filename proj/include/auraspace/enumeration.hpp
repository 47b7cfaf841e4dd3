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

// Streams of small ideal-aura spaces: exhaustive in a fixed order, or sampled
// from a seeded generator whose equations are given in the README.
//
// Exhaustive order: topologies by ascending family encoding, then ideals by
// ascending support, then scope functions lexicographically (point a most
// significant, choices for each point in ascending mask order).

#ifndef AURASPACE_ENUMERATION_HPP_
#define AURASPACE_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "auraspace/space.hpp"

namespace auraspace {

class ScaleRefused : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

/// Raised by callers that need an answer within a sampling budget and did not get one.
class BudgetExceeded : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

std::uint64_t splitmix64(std::uint64_t x);

/// xorshift64*: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; out = x * 0x2545F4914F6CDD1D.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t state) : state_(state == 0 ? 1 : state) {}
  std::uint64_t next();
  /// next() % bound; bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Generator for sample i of a run seeded with `seed`:
/// state = splitmix64(seed + 0x9E3779B97F4A7C15 * (i + 1)).
Xorshift64Star sample_rng(std::uint64_t seed, std::uint64_t index);

/// Every topology on n points, ascending by family encoding. n ≤ 5.
std::vector<FiniteTopology> all_topologies(int n);
/// Every ideal on n points (all are principal), ascending by support.
std::vector<Ideal> all_ideals(const Universe& u);
/// choices[x] = opens containing x, ascending.
std::vector<std::vector<PointSet>> scope_choices(const FiniteTopology& topology);

enum class SearchMode { Exhaustive, Random };
enum class TopologySource { All, Discrete, Fixed };
enum class IdealSource { All, PrincipalOnly, Fixed };

struct SearchConfig {
  int n = 3;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000;  // samples drawn in random mode
  TopologySource topology_source = TopologySource::All;
  IdealSource ideal_source = IdealSource::All;
  std::optional<FiniteTopology> fixed_topology;
  std::optional<Ideal> fixed_ideal;
  bool canonicalize = false;
  int jobs = 1;
};

/// Throws ScaleRefused or SpaceError when the configuration is out of range.
void check_config(const SearchConfig& config);

/// One topology and ideal with all their scope functions, as a contiguous
/// range [first_index, first_index + count) of the exhaustive stream.
struct SpaceBlock {
  FiniteTopology topology;
  Ideal ideal;
  std::vector<std::vector<PointSet>> choices;
  std::uint64_t first_index = 0;
  std::uint64_t count = 0;

  IdealAuraSpace space(std::uint64_t local) const;
};

std::vector<SpaceBlock> exhaustive_blocks(const SearchConfig& config);
std::uint64_t stream_length(const SearchConfig& config);

/// Sample `index` of a random-mode run.
IdealAuraSpace random_space(const SearchConfig& config, std::uint64_t index);
/// Random space with n drawn from [n_lo, n_hi], all topologies and ideals.
IdealAuraSpace random_space_between(int n_lo, int n_hi, std::uint64_t seed, std::uint64_t index);

/// True iff no relabeling permitted by the configuration yields a smaller
/// (topology encoding, ideal support, scope tuple) key.
bool is_canonical(const IdealAuraSpace& space, const SearchConfig& config);
/// The minimal relabeling over all n! permutations.
IdealAuraSpace canonical_form(const IdealAuraSpace& space);

/// Visits the stream in order; the visitor returns false to stop early.
/// Spaces rejected by canonicalization are skipped but keep their index.
void enumerate_spaces(const SearchConfig& config,
                      const std::function<bool(std::uint64_t index, const IdealAuraSpace&)>& visit);

std::string describe_config(const SearchConfig& config);

/// Random-access stream of spaces used by the law suite:
///   enum:n=K  enum:n=A..B            every space, exhaustive order, n ascending
///   random:n=A..B:count=C            C samples from random_space_between
///   path[,path...]                   space files
class SpaceSource {
 public:
  /// Throws SpaceError on malformed text, ScaleRefused beyond enumeration caps.
  static SpaceSource parse(std::string_view text, std::uint64_t seed);
  static SpaceSource exhaustive(int n_lo, int n_hi);
  static SpaceSource random(int n_lo, int n_hi, std::uint64_t count, std::uint64_t seed);
  static SpaceSource explicit_list(std::vector<IdealAuraSpace> spaces, std::string description);

  std::uint64_t size() const { return size_; }
  IdealAuraSpace at(std::uint64_t index) const;
  int max_n() const { return max_n_; }
  const std::string& description() const { return description_; }

 private:
  enum class Kind { Exhaustive, Random, List };
  SpaceSource() = default;

  Kind kind_ = Kind::List;
  std::uint64_t size_ = 0;
  int min_n_ = 1;
  int max_n_ = 1;
  std::uint64_t seed_ = 0;
  std::vector<SpaceBlock> blocks_;
  std::vector<IdealAuraSpace> spaces_;
  std::string description_;
};

}  // namespace auraspace

#endif  // AURASPACE_ENUMERATION_HPP_
