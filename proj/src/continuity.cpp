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

#include "auraspace/continuity.hpp"

#include "auraspace/space_io.hpp"
#include "auraspace/topologies.hpp"

namespace auraspace {

SpaceMap::SpaceMap(IdealAuraSpace source, IdealAuraSpace target, std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != source_.size()) {
    throw SpaceError("map table has " + std::to_string(table_.size()) + " entries for " +
                     std::to_string(source_.size()) + " source points");
  }
  for (int y : table_) {
    if (y < 0 || y >= target_.size()) throw SpaceError("map image index out of range: " + std::to_string(y));
  }
}

PointSet preimage(std::span<const int> table, PointSet v) {
  PointSet out;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (v.contains(table[x])) out |= PointSet::singleton(static_cast<int>(x));
  }
  return out;
}

PointSet SpaceMap::preimage(PointSet v) const { return auraspace::preimage(table_, v); }

PointSet SpaceMap::image(PointSet a) const {
  PointSet out;
  for (int x : a) out |= PointSet::singleton(table_[static_cast<std::size_t>(x)]);
  return out;
}

SpaceMap SpaceMap::identity(const IdealAuraSpace& space) {
  std::vector<int> table(static_cast<std::size_t>(space.size()));
  for (int x = 0; x < space.size(); ++x) table[static_cast<std::size_t>(x)] = x;
  return SpaceMap(space, space, std::move(table));
}

SetFamily target_family(const IdealAuraSpace& target, TargetFamily which) {
  return which == TargetFamily::CechIdealAura ? gen_tausa_c(target).opens() : target.topology().opens();
}

std::optional<PointSet> continuity_witness(std::span<const int> table, const SetFamily& source_family,
                                           const SetFamily& target_family) {
  for (PointSet v : target_family) {
    if (!source_family.contains(preimage(table, v))) return v;
  }
  return std::nullopt;
}

bool is_continuous(const SpaceMap& map, const SetFamily& source_family, const SetFamily& target_family) {
  return !continuity_witness(map.table(), source_family, target_family).has_value();
}

ContinuityProfile continuity_profile(std::span<const OpennessProfile> source_classes,
                                     std::span<const int> table, const SetFamily& target_family) {
  ContinuityProfile p;
  for (PointSet v : target_family) {
    const OpennessProfile& c = source_classes[preimage(table, v).bits()];
    p.continuous = p.continuous && c.ia_open;
    p.alpha = p.alpha && c.alpha;
    p.semi = p.semi && c.semi;
    p.pre = p.pre && c.pre;
    p.beta = p.beta && c.beta;
  }
  return p;
}

ContinuityProfile ia_continuity_profile(const SpaceMap& map, const SetFamily& target_family,
                                        ClassifierOptions options) {
  const auto classes = classify_all(map.source(), options);
  return continuity_profile(classes, map.table(), target_family);
}

ContinuityProfile ia_continuity_profile(const SpaceMap& map) {
  return ia_continuity_profile(map, target_family(map.target(), TargetFamily::CechIdealAura));
}

DecompositionReport decomposition_from_tables(bool source_transitive,
                                              std::span<const OpennessProfile> source_classes,
                                              const SetFamily& source_tausa, std::span<const int> table,
                                              const SetFamily& target_family) {
  DecompositionReport r;
  r.source_transitive = source_transitive;
  r.profile = continuity_profile(source_classes, table, target_family);
  r.tausa_continuous = !continuity_witness(table, source_tausa, target_family).has_value();
  r.first_holds = r.tausa_continuous == (r.profile.semi && r.profile.pre);
  r.second_holds = r.tausa_continuous == r.profile.alpha;
  if (!r.holds()) {
    for (PointSet v : target_family) {
      const PointSet pre = preimage(table, v);
      const OpennessProfile& c = source_classes[pre.bits()];
      if (!source_tausa.contains(pre) && (c.alpha || (c.semi && c.pre))) {
        r.witness = v;
        break;
      }
    }
  }
  return r;
}

DecompositionReport decomposition_check(const SpaceMap& map, const SetFamily& target_family, bool probe) {
  const bool transitive = map.source().is_transitive();
  if (!transitive && !probe) throw NotTransitive();
  const auto classes = classify_all(map.source());
  return decomposition_from_tables(transitive, classes, gen_tausa(map.source()).opens(), map.table(),
                                   target_family);
}

ComparisonReport comparison_chain_check(const SpaceMap& map, const SetFamily& target_family) {
  const IdealAuraSpace& s = map.source();
  ComparisonReport r;
  r.aura_continuous = is_continuous(map, gen_tau_aura(s).opens(), target_family);
  r.tausa_continuous = is_continuous(map, gen_tausa(s).opens(), target_family);
  const SetFamily star = gen_tau_star(s).opens();
  r.star_continuous = is_continuous(map, star, target_family);
  r.tau_continuous = is_continuous(map, s.topology().opens(), target_family);
  if (r.star_continuous && !r.tau_continuous) {
    r.statement_iii_witness = continuity_witness(map.table(), s.topology().opens(), target_family);
  }
  return r;
}

namespace {

IdealAuraSpace space_ref(const nlohmann::json& value, const std::filesystem::path& base_dir, const char* role) {
  if (value.is_string()) {
    std::filesystem::path p(value.get<std::string>());
    if (p.is_relative()) p = base_dir / p;
    return load_space(p);
  }
  if (value.is_object()) return space_from_json(value);
  throw SpaceError(std::string("map file: \"") + role + "\" must be a space object or a path");
}

}  // namespace

SpaceMap parse_map(std::string_view text, const std::filesystem::path& base_dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpaceError(std::string("map file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("source") || !doc.contains("target") || !doc.contains("map")) {
    throw SpaceError("map file: expected keys \"source\", \"target\" and \"map\"");
  }
  IdealAuraSpace source = space_ref(doc["source"], base_dir, "source");
  IdealAuraSpace target = space_ref(doc["target"], base_dir, "target");
  const auto& m = doc["map"];
  if (!m.is_object()) throw SpaceError("map file: \"map\" must be an object");
  std::vector<int> table(static_cast<std::size_t>(source.size()), -1);
  for (const auto& [key, value] : m.items()) {
    const auto x = source.universe().index_of(key);
    if (!x) throw SpaceError("map file: unknown source point '" + key + "'");
    if (!value.is_string()) throw SpaceError("map file: image of '" + key + "' must be a point name");
    const auto y = target.universe().index_of(value.get<std::string>());
    if (!y) throw SpaceError("map file: unknown target point '" + value.get<std::string>() + "'");
    table[static_cast<std::size_t>(*x)] = *y;
  }
  for (int x = 0; x < source.size(); ++x) {
    if (table[static_cast<std::size_t>(x)] < 0) {
      throw SpaceError("map file: no image for source point '" + source.universe().name(x) + "'");
    }
  }
  return SpaceMap(std::move(source), std::move(target), std::move(table));
}

SpaceMap load_map(const std::filesystem::path& path) {
  return parse_map(read_text_file(path), path.parent_path());
}

nlohmann::ordered_json map_to_json(const SpaceMap& map) {
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  for (int x = 0; x < map.source().size(); ++x) {
    table[map.source().universe().name(x)] = map.target().universe().name(map.table()[static_cast<std::size_t>(x)]);
  }
  return table;
}

}  // namespace auraspace
