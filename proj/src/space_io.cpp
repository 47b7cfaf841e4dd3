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

#include "auraspace/space_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace auraspace {
namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  std::string msg = "invalid space description";
  for (const auto& p : problems) msg += "\n  " + p;
  return msg;
}

// Reads a list of point-name lists, recording unknown names instead of throwing.
std::vector<PointSet> read_family(const Universe& u, const nlohmann::json& value, std::string_view where,
                                  std::vector<std::string>& problems) {
  std::vector<PointSet> out;
  if (!value.is_array()) {
    problems.push_back(std::string(where) + ": expected an array of sets");
    return out;
  }
  for (const auto& item : value) {
    try {
      out.push_back(set_from_json(u, item));
    } catch (const SpaceError& e) {
      problems.push_back(std::string(where) + ": " + e.what());
    }
  }
  return out;
}

void append_violations(const Universe& u, std::string_view where, const std::vector<Violation>& v,
                       std::vector<std::string>& problems) {
  for (const auto& item : v) problems.push_back(std::string(where) + ": " + item.describe(u));
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string set_text(const Universe& u, PointSet s) {
  std::string out = "[";
  bool first = true;
  for (int i : s) {
    if (!first) out += ',';
    first = false;
    out += json_string(u.name(i));
  }
  return out + "]";
}

std::string family_text(const Universe& u, const SetFamily& f) {
  std::string out = "[";
  bool first = true;
  for (PointSet s : f) {
    if (!first) out += ',';
    first = false;
    out += set_text(u, s);
  }
  return out + "]";
}

}  // namespace

SpaceFormatError::SpaceFormatError(std::vector<std::string> problems)
    : SpaceError(join_problems(problems)), problems_(std::move(problems)) {}

nlohmann::json set_to_json(const Universe& u, PointSet s) {
  auto arr = nlohmann::json::array();
  for (int i : s) arr.push_back(u.name(i));
  return arr;
}

PointSet set_from_json(const Universe& u, const nlohmann::json& value) {
  if (!value.is_array()) throw SpaceError("expected a list of point names, got " + value.dump());
  PointSet s;
  for (const auto& item : value) {
    if (!item.is_string()) throw SpaceError("point names must be strings, got " + item.dump());
    const auto index = u.index_of(item.get<std::string>());
    if (!index) throw SpaceError("unknown point '" + item.get<std::string>() + "'");
    s |= PointSet::singleton(*index);
  }
  return s;
}

IdealAuraSpace space_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SpaceFormatError({"document: expected a JSON object"});
  static const std::set<std::string> known{"format", "points", "opens", "ideal", "aura", "witness"};
  std::vector<std::string> problems;
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) problems.push_back("document: unknown key '" + key + "'");
  }
  if (doc.contains("format") &&
      (!doc["format"].is_string() || doc["format"].get<std::string>() != kSpaceFormat)) {
    problems.push_back("format: expected \"" + std::string(kSpaceFormat) + "\", got " + doc["format"].dump());
  }
  for (const char* key : {"points", "opens", "ideal", "aura"}) {
    if (!doc.contains(key)) problems.push_back(std::string("document: missing \"") + key + "\"");
  }
  if (!problems.empty()) throw SpaceFormatError(std::move(problems));

  std::vector<std::string> names;
  if (!doc["points"].is_array()) throw SpaceFormatError({"points: expected an array of names"});
  for (const auto& p : doc["points"]) {
    if (!p.is_string()) throw SpaceFormatError({"points: names must be strings, got " + p.dump()});
    names.push_back(p.get<std::string>());
  }
  Universe u = [&] {
    try {
      return Universe(std::move(names));
    } catch (const SpaceError& e) {
      throw SpaceFormatError({std::string("points: ") + e.what()});
    }
  }();

  // Topology.
  const SetFamily opens(read_family(u, doc["opens"], "opens", problems));
  auto topology = validate_topology(u, opens);
  if (!topology) append_violations(u, "opens", topology.violations(), problems);

  // Ideal: explicit members or generators.
  std::optional<Ideal> ideal;
  const auto& ideal_doc = doc["ideal"];
  if (ideal_doc.is_object() && ideal_doc.size() == 1 && ideal_doc.contains("members")) {
    const SetFamily members(read_family(u, ideal_doc["members"], "ideal.members", problems));
    auto v = validate_ideal(u, members);
    if (v) {
      ideal = std::move(v).value();
    } else {
      append_violations(u, "ideal", v.violations(), problems);
    }
  } else if (ideal_doc.is_object() && ideal_doc.size() == 1 && ideal_doc.contains("generators")) {
    const SetFamily gens(read_family(u, ideal_doc["generators"], "ideal.generators", problems));
    ideal = ideal_from_generators(u, gens);
  } else {
    problems.push_back("ideal: expected {\"members\": [...]} or {\"generators\": [...]}");
  }

  // Scope function, checked against the raw open family so that its
  // violations are reported even when the topology itself is invalid.
  std::vector<PointSet> aura(static_cast<std::size_t>(u.size()));
  const auto& aura_doc = doc["aura"];
  if (!aura_doc.is_object()) {
    problems.push_back("aura: expected an object mapping each point to a set");
  } else {
    for (const auto& [key, value] : aura_doc.items()) {
      if (!u.index_of(key)) problems.push_back("aura: unknown point '" + key + "'");
    }
    for (int x = 0; x < u.size(); ++x) {
      if (!aura_doc.contains(u.name(x))) {
        problems.push_back("aura: no value for point '" + u.name(x) + "'");
        continue;
      }
      try {
        const PointSet ax = set_from_json(u, aura_doc[u.name(x)]);
        aura[static_cast<std::size_t>(x)] = ax;
        if (!ax.contains(x)) {
          problems.push_back("aura: " + Violation{ViolationKind::ScopeMissesPoint, ax, {}, x}.describe(u));
        }
        if (!opens.contains(ax)) {
          problems.push_back("aura: " + Violation{ViolationKind::ScopeNotOpen, ax, {}, x}.describe(u));
        }
      } catch (const SpaceError& e) {
        problems.push_back("aura." + u.name(x) + ": " + e.what());
      }
    }
  }

  if (!problems.empty()) throw SpaceFormatError(std::move(problems));
  return IdealAuraSpace::make(std::move(topology).value(), std::move(*ideal), std::move(aura));
}

IdealAuraSpace parse_space(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpaceFormatError({std::string("json: ") + e.what()});
  }
  return space_from_json(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpaceError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IdealAuraSpace load_space(const std::filesystem::path& path) { return parse_space(read_text_file(path)); }

std::string serialize_space(const IdealAuraSpace& space, const nlohmann::ordered_json& extra) {
  const Universe& u = space.universe();
  std::string out;
  out += "{\"format\": " + json_string(std::string(kSpaceFormat)) + ",\n";
  out += " \"points\": [";
  for (int i = 0; i < u.size(); ++i) {
    if (i) out += ',';
    out += json_string(u.name(i));
  }
  out += "],\n";
  out += " \"opens\":  " + family_text(u, space.topology().opens()) + ",\n";
  out += " \"ideal\":  {\"members\": " + family_text(u, space.ideal().members()) + "},\n";
  out += " \"aura\":   {";
  for (int i = 0; i < u.size(); ++i) {
    if (i) out += ", ";
    out += json_string(u.name(i)) + ": " + set_text(u, space.aura(i));
  }
  out += "}";
  for (const auto& [key, value] : extra.items()) {
    out += ",\n " + json_string(key) + ": " + value.dump();
  }
  out += "}\n";
  return out;
}

}  // namespace auraspace
