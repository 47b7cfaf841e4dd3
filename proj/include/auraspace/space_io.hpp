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

// The `auraspace/1` space file format.
//
//   {"format": "auraspace/1",
//    "points": ["a","b","c"],
//    "opens":  [[],["a"],["b"],["a","b"],["a","b","c"]],
//    "ideal":  {"members": [[],["c"]]},          or {"generators": [["c"]]}
//    "aura":   {"a": ["a"], "b": ["a","b"], "c": ["a","b","c"]}}
//
// "format" may be omitted on input. Member order is irrelevant on input;
// serialization always emits canonical order (points by index, families by
// mask) so that serialize(parse(s)) is a fixed point.

#ifndef AURASPACE_SPACE_IO_HPP_
#define AURASPACE_SPACE_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "auraspace/space.hpp"

namespace auraspace {

inline constexpr std::string_view kSpaceFormat = "auraspace/1";

/// Malformed or axiom-violating space description. `problems` lists every
/// issue found, each prefixed by the component it concerns.
class SpaceFormatError : public SpaceError {
 public:
  explicit SpaceFormatError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

IdealAuraSpace space_from_json(const nlohmann::json& doc);
IdealAuraSpace parse_space(std::string_view text);
IdealAuraSpace load_space(const std::filesystem::path& path);

/// Canonical text form. Extra top-level blocks (e.g. a witness annotation)
/// are appended after "aura" in the order given.
std::string serialize_space(const IdealAuraSpace& space,
                            const nlohmann::ordered_json& extra = nlohmann::ordered_json::object());

nlohmann::json set_to_json(const Universe& u, PointSet s);
PointSet set_from_json(const Universe& u, const nlohmann::json& value);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace auraspace

#endif  // AURASPACE_SPACE_IO_HPP_
