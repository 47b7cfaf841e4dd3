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

#include "auraspace/point_set.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace auraspace {

Universe::Universe(std::vector<std::string> names) {
  if (names.size() > static_cast<std::size_t>(kMaxPoints)) {
    throw SpaceError("universe has " + std::to_string(names.size()) + " points; at most " +
                     std::to_string(kMaxPoints) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw SpaceError("point labels must be non-empty");
    if (!seen.insert(name).second) throw SpaceError("duplicate point label '" + name + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Universe Universe::letters(int n) {
  if (n < 0 || n > kMaxPoints) throw SpaceError("universe size out of range: " + std::to_string(n));
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Universe(std::move(names));
}

std::optional<int> Universe::index_of(std::string_view name) const {
  const auto& v = *names_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

SetFamily::SetFamily(std::vector<PointSet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(PointSet s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool SetFamily::subset_of(const SetFamily& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

PointSet SetFamily::union_all() const {
  PointSet u;
  for (PointSet s : members_) u |= s;
  return u;
}

std::uint64_t SetFamily::encode() const {
  std::uint64_t code = 0;
  for (PointSet s : members_) {
    if (s.bits() >= 64) throw std::logic_error("family encoding needs a universe of at most 6 points");
    code |= std::uint64_t{1} << s.bits();
  }
  return code;
}

SetFamily power_set(int n) {
  std::vector<PointSet> all;
  all.reserve(std::size_t{1} << n);
  for_each_subset(PointSet::full(n), [&](PointSet s) { all.push_back(s); });
  return SetFamily(std::move(all));
}

std::string format_set(const Universe& u, PointSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ',';
    first = false;
    out += i < u.size() ? u.name(i) : "#" + std::to_string(i);
  }
  out += '}';
  return out;
}

std::string format_family(const Universe& u, const SetFamily& f) {
  std::string out = "{";
  bool first = true;
  for (PointSet s : f) {
    if (!first) out += ',';
    first = false;
    out += format_set(u, s);
  }
  out += '}';
  return out;
}

PointSet parse_set(const Universe& u, std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw SpaceError("set expression must look like {a,b}: '" + std::string(text) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  PointSet result;
  if (body.empty()) return result;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = trim(body.substr(0, comma));
    if (item.empty()) throw SpaceError("empty element in set expression '" + std::string(text) + "'");
    const auto index = u.index_of(item);
    if (!index) throw SpaceError("unknown point '" + std::string(item) + "'");
    result |= PointSet::singleton(*index);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return result;
}

}  // namespace auraspace
