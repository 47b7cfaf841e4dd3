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

#include "auraspace/enumeration.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "auraspace/space_io.hpp"

namespace auraspace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

Xorshift64Star sample_rng(std::uint64_t seed, std::uint64_t index) {
  return Xorshift64Star(splitmix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

namespace {

// Families over at most 6 points as 64-bit membership words.
std::uint64_t close_family(std::uint64_t code) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < 64; ++i) {
      if (!((code >> i) & 1U)) continue;
      for (int j = 0; j < i; ++j) {
        if (!((code >> j) & 1U)) continue;
        const std::uint64_t add = (std::uint64_t{1} << (i | j)) | (std::uint64_t{1} << (i & j));
        if ((code | add) != code) {
          code |= add;
          grew = true;
        }
      }
    }
  }
  return code;
}

SetFamily decode_family(std::uint64_t code) {
  std::vector<PointSet> members;
  for (int i = 0; i < 64; ++i) {
    if ((code >> i) & 1U) members.emplace_back(static_cast<PointSet::Bits>(i));
  }
  return SetFamily(std::move(members));
}

PointSet relabel(PointSet s, const std::array<int, 6>& perm) {
  PointSet out;
  for (int x : s) out |= PointSet::singleton(perm[static_cast<std::size_t>(x)]);
  return out;
}

std::uint64_t relabel_family(const SetFamily& f, const std::array<int, 6>& perm) {
  std::uint64_t code = 0;
  for (PointSet s : f) code |= std::uint64_t{1} << relabel(s, perm).bits();
  return code;
}

struct Key {
  std::uint64_t topology = 0;
  PointSet::Bits support = 0;
  std::array<PointSet::Bits, 6> aura{};
  friend auto operator<=>(const Key&, const Key&) = default;
};

Key key_of(const IdealAuraSpace& s, const std::array<int, 6>& perm) {
  Key k;
  k.topology = relabel_family(s.topology().opens(), perm);
  k.support = relabel(s.ideal().support(), perm).bits();
  for (int x = 0; x < s.size(); ++x) {
    k.aura[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = relabel(s.aura(x), perm).bits();
  }
  return k;
}

std::array<int, 6> identity_perm() {
  std::array<int, 6> p{};
  std::iota(p.begin(), p.end(), 0);
  return p;
}

template <class Fn>
void for_each_perm(int n, Fn&& fn) {
  std::array<int, 6> p = identity_perm();
  do {
    fn(p);
  } while (std::next_permutation(p.begin(), p.begin() + n));
}

IdealAuraSpace draw_space(int n, Xorshift64Star& rng, const SearchConfig& config) {
  const Universe u = Universe::letters(n);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  FiniteTopology topology = [&] {
    switch (config.topology_source) {
      case TopologySource::Discrete: return FiniteTopology::discrete(u);
      case TopologySource::Fixed: return *config.fixed_topology;
      case TopologySource::All: break;
    }
    std::vector<PointSet> subbasis(rng.uniform(static_cast<std::uint64_t>(n) + 1));
    for (auto& s : subbasis) s = PointSet(static_cast<PointSet::Bits>(rng.uniform(subsets)));
    return topology_from_subbasis(u, subbasis);
  }();
  Ideal ideal = [&] {
    if (config.ideal_source == IdealSource::Fixed) return *config.fixed_ideal;
    PointSet support;
    const std::uint64_t gens = rng.uniform(3);
    for (std::uint64_t g = 0; g < gens; ++g) support |= PointSet(static_cast<PointSet::Bits>(rng.uniform(subsets)));
    return Ideal::principal(u, support);
  }();
  const auto choices = scope_choices(topology);
  std::vector<PointSet> aura;
  for (const auto& c : choices) aura.push_back(c[rng.uniform(c.size())]);
  return IdealAuraSpace::make(std::move(topology), std::move(ideal), std::move(aura));
}

}  // namespace

std::vector<FiniteTopology> all_topologies(int n) {
  if (n < 1 || n > 5) throw ScaleRefused("topology enumeration supports 1 ≤ n ≤ 5");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t start = 1ULL | (std::uint64_t{1} << full);
  // Breadth-first: every topology is the closure of some smaller one plus one set.
  std::unordered_set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> queue{start};
  while (!queue.empty()) {
    const std::uint64_t code = queue.front();
    queue.pop_front();
    for (std::uint64_t s = 1; s < full; ++s) {
      if ((code >> s) & 1U) continue;
      const std::uint64_t next = close_family(code | (std::uint64_t{1} << s));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::uint64_t> codes(seen.begin(), seen.end());
  std::sort(codes.begin(), codes.end());
  const Universe u = Universe::letters(n);
  std::vector<FiniteTopology> out;
  out.reserve(codes.size());
  for (std::uint64_t c : codes) out.push_back(FiniteTopology::make(u, decode_family(c)));
  return out;
}

std::vector<Ideal> all_ideals(const Universe& u) {
  std::vector<Ideal> out;
  for (PointSet::Bits s = 0; s <= u.full().bits(); ++s) out.push_back(Ideal::principal(u, PointSet(s)));
  return out;
}

std::vector<std::vector<PointSet>> scope_choices(const FiniteTopology& topology) {
  std::vector<std::vector<PointSet>> out(static_cast<std::size_t>(topology.universe().size()));
  for (PointSet o : topology.opens()) {
    for (int x : o) out[static_cast<std::size_t>(x)].push_back(o);
  }
  return out;
}

void check_config(const SearchConfig& c) {
  if (c.n < 1 || c.n > 6) throw ScaleRefused("search supports 1 ≤ n ≤ 6, got n=" + std::to_string(c.n));
  if (c.jobs < 1) throw SpaceError("jobs must be at least 1");
  if (c.topology_source == TopologySource::Fixed &&
      (!c.fixed_topology || c.fixed_topology->universe().size() != c.n)) {
    throw SpaceError("fixed topology source needs a topology on exactly n points");
  }
  if (c.ideal_source == IdealSource::Fixed && (!c.fixed_ideal || c.fixed_ideal->universe().size() != c.n)) {
    throw SpaceError("fixed ideal source needs an ideal on exactly n points");
  }
  if (c.mode == SearchMode::Exhaustive && c.topology_source == TopologySource::All && c.n > 4) {
    throw ScaleRefused("exhaustive enumeration over all topologies is limited to n ≤ 4 (got n=" +
                       std::to_string(c.n) + "); use --topologies discrete or --mode random");
  }
  if (c.mode == SearchMode::Random && c.budget == 0) throw SpaceError("random mode needs a positive budget");
}

IdealAuraSpace SpaceBlock::space(std::uint64_t local) const {
  std::vector<PointSet> aura(choices.size());
  for (std::size_t x = choices.size(); x-- > 0;) {
    aura[x] = choices[x][local % choices[x].size()];
    local /= choices[x].size();
  }
  return IdealAuraSpace::make(topology, ideal, std::move(aura));
}

std::vector<SpaceBlock> exhaustive_blocks(const SearchConfig& config) {
  check_config(config);
  const Universe u = Universe::letters(config.n);
  std::vector<FiniteTopology> topologies;
  switch (config.topology_source) {
    case TopologySource::All: topologies = all_topologies(config.n); break;
    case TopologySource::Discrete: topologies.push_back(FiniteTopology::discrete(u)); break;
    case TopologySource::Fixed: topologies.push_back(*config.fixed_topology); break;
  }
  const std::vector<Ideal> ideals =
      config.ideal_source == IdealSource::Fixed ? std::vector<Ideal>{*config.fixed_ideal} : all_ideals(u);
  std::vector<SpaceBlock> blocks;
  std::uint64_t index = 0;
  for (const auto& t : topologies) {
    auto choices = scope_choices(t);
    std::uint64_t count = 1;
    for (const auto& c : choices) count *= c.size();
    for (const auto& i : ideals) {
      blocks.push_back(SpaceBlock{t, i, choices, index, count});
      index += count;
    }
  }
  return blocks;
}

std::uint64_t stream_length(const SearchConfig& config) {
  if (config.mode == SearchMode::Random) return config.budget;
  std::uint64_t total = 0;
  for (const auto& b : exhaustive_blocks(config)) total += b.count;
  return total;
}

IdealAuraSpace random_space(const SearchConfig& config, std::uint64_t index) {
  Xorshift64Star rng = sample_rng(config.seed, index);
  return draw_space(config.n, rng, config);
}

IdealAuraSpace random_space_between(int n_lo, int n_hi, std::uint64_t seed, std::uint64_t index) {
  Xorshift64Star rng = sample_rng(seed, index);
  const int n = n_lo + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n_hi - n_lo + 1)));
  SearchConfig config;
  config.n = n;
  return draw_space(n, rng, config);
}

bool is_canonical(const IdealAuraSpace& space, const SearchConfig& config) {
  const int n = space.size();
  if (n > 6) throw ScaleRefused("canonicalization supports n ≤ 6");
  const Key own = key_of(space, identity_perm());
  bool canonical = true;
  for_each_perm(n, [&](const std::array<int, 6>& p) {
    if (!canonical) return;
    const Key k = key_of(space, p);
    if (config.topology_source == TopologySource::Fixed && k.topology != own.topology) return;
    if (config.ideal_source == IdealSource::Fixed && k.support != own.support) return;
    if (k < own) canonical = false;
  });
  return canonical;
}

IdealAuraSpace canonical_form(const IdealAuraSpace& space) {
  const int n = space.size();
  if (n > 6) throw ScaleRefused("canonicalization supports n ≤ 6");
  std::array<int, 6> best = identity_perm();
  Key best_key = key_of(space, best);
  for_each_perm(n, [&](const std::array<int, 6>& p) {
    const Key k = key_of(space, p);
    if (k < best_key) {
      best_key = k;
      best = p;
    }
  });
  const Universe& u = space.universe();
  const FiniteTopology t = FiniteTopology::make(u, decode_family(best_key.topology));
  std::vector<PointSet> aura;
  for (int x = 0; x < n; ++x) aura.emplace_back(best_key.aura[static_cast<std::size_t>(x)]);
  return IdealAuraSpace::make(t, Ideal::principal(u, PointSet(best_key.support)), std::move(aura));
}

void enumerate_spaces(const SearchConfig& config,
                      const std::function<bool(std::uint64_t, const IdealAuraSpace&)>& visit) {
  check_config(config);
  if (config.mode == SearchMode::Random) {
    for (std::uint64_t i = 0; i < config.budget; ++i) {
      const IdealAuraSpace s = random_space(config, i);
      if (config.canonicalize && !is_canonical(s, config)) continue;
      if (!visit(i, s)) return;
    }
    return;
  }
  for (const auto& block : exhaustive_blocks(config)) {
    for (std::uint64_t local = 0; local < block.count; ++local) {
      const IdealAuraSpace s = block.space(local);
      if (config.canonicalize && !is_canonical(s, config)) continue;
      if (!visit(block.first_index + local, s)) return;
    }
  }
}

std::string describe_config(const SearchConfig& c) {
  std::string out = "n=" + std::to_string(c.n);
  if (c.mode == SearchMode::Exhaustive) {
    out += " exhaustive";
  } else {
    out += " random seed=" + std::to_string(c.seed) + " budget=" + std::to_string(c.budget);
  }
  static constexpr const char* kTop[] = {"all", "discrete", "fixed"};
  static constexpr const char* kIdeal[] = {"all", "principal", "fixed"};
  out += std::string(", topologies=") + kTop[static_cast<int>(c.topology_source)];
  out += std::string(", ideals=") + kIdeal[static_cast<int>(c.ideal_source)];
  out += c.canonicalize ? ", canonicalize=on" : ", canonicalize=off";
  return out;
}

SpaceSource SpaceSource::exhaustive(int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi < n_lo) throw SpaceError("enumeration range must satisfy 1 ≤ A ≤ B");
  SpaceSource src;
  src.kind_ = Kind::Exhaustive;
  src.min_n_ = n_lo;
  src.max_n_ = n_hi;
  for (int n = n_lo; n <= n_hi; ++n) {
    SearchConfig config;
    config.n = n;
    for (SpaceBlock& b : exhaustive_blocks(config)) {
      b.first_index += src.size_;
      src.blocks_.push_back(std::move(b));
    }
    src.size_ = src.blocks_.back().first_index + src.blocks_.back().count;
  }
  src.description_ = n_lo == n_hi ? "enum:n=" + std::to_string(n_lo)
                                  : "enum:n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi);
  return src;
}

SpaceSource SpaceSource::random(int n_lo, int n_hi, std::uint64_t count, std::uint64_t seed) {
  if (n_lo < 1 || n_hi < n_lo || n_hi > 6) throw SpaceError("random range must satisfy 1 ≤ A ≤ B ≤ 6");
  SpaceSource src;
  src.kind_ = Kind::Random;
  src.min_n_ = n_lo;
  src.max_n_ = n_hi;
  src.size_ = count;
  src.seed_ = seed;
  src.description_ = "random:n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi) +
                     ":count=" + std::to_string(count) + " seed=" + std::to_string(seed);
  return src;
}

SpaceSource SpaceSource::explicit_list(std::vector<IdealAuraSpace> spaces, std::string description) {
  SpaceSource src;
  src.kind_ = Kind::List;
  src.size_ = spaces.size();
  src.min_n_ = 1;
  src.max_n_ = 1;
  for (const auto& s : spaces) src.max_n_ = std::max(src.max_n_, s.size());
  src.spaces_ = std::move(spaces);
  src.description_ = std::move(description);
  return src;
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw SpaceError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::pair<int, int> parse_range(std::string_view text) {
  if (!text.starts_with("n=")) throw SpaceError("expected n=K or n=A..B, got '" + std::string(text) + "'");
  text.remove_prefix(2);
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    return {parse_int(text.substr(0, dots), "size"), parse_int(text.substr(dots + 2), "size")};
  }
  const int n = parse_int(text, "size");
  return {n, n};
}

}  // namespace

SpaceSource SpaceSource::parse(std::string_view text, std::uint64_t seed) {
  if (text.starts_with("enum:")) {
    const auto [lo, hi] = parse_range(text.substr(5));
    return exhaustive(lo, hi);
  }
  if (text.starts_with("random:")) {
    text.remove_prefix(7);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || !text.substr(colon + 1).starts_with("count=")) {
      throw SpaceError("expected random:n=A..B:count=C");
    }
    const auto [lo, hi] = parse_range(text.substr(0, colon));
    const int count = parse_int(text.substr(colon + 7), "count");
    if (count < 0) throw SpaceError("count must be non-negative");
    return random(lo, hi, static_cast<std::uint64_t>(count), seed);
  }
  std::vector<IdealAuraSpace> spaces;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const auto path = text.substr(start, comma - start);
    if (!path.empty()) spaces.push_back(load_space(std::filesystem::path(std::string(path))));
    start = comma + 1;
  }
  if (spaces.empty()) throw SpaceError("no spaces in source '" + std::string(text) + "'");
  return explicit_list(std::move(spaces), std::string(text));
}

IdealAuraSpace SpaceSource::at(std::uint64_t index) const {
  if (index >= size_) throw SpaceError("space index out of range");
  switch (kind_) {
    case Kind::Exhaustive: {
      auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                                 [](std::uint64_t i, const SpaceBlock& b) { return i < b.first_index; });
      --it;
      return it->space(index - it->first_index);
    }
    case Kind::Random:
      return random_space_between(min_n_, max_n_, seed_, index);
    case Kind::List:
      break;
  }
  return spaces_[index];
}

}  // namespace auraspace
