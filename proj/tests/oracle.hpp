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

// Slow reference implementations for the tests. Sets are std::set<int> and
// every operator is read straight off its defining formula, so nothing here
// shares code with the bitmask library apart from the conversion at the edge.

#ifndef AURASPACE_TESTS_ORACLE_HPP_
#define AURASPACE_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

#include "auraspace/space.hpp"

namespace oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

inline Set to_set(auraspace::PointSet p) {
  Set s;
  for (int i = 0; i < 32; ++i) {
    if ((p.bits() >> i) & 1U) s.insert(i);
  }
  return s;
}

inline auraspace::PointSet to_points(const Set& s) {
  std::uint32_t b = 0;
  for (int i : s) b |= std::uint32_t{1} << i;
  return auraspace::PointSet(b);
}

inline Family to_family(const auraspace::SetFamily& f) {
  Family out;
  for (auto p : f.members()) out.insert(to_set(p));
  return out;
}

inline Set unite(const Set& a, const Set& b) {
  Set r = a;
  r.insert(b.begin(), b.end());
  return r;
}

inline Set meet(const Set& a, const Set& b) {
  Set r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
  return r;
}

inline Set minus(const Set& a, const Set& b) {
  Set r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
  return r;
}

inline bool within(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set whole(int n) {
  Set s;
  for (int i = 0; i < n; ++i) s.insert(i);
  return s;
}

inline std::vector<Set> all_subsets(int n) {
  std::vector<Set> out{Set{}};
  for (int i = 0; i < n; ++i) {
    const std::size_t k = out.size();
    for (std::size_t j = 0; j < k; ++j) {
      Set s = out[j];
      s.insert(i);
      out.push_back(s);
    }
  }
  return out;
}

inline bool is_topology(const Family& f, int n) {
  if (!f.count(Set{}) || !f.count(whole(n))) return false;
  for (const auto& a : f) {
    for (const auto& b : f) {
      if (!f.count(unite(a, b)) || !f.count(meet(a, b))) return false;
    }
  }
  return true;
}

inline bool is_ideal(const Family& f, int n) {
  if (!f.count(Set{})) return false;
  for (const auto& a : f) {
    for (const auto& b : f) {
      if (!f.count(unite(a, b))) return false;
    }
    for (const auto& s : all_subsets(n)) {
      if (within(s, a) && !f.count(s)) return false;
    }
  }
  return true;
}

/// Every family of subsets of an n-set, filtered by `keep`. n ≤ 3.
template <class Keep>
std::vector<Family> all_families(int n, Keep&& keep) {
  const auto subsets = all_subsets(n);
  std::vector<Family> out;
  const std::uint64_t count = std::uint64_t{1} << subsets.size();
  for (std::uint64_t m = 0; m < count; ++m) {
    Family f;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if ((m >> i) & 1U) f.insert(subsets[i]);
    }
    if (keep(f)) out.push_back(f);
  }
  return out;
}

inline std::vector<Family> topologies(int n) {
  return all_families(n, [n](const Family& f) { return is_topology(f, n); });
}

inline std::vector<Family> ideals(int n) {
  return all_families(n, [n](const Family& f) { return is_ideal(f, n); });
}

struct Space {
  int n = 0;
  Family opens;
  Family ideal;
  std::vector<Set> aura;

  explicit Space(const auraspace::IdealAuraSpace& s)
      : n(s.size()), opens(to_family(s.topology().opens())), ideal(to_family(s.ideal().members())) {
    for (int x = 0; x < n; ++x) aura.push_back(to_set(s.aura(x)));
  }

  Set X() const { return whole(n); }
  bool negligible(const Set& s) const { return ideal.count(s) > 0; }

  Set local_star(const Set& a) const {
    Set r;
    for (int x = 0; x < n; ++x) {
      bool all = true;
      for (const auto& u : opens) {
        if (u.count(x) && negligible(meet(u, a))) all = false;
      }
      if (all) r.insert(x);
    }
    return r;
  }
  Set aura_local(const Set& a) const {
    Set r;
    for (int x = 0; x < n; ++x) {
      if (!negligible(meet(aura[x], a))) r.insert(x);
    }
    return r;
  }
  Set cl(const Set& a) const {
    Set r = X();
    for (const auto& u : opens) {
      const Set f = minus(X(), u);
      if (within(a, f)) r = meet(r, f);
    }
    return r;
  }
  Set interior(const Set& a) const {
    Set r;
    for (const auto& u : opens) {
      if (within(u, a)) r = unite(r, u);
    }
    return r;
  }
  Set star_closure(const Set& a) const { return unite(a, local_star(a)); }
  Set clsa(const Set& a) const { return unite(a, aura_local(a)); }
  Set clsa_inf(const Set& a, int* steps = nullptr) const {
    Set cur = a;
    int k = 0;
    for (;;) {
      Set next = clsa(cur);
      if (next == cur) break;
      cur = next;
      ++k;
    }
    if (steps) *steps = k;
    return cur;
  }
  Set psi_aura(const Set& a) const {
    Set r;
    for (int x = 0; x < n; ++x) {
      if (negligible(minus(aura[x], a))) r.insert(x);
    }
    return r;
  }
  Set psi(const Set& a) const { return minus(X(), local_star(minus(X(), a))); }
  Set intsa(const Set& a) const {
    Set r;
    for (int x : a) {
      if (negligible(minus(aura[x], a))) r.insert(x);
    }
    return r;
  }
  Set cl_aura(const Set& a) const {
    Set r;
    for (int x = 0; x < n; ++x) {
      if (!meet(aura[x], a).empty()) r.insert(x);
    }
    return r;
  }
  Set int_aura(const Set& a) const {
    Set r;
    for (int x : a) {
      if (within(aura[x], a)) r.insert(x);
    }
    return r;
  }
  bool transitive() const {
    for (int x = 0; x < n; ++x) {
      for (int y : aura[x]) {
        if (!within(aura[y], aura[x])) return false;
      }
    }
    return true;
  }

  template <class Pred>
  Family collect(Pred&& p) const {
    Family f;
    for (const auto& a : all_subsets(n)) {
      if (p(a)) f.insert(a);
    }
    return f;
  }
  Family tau_aura() const {
    return collect([&](const Set& a) {
      for (int x : a) {
        if (!within(aura[x], a)) return false;
      }
      return true;
    });
  }
  Family tau_star() const {
    return collect([&](const Set& a) { return star_closure(minus(X(), a)) == minus(X(), a); });
  }
  Family tausa() const {
    return collect([&](const Set& a) { return clsa_inf(minus(X(), a)) == minus(X(), a); });
  }
  Family tausa_c() const {
    return collect([&](const Set& a) { return clsa(minus(X(), a)) == minus(X(), a); });
  }
  Family basis() const {
    Family b;
    for (int x = 0; x < n; ++x) {
      for (const auto& j : ideal) b.insert(minus(aura[x], j));
    }
    return b;
  }

  bool ia_open(const Set& a) const { return within(a, intsa(a)); }
  bool semi(const Set& a) const { return within(a, clsa(intsa(a))); }
  bool pre(const Set& a) const { return within(a, intsa(clsa(a))); }
  bool alpha(const Set& a) const { return within(a, intsa(clsa(intsa(a)))); }
  bool beta(const Set& a) const { return within(a, clsa(intsa(clsa(a)))); }
  bool b_set(const Set& a) const {
    const Family u_side = tausa_c();
    for (const auto& v : all_subsets(n)) {
      if (clsa(intsa(v)) != v) continue;
      for (const auto& u : u_side) {
        if (meet(u, v) == a) return true;
      }
    }
    return false;
  }
};

inline Set preimage(const std::vector<int>& table, const Set& v) {
  Set r;
  for (int x = 0; x < static_cast<int>(table.size()); ++x) {
    if (v.count(table[static_cast<std::size_t>(x)])) r.insert(x);
  }
  return r;
}

template <class SourcePred>
bool continuous(const std::vector<int>& table, const Family& target, SourcePred&& source_ok) {
  for (const auto& v : target) {
    if (!source_ok(preimage(table, v))) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // AURASPACE_TESTS_ORACLE_HPP_
