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

#ifndef AURASPACE_POINT_SET_HPP_
#define AURASPACE_POINT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace auraspace {

/// Largest universe any space may have; every subset fits one 32-bit word.
inline constexpr int kMaxPoints = 24;

/// Base class of every error raised for malformed input.
class SpaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subset of a universe, stored as a bitmask over point indices.
///
/// Order is numeric on the mask, which is the canonical order used for every
/// serialized family.
class PointSet {
 public:
  using Bits = std::uint32_t;

  constexpr PointSet() = default;
  constexpr explicit PointSet(Bits bits) : bits_(bits) {}

  static constexpr PointSet singleton(int index) { return PointSet(Bits{1} << index); }
  static constexpr PointSet full(int n) {
    return PointSet(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }
  static PointSet of(std::initializer_list<int> indices) {
    PointSet s;
    for (int i : indices) s = s | singleton(i);
    return s;
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int index) const { return (bits_ >> index) & 1U; }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  /// Lowest point index in the set; the set must be non-empty.
  constexpr int first() const { return std::countr_zero(bits_); }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet a, PointSet b) { return a.bits_ <=> b.bits_; }

  /// Forward iteration over member indices in increasing order.
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    Bits rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  Bits bits_ = 0;
};

inline constexpr PointSet complement(PointSet a, int n) { return PointSet::full(n) - a; }

/// Invokes fn(PointSet) for every subset of `mask`, in increasing numeric order.
template <class Fn>
void for_each_subset(PointSet mask, Fn&& fn) {
  const PointSet::Bits m = mask.bits();
  PointSet::Bits sub = 0;
  while (true) {
    fn(PointSet(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

/// The ground set: a count of points and one distinct label per point.
///
/// Labels are presentation only; copies share the label storage.
class Universe {
 public:
  Universe() : Universe(std::vector<std::string>{}) {}
  explicit Universe(std::vector<std::string> names);

  /// Points labelled a, b, c, ...
  static Universe letters(int n);

  int size() const { return static_cast<int>(names_->size()); }
  PointSet full() const { return PointSet::full(size()); }
  const std::string& name(int index) const { return (*names_)[static_cast<std::size_t>(index)]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<int> index_of(std::string_view name) const;
  bool contains(PointSet s) const { return s.subset_of(full()); }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// A deduplicated collection of subsets kept in canonical (numeric) order.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::initializer_list<PointSet> members) : SetFamily(std::vector<PointSet>(members)) {}
  explicit SetFamily(std::vector<PointSet> members);

  const std::vector<PointSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(PointSet s) const;
  bool subset_of(const SetFamily& other) const;
  PointSet union_all() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Bit i of the result is set iff the subset with mask i is a member.
  /// Only meaningful for universes of at most six points.
  std::uint64_t encode() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<PointSet> members_;
};

/// Every subset of an n-point universe.
SetFamily power_set(int n);

/// `{a,c}` style rendering in point index order; the empty set is `{}`.
std::string format_set(const Universe& u, PointSet s);
/// `{{},{a},{a,b}}` style rendering in canonical member order.
std::string format_family(const Universe& u, const SetFamily& f);

/// Parses `{a,c}`, `{ a , c }` or `{}`. Throws SpaceError on unknown points or bad syntax.
PointSet parse_set(const Universe& u, std::string_view text);

}  // namespace auraspace

#endif  // AURASPACE_POINT_SET_HPP_
