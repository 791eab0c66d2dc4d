#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "irrenum/bits.hpp"

namespace irrenum {

// An immutable sorted set of vertex ids. The canonical text form is the ids
// in ascending order separated by single spaces; the canonical order on sets
// is lexicographic on those ascending sequences.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids) : v_(ids) { normalize(); }
  explicit VertexSet(std::vector<int> ids) : v_(std::move(ids)) { normalize(); }

  static VertexSet from_bits(const Bits& b) {
    VertexSet s;
    s.v_ = b.to_vector();
    return s;
  }

  Bits to_bits(int width) const {
    Bits b(width);
    for (int x : v_) b.set(x);
    return b;
  }

  int size() const { return int(v_.size()); }
  bool empty() const { return v_.empty(); }
  bool contains(int x) const { return std::binary_search(v_.begin(), v_.end(), x); }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<int>& ids() const { return v_; }
  int operator[](int i) const { return v_[i]; }

  VertexSet with(int x) const {
    VertexSet s = *this;
    auto it = std::lower_bound(s.v_.begin(), s.v_.end(), x);
    if (it == s.v_.end() || *it != x) s.v_.insert(it, x);
    return s;
  }
  VertexSet without(int x) const {
    VertexSet s = *this;
    auto it = std::lower_bound(s.v_.begin(), s.v_.end(), x);
    if (it != s.v_.end() && *it == x) s.v_.erase(it);
    return s;
  }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet s;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s.v_));
    return s;
  }
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet s;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s.v_));
    return s;
  }
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet s;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s.v_));
    return s;
  }
  bool subset_of(const VertexSet& o) const {
    return std::includes(o.begin(), o.end(), begin(), end());
  }
  bool intersects(const VertexSet& o) const {
    auto i = begin();
    auto j = o.begin();
    while (i != end() && j != o.end()) {
      if (*i == *j) return true;
      (*i < *j) ? ++i : ++j;
    }
    return false;
  }

  bool operator==(const VertexSet& o) const { return v_ == o.v_; }
  bool operator!=(const VertexSet& o) const { return v_ != o.v_; }
  // Canonical (lexicographic-on-ascending-ids) order.
  bool operator<(const VertexSet& o) const {
    return std::lexicographical_compare(begin(), end(), o.begin(), o.end());
  }

  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(v_[i]);
    }
    return s;
  }

 private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }
  std::vector<int> v_;
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const {
    size_t h = 1469598103934665603ull;
    for (int x : s) {
      h ^= uint64_t(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace irrenum
