#pragma once

#include <cstdint>
#include <ranges>

#include "wqo/measures.hpp"

namespace wqo {

/// v << w: v is obtained from w by deleting symbols. Single greedy
/// left-to-right scan, O(|v| + |w|).
template <std::ranges::forward_range V, std::ranges::forward_range W>
bool is_subsequence(const V &v, const W &w) {
  auto vi = std::ranges::begin(v);
  const auto ve = std::ranges::end(v);
  for (auto wi = std::ranges::begin(w), we = std::ranges::end(w); vi != ve && wi != we; ++wi) {
    if (*vi == *wi)
      ++vi;
  }
  return vi == ve;
}

/// Pointwise b1[c] <= b2[c].
bool multiset_subset(const ConstructorBag &b1, const ConstructorBag &b2);

/// b1 = b2, or set(b1) = set(b2) and |b1| < |b2|.
bool multiset_leq(const ConstructorBag &b1, const ConstructorBag &b2);

// Base orders on trees. Each computes the measures it needs; the Profile
// overloads reuse precomputed ones and require the matching Measure bits.

bool rel_S(const Tree &s, const Tree &t);
bool rel_H(const Tree &s, const Tree &t);
bool rel_Z(const Tree &s, const Tree &t);
bool rel_Y(const Tree &s, const Tree &t, std::uint32_t k = 2);
bool rel_B(const Tree &s, const Tree &t);
bool rel_M(const Tree &s, const Tree &t);
bool rel_P(const Tree &s, const Tree &t);
bool rel_E(const Tree &s, const Tree &t);

bool rel_S(const Profile &s, const Profile &t);
bool rel_H(const Profile &s, const Profile &t); // needs Preorder
bool rel_Z(const Profile &s, const Profile &t); // needs Set
bool rel_Y(const Profile &s, const Profile &t); // needs Repeated, same k
bool rel_B(const Profile &s, const Profile &t); // needs Bag
bool rel_M(const Profile &s, const Profile &t); // needs Set
bool rel_P(const Profile &s, const Profile &t); // needs Preorder
bool rel_E(const Profile &s, const Profile &t); // needs Euler

} // namespace wqo
