#pragma once

#include <cstdint>
#include <vector>

#include "wqo/tree.hpp"

namespace wqo {

/// A subset of a signature's constructors, one bit per constructor.
class ConstructorSet {
public:
  ConstructorSet() = default;
  explicit ConstructorSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }
  bool contains(ConstructorId c) const { return (words_[c.value / 64] >> (c.value % 64)) & 1u; }
  void insert(ConstructorId c) { words_[c.value / 64] |= std::uint64_t{1} << (c.value % 64); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_subset_of(const ConstructorSet &other) const;

  const std::vector<std::uint64_t> &words() const { return words_; }
  std::uint64_t hash() const;

  friend bool operator==(const ConstructorSet &, const ConstructorSet &) = default;

private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Occurrence count per constructor.
class ConstructorBag {
public:
  ConstructorBag() = default;
  explicit ConstructorBag(std::size_t width) : counts_(width, 0) {}

  std::size_t width() const { return counts_.size(); }
  std::uint32_t operator[](ConstructorId c) const { return counts_[c.value]; }
  std::uint32_t &operator[](ConstructorId c) { return counts_[c.value]; }
  const std::vector<std::uint32_t> &counts() const { return counts_; }

  /// Total number of elements, |b|.
  std::uint64_t total() const;
  /// Underlying set, set(b).
  ConstructorSet support() const;

  friend bool operator==(const ConstructorBag &, const ConstructorBag &) = default;

private:
  std::vector<std::uint32_t> counts_;
};

/// c_i in an Euler tour: constructor c after i of its children were visited.
/// Preorder strings use visit 0 throughout; a leaf is always (c, 0).
struct TraversalSymbol {
  ConstructorId ctor;
  std::uint32_t visit = 0;

  friend bool operator==(TraversalSymbol, TraversalSymbol) = default;
};

using TraversalString = std::vector<TraversalSymbol>;

ConstructorSet constructor_set(const Tree &t);
/// Constructors occurring at least k times; k must be at least 2.
ConstructorSet repeated_set(const Tree &t, std::uint32_t k);
ConstructorBag constructor_bag(const Tree &t);
TraversalString pre_traversal(const Tree &t);
TraversalString euler_traversal(const Tree &t);

/// Which measures a Profile carries. Size and hash are always available.
enum class Measure : std::uint8_t {
  Set = 1 << 0,
  Repeated = 1 << 1,
  Bag = 1 << 2,
  Preorder = 1 << 3,
  Euler = 1 << 4,
};

struct MeasureMask {
  std::uint8_t bits = 0;

  constexpr bool has(Measure m) const { return bits & static_cast<std::uint8_t>(m); }
  constexpr MeasureMask &operator|=(Measure m) {
    bits |= static_cast<std::uint8_t>(m);
    return *this;
  }
  static constexpr MeasureMask all() { return MeasureMask{0x1f}; }
};

/// A tree together with the measures precomputed for it in a single walk.
/// Preorder profiles also record the size of every subtree, indexed by
/// preorder position, which is what the embedding check walks over.
struct Profile {
  Tree tree;
  std::uint32_t repeat_threshold = 2;
  ConstructorSet set;
  ConstructorSet repeated;
  ConstructorBag bag;
  TraversalString preorder;
  std::vector<std::uint32_t> subtree_sizes;
  TraversalString euler;

  std::uint32_t size() const { return tree.size(); }
  std::uint64_t hash() const { return tree.hash(); }
};

Profile make_profile(const Tree &t, MeasureMask mask = MeasureMask::all(), std::uint32_t k = 2);

} // namespace wqo
