#include "wqo/measures.hpp"

#include <bit>

#include "wqo/error.hpp"

namespace wqo {

std::size_t ConstructorSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_)
    n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ConstructorSet::is_subset_of(const ConstructorSet &other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i])
      return false;
  }
  return true;
}

std::uint64_t ConstructorSet::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint64_t w : words_)
    h = (h ^ w) * 0x100000001b3ull;
  return h;
}

std::uint64_t ConstructorBag::total() const {
  std::uint64_t n = 0;
  for (auto c : counts_)
    n += c;
  return n;
}

ConstructorSet ConstructorBag::support() const {
  ConstructorSet s(counts_.size());
  for (std::uint32_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i])
      s.insert(ConstructorId{i});
  }
  return s;
}

namespace {

void count_nodes(const detail::Node &n, ConstructorBag &bag) {
  ++bag[n.ctor];
  for (const auto &c : n.children)
    count_nodes(*c, bag);
}

void preorder(const detail::Node &n, TraversalString &out, std::vector<std::uint32_t> *sizes) {
  out.push_back({n.ctor, 0});
  if (sizes)
    sizes->push_back(n.size);
  for (const auto &c : n.children)
    preorder(*c, out, sizes);
}

void euler(const detail::Node &n, TraversalString &out) {
  out.push_back({n.ctor, 0});
  for (std::uint32_t i = 0; i < n.children.size(); ++i) {
    euler(*n.children[i], out);
    out.push_back({n.ctor, i + 1});
  }
}

ConstructorSet at_least(const ConstructorBag &bag, std::uint32_t k) {
  ConstructorSet s(bag.width());
  for (std::uint32_t i = 0; i < bag.width(); ++i) {
    if (bag[ConstructorId{i}] >= k)
      s.insert(ConstructorId{i});
  }
  return s;
}

} // namespace

ConstructorBag constructor_bag(const Tree &t) {
  ConstructorBag bag(t.signature().size());
  count_nodes(t.node(), bag);
  return bag;
}

ConstructorSet constructor_set(const Tree &t) { return constructor_bag(t).support(); }

ConstructorSet repeated_set(const Tree &t, std::uint32_t k) {
  if (k < 2)
    throw Error("repeat threshold must be at least 2, got " + std::to_string(k));
  return at_least(constructor_bag(t), k);
}

TraversalString pre_traversal(const Tree &t) {
  TraversalString out;
  out.reserve(t.size());
  preorder(t.node(), out, nullptr);
  return out;
}

TraversalString euler_traversal(const Tree &t) {
  TraversalString out;
  out.reserve(2 * t.size());
  euler(t.node(), out);
  return out;
}

Profile make_profile(const Tree &t, MeasureMask mask, std::uint32_t k) {
  if (k < 2)
    throw Error("repeat threshold must be at least 2, got " + std::to_string(k));
  Profile p{t, k, {}, {}, {}, {}, {}, {}};
  if (mask.has(Measure::Set) || mask.has(Measure::Repeated) || mask.has(Measure::Bag)) {
    ConstructorBag bag(t.signature().size());
    count_nodes(t.node(), bag);
    if (mask.has(Measure::Set))
      p.set = bag.support();
    if (mask.has(Measure::Repeated))
      p.repeated = at_least(bag, k);
    if (mask.has(Measure::Bag))
      p.bag = std::move(bag);
  }
  if (mask.has(Measure::Preorder)) {
    p.preorder.reserve(t.size());
    p.subtree_sizes.reserve(t.size());
    preorder(t.node(), p.preorder, &p.subtree_sizes);
  }
  if (mask.has(Measure::Euler)) {
    p.euler.reserve(2 * t.size());
    euler(t.node(), p.euler);
  }
  return p;
}

} // namespace wqo
