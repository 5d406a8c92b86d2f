#include "wqo/orders.hpp"

#include "wqo/error.hpp"

namespace wqo {

bool multiset_subset(const ConstructorBag &b1, const ConstructorBag &b2) {
  const auto &x = b1.counts();
  const auto &y = b2.counts();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i])
      return false;
  }
  return true;
}

bool multiset_leq(const ConstructorBag &b1, const ConstructorBag &b2) {
  if (b1 == b2)
    return true;
  return b1.support() == b2.support() && b1.total() < b2.total();
}

namespace {

void check_same_signature(const Tree &s, const Tree &t) {
  if (!same_signature(s.signature(), t.signature()))
    throw SignatureMismatch("trees are built over different signatures");
}

/// Memoized embedding over two preorder-flattened trees. Node i of s is
/// s.preorder[i], its subtree spans [i, i + s.subtree_sizes[i]), and its
/// children follow one another inside that span.
class Embedding {
public:
  Embedding(const Profile &s, const Profile &t)
      : s_(s), t_(t), cols_(t.preorder.size()), memo_(s.preorder.size() * t.preorder.size(), 0) {}

  bool embeds(std::uint32_t i, std::uint32_t j) {
    if (s_.subtree_sizes[i] > t_.subtree_sizes[j])
      return false;
    std::uint8_t &slot = memo_[static_cast<std::size_t>(i) * cols_ + j];
    if (slot)
      return slot == 2;
    bool result = couples(i, j) || dives(i, j);
    slot = result ? 2 : 1;
    return result;
  }

private:
  bool couples(std::uint32_t i, std::uint32_t j) {
    if (s_.preorder[i].ctor != t_.preorder[j].ctor)
      return false;
    std::uint32_t si = i + 1, tj = j + 1;
    const std::uint32_t s_end = i + s_.subtree_sizes[i];
    while (si < s_end) {
      if (!embeds(si, tj))
        return false;
      si += s_.subtree_sizes[si];
      tj += t_.subtree_sizes[tj];
    }
    return true;
  }

  bool dives(std::uint32_t i, std::uint32_t j) {
    const std::uint32_t t_end = j + t_.subtree_sizes[j];
    for (std::uint32_t tj = j + 1; tj < t_end; tj += t_.subtree_sizes[tj]) {
      if (embeds(i, tj))
        return true;
    }
    return false;
  }

  const Profile &s_;
  const Profile &t_;
  std::size_t cols_;
  std::vector<std::uint8_t> memo_; // 0 unknown, 1 false, 2 true
};

constexpr MeasureMask mask_of(Measure m) {
  MeasureMask mask;
  mask |= m;
  return mask;
}

} // namespace

bool rel_S(const Profile &s, const Profile &t) {
  return s.size() < t.size() || (s.size() == t.size() && tree_equal(s.tree, t.tree));
}

bool rel_H(const Profile &s, const Profile &t) {
  if (s.size() > t.size())
    return false;
  return Embedding(s, t).embeds(0, 0);
}

bool rel_Z(const Profile &s, const Profile &t) { return s.set == t.set; }

bool rel_Y(const Profile &s, const Profile &t) {
  if (s.repeat_threshold != t.repeat_threshold)
    throw Error("profiles built with different repeat thresholds");
  return s.repeated == t.repeated;
}

bool rel_B(const Profile &s, const Profile &t) {
  return s.size() <= t.size() && multiset_subset(s.bag, t.bag);
}

bool rel_M(const Profile &s, const Profile &t) {
  // Equality branch is tree equality so that M coincides with Z and S.
  if (s.set != t.set)
    return false;
  return s.size() < t.size() || (s.size() == t.size() && tree_equal(s.tree, t.tree));
}

bool rel_P(const Profile &s, const Profile &t) {
  return s.size() <= t.size() && is_subsequence(s.preorder, t.preorder);
}

bool rel_E(const Profile &s, const Profile &t) {
  return s.euler.size() <= t.euler.size() && is_subsequence(s.euler, t.euler);
}

bool rel_S(const Tree &s, const Tree &t) {
  check_same_signature(s, t);
  return s.size() < t.size() || (s.size() == t.size() && tree_equal(s, t));
}

bool rel_H(const Tree &s, const Tree &t) {
  check_same_signature(s, t);
  if (s.size() > t.size())
    return false;
  auto mask = mask_of(Measure::Preorder);
  return rel_H(make_profile(s, mask), make_profile(t, mask));
}

bool rel_Z(const Tree &s, const Tree &t) {
  check_same_signature(s, t);
  return constructor_set(s) == constructor_set(t);
}

bool rel_Y(const Tree &s, const Tree &t, std::uint32_t k) {
  check_same_signature(s, t);
  return repeated_set(s, k) == repeated_set(t, k);
}

bool rel_B(const Tree &s, const Tree &t) {
  check_same_signature(s, t);
  return multiset_subset(constructor_bag(s), constructor_bag(t));
}

bool rel_M(const Tree &s, const Tree &t) {
  check_same_signature(s, t);
  return rel_M(make_profile(s, mask_of(Measure::Set)), make_profile(t, mask_of(Measure::Set)));
}

bool rel_P(const Tree &s, const Tree &t) {
  check_same_signature(s, t);
  return is_subsequence(pre_traversal(s), pre_traversal(t));
}

bool rel_E(const Tree &s, const Tree &t) {
  check_same_signature(s, t);
  return is_subsequence(euler_traversal(s), euler_traversal(t));
}

} // namespace wqo
