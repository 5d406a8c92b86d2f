#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wqo/error.hpp"
#include "wqo/orders.hpp"
#include "wqo/whistle.hpp"

namespace wqo {
namespace {

using testing::T;

TEST(Whistle, SizeExamples) {
  SequenceChecker w(parse_wqo_name("S"));
  EXPECT_FALSE(w.push(T("a")).whistled());
  auto out = w.push(T("b(a)"));
  ASSERT_TRUE(out.whistled());
  EXPECT_EQ(out.position, 1u);
  EXPECT_EQ(out.witness, 0u);
  EXPECT_EQ(w.size(), 1u);

  SequenceChecker v(parse_wqo_name("S"));
  EXPECT_FALSE(v.push(T("b(a)")).whistled());
  EXPECT_FALSE(v.push(T("a")).whistled());
  out = v.push(T("a"));
  EXPECT_TRUE(out.whistled());
  EXPECT_EQ(out.position, 2u);
  EXPECT_EQ(out.witness, 1u);
}

TEST(Whistle, EmbeddingExample) {
  SequenceChecker w(parse_wqo_name("H"));
  EXPECT_FALSE(w.push(T("b(a)")).whistled());
  EXPECT_FALSE(w.push(T("c(a,a)")).whistled());
  auto out = w.push(T("c(b(a),a)"));
  EXPECT_TRUE(out.whistled());
  EXPECT_EQ(out.witness, 0u);
}

TEST(Whistle, WhistledTreeIsNotAdmitted) {
  SequenceChecker w(parse_wqo_name("S"));
  w.push(T("b(a)"));
  EXPECT_TRUE(w.push(T("b(b(a))")).whistled());
  EXPECT_EQ(w.size(), 1u);
  auto out = w.push(T("a"));
  EXPECT_FALSE(out.whistled());
  EXPECT_EQ(out.position, 1u);
}

TEST(Whistle, StrategySelection) {
  auto s = select_strategy(parse_wqo_name("S"));
  EXPECT_FALSE(s.by_set);
  EXPECT_EQ(s.scan, Strategy::Scan::SizeShortcut);

  auto m = select_strategy(parse_wqo_name("M"));
  EXPECT_TRUE(m.by_set);
  EXPECT_EQ(m.scan, Strategy::Scan::SizeShortcut);

  auto h = select_strategy(parse_wqo_name("H"));
  EXPECT_FALSE(h.by_set);
  EXPECT_EQ(h.scan, Strategy::Scan::Full);

  auto z = select_strategy(parse_wqo_name("YZ"));
  EXPECT_TRUE(z.by_set);
  EXPECT_TRUE(z.by_repeated);
  EXPECT_EQ(z.scan, Strategy::Scan::PartitionHit);

  auto zh = select_strategy(parse_wqo_name("ZH"));
  EXPECT_TRUE(zh.by_set);
  EXPECT_EQ(zh.residual, components_of({WqoId::H}));
}

TEST(Whistle, PartitionsBySet) {
  SequenceChecker w(parse_wqo_name("M"));
  w.push(T("c(b(a),b(a))"));
  w.push(T("b(a)"));
  w.push(T("c(a,a)"));
  w.push(T("a"));
  EXPECT_EQ(w.partition_count(), 4u);
  EXPECT_EQ(w.partition_of(T("c(b(b(a)),a)")), (std::vector<std::size_t>{0}));
  EXPECT_EQ(w.partition_of(T("d(a,a,a)")), std::vector<std::size_t>{});
  // Same set, smaller: admitted. Same set, equal but different tree: admitted.
  EXPECT_FALSE(w.push(T("c(b(a),a)")).whistled());
  EXPECT_FALSE(w.push(T("c(a,b(a))")).whistled());
  auto out = w.push(T("c(a,b(a))"));
  EXPECT_TRUE(out.whistled());
  EXPECT_EQ(out.witness, 5u);
}

TEST(Whistle, SignatureMismatchAndReset) {
  SequenceChecker w(parse_wqo_name("H"));
  NaiveChecker n(parse_wqo_name("H"));
  w.push(T("a"));
  n.push(T("a"));
  auto other = parse_signature("a 0\nb 1\n");
  EXPECT_THROW(w.push(parse_tree("b(a)", other)), SignatureMismatch);
  EXPECT_THROW(n.push(parse_tree("b(a)", other)), SignatureMismatch);
  w.reset();
  n.reset();
  EXPECT_EQ(w.size(), 0u);
  EXPECT_FALSE(w.push(parse_tree("b(a)", other)).whistled());
  EXPECT_FALSE(n.push(parse_tree("b(a)", other)).whistled());
}

// Random streams mixing fresh trees with repeats and near relatives so that
// every spec sees both admissions and whistles.
std::vector<Tree> mixed_stream(std::uint64_t seed, std::size_t length) {
  Rng rng(seed);
  auto pool = testing::random_trees(length, seed * 7 + 1, 30);
  std::vector<Tree> out;
  for (std::size_t i = 0; i < length; ++i) {
    if (!out.empty() && rng.below(5) == 0)
      out.push_back(out[rng.below(out.size())]);
    else
      out.push_back(pool[i]);
  }
  return out;
}

TEST(Whistle, AgreesWithNaiveChecker) {
  for (const auto &spec : named_wqos()) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      SequenceChecker fast(spec);
      NaiveChecker slow(spec);
      auto stream = mixed_stream(seed, 120);
      for (std::size_t i = 0; i < stream.size(); ++i) {
        auto a = fast.push(stream[i]);
        auto b = slow.push(stream[i]);
        ASSERT_EQ(a.whistled(), b.whistled()) << spec.name() << " seed " << seed << " at " << i;
        ASSERT_EQ(a.position, b.position);
        if (a.whistled()) {
          ASSERT_TRUE(a.witness.has_value());
          ASSERT_TRUE(rel(spec, fast[*a.witness].tree, stream[i])) << spec.name();
        }
      }
      ASSERT_EQ(fast.size(), slow.size());
    }
  }
}

TEST(Whistle, SizeShortcutFindsEqualTrees) {
  // Equal trees from separate parses must be caught by hash plus equality.
  for (const char *name : {"S", "M", "YS", "YM"}) {
    SequenceChecker w(parse_wqo_name(name));
    EXPECT_FALSE(w.push(T("c(b(a),d(a,a,a))")).whistled());
    EXPECT_FALSE(w.push(T("c(a,d(a,a,b(a)))")).whistled()) << name;
    EXPECT_TRUE(w.push(T("c(b(a),d(a,a,a))")).whistled()) << name;
  }
}

TEST(Whistle, DoublingStreamWhistlesQuickly) {
  auto sig = default_signature();
  auto seed = parse_tree("b(a)", sig);
  auto stream = doubling_stream(seed, *sig->find("c"), 10);
  for (const auto &spec : named_wqos()) {
    SequenceChecker w(spec);
    bool fired = false;
    for (const Tree &t : stream) {
      if (w.push(t).whistled()) {
        fired = true;
        break;
      }
    }
    EXPECT_TRUE(fired) << spec.name();
  }
}

TEST(Whistle, AntichainReplay) {
  // Trees of strictly decreasing size admit for S; replaying any of them
  // whistles, and the last (smallest) admitted tree is already a witness.
  SequenceChecker w(parse_wqo_name("S"));
  std::vector<Tree> seq = {T("c(c(a,a),c(a,a))"), T("c(c(a,a),b(a))"), T("c(b(a),a)"), T("b(a)"), T("a")};
  for (const Tree &t : seq)
    ASSERT_FALSE(w.push(t).whistled());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto out = w.push(seq[i]);
    ASSERT_TRUE(out.whistled());
    EXPECT_TRUE(rel_S(w[*out.witness].tree, seq[i]));
    EXPECT_EQ(out.witness, seq.size() - 1);
  }
}

} // namespace
} // namespace wqo
