#include "wqo/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <unordered_set>

#include "wqo/error.hpp"
#include "wqo/generator.hpp"
#include "wqo/whistle.hpp"

namespace wqo {

namespace {

constexpr std::size_t kMaxBagsPerLevel = 20000;

/// All constructor bags that some tree of exactly `size` nodes has:
/// the arities of the inner nodes sum to size - 1.
class BagEnumerator {
public:
  BagEnumerator(const Signature &sig, std::uint32_t size) : sig_(sig), size_(size) {
    for (std::uint32_t i = 0; i < sig.size(); ++i)
      (sig.arity(ConstructorId{i}) ? inner_ : leaves_).push_back(ConstructorId{i});
  }

  std::vector<ConstructorBag> run() {
    ConstructorBag bag(sig_.size());
    inner(0, size_ - 1, bag);
    return std::move(out_);
  }

private:
  void inner(std::size_t k, std::uint32_t edges_left, ConstructorBag &bag) {
    if (out_.size() >= kMaxBagsPerLevel)
      return;
    if (k == inner_.size()) {
      if (edges_left != 0)
        return;
      std::uint64_t internal = bag.total();
      leaves(0, static_cast<std::uint32_t>(size_ - internal), bag);
      return;
    }
    ConstructorId c = inner_[k];
    const std::uint32_t arity = sig_.arity(c);
    for (std::uint32_t n = 0; n * arity <= edges_left; ++n) {
      bag[c] = n;
      inner(k + 1, edges_left - n * arity, bag);
    }
    bag[c] = 0;
  }

  void leaves(std::size_t k, std::uint32_t left, ConstructorBag &bag) {
    if (out_.size() >= kMaxBagsPerLevel)
      return;
    if (k + 1 == leaves_.size()) {
      bag[leaves_[k]] = left;
      out_.push_back(bag);
      bag[leaves_[k]] = 0;
      return;
    }
    for (std::uint32_t n = 0; n <= left; ++n) {
      bag[leaves_[k]] = n;
      leaves(k + 1, left - n, bag);
    }
    bag[leaves_[k]] = 0;
  }

  const Signature &sig_;
  std::uint32_t size_;
  std::vector<ConstructorId> inner_, leaves_;
  std::vector<ConstructorBag> out_;
};

/// A caterpillar with the given bag: inner nodes in random order, each
/// continuing the spine at a random child position, all other children leaves.
Tree arrange(const SignaturePtr &sig, const ConstructorBag &bag, Rng &rng) {
  std::vector<ConstructorId> inner, leaves;
  for (std::uint32_t i = 0; i < bag.width(); ++i) {
    ConstructorId c{i};
    auto &dst = sig->arity(c) ? inner : leaves;
    dst.insert(dst.end(), bag[c], c);
  }
  std::shuffle(inner.begin(), inner.end(), rng.engine());
  std::shuffle(leaves.begin(), leaves.end(), rng.engine());

  auto leaf = [&] {
    ConstructorId c = leaves.back();
    leaves.pop_back();
    return Tree::make(sig, c);
  };
  // Build bottom-up to keep recursion off the spine.
  Tree spine = leaf();
  for (std::size_t k = inner.size(); k-- > 0;) {
    const std::uint32_t arity = sig->arity(inner[k]);
    const auto pos = static_cast<std::uint32_t>(rng.below(arity));
    std::vector<Tree> children;
    children.reserve(arity);
    for (std::uint32_t j = 0; j < arity; ++j)
      children.push_back(j == pos ? spine : leaf());
    spine = Tree::make(sig, inner[k], children);
  }
  return spine;
}

std::vector<Tree> level_candidates(const WqoSpec &spec, const SignaturePtr &sig, std::uint32_t size,
                                   std::size_t want, Rng &rng) {
  std::vector<ConstructorBag> bags = BagEnumerator(*sig, size).run();
  std::shuffle(bags.begin(), bags.end(), rng.engine());
  SequenceChecker filter(spec);
  std::unordered_set<Tree> seen;
  std::vector<Tree> out;
  constexpr int kRounds = 8;
  for (int round = 0; round < kRounds && out.size() < want; ++round) {
    const std::size_t before = out.size();
    for (const auto &bag : bags) {
      if (out.size() >= want)
        break;
      Tree t = arrange(sig, bag, rng);
      if (!seen.insert(t).second)
        continue;
      if (!filter.push(t).whistled())
        out.push_back(std::move(t));
    }
    if (out.size() == before)
      break;
  }
  return out;
}

} // namespace

std::vector<Tree> admitted_stream(const WqoSpec &spec, const SignaturePtr &sig, std::size_t length,
                                  std::uint32_t target_size, std::uint64_t seed) {
  if (length == 0)
    return {};
  if (target_size == 0)
    throw Error("target tree size must be positive");
  bool has_leaf = false;
  for (const auto &c : sig->constructors())
    has_leaf = has_leaf || c.arity == 0;
  if (!has_leaf)
    throw Error("signature has no nullary constructor");

  const std::uint32_t hi = target_size + target_size / 2;
  const std::uint32_t lo = std::max<std::uint32_t>(1, target_size - target_size / 2);
  const std::size_t levels = hi - lo + 1;
  const std::size_t per_level = (length + levels - 1) / levels;

  Rng rng(seed);
  std::vector<std::vector<Tree>> by_level;
  for (std::uint32_t size = hi; size >= lo; --size)
    by_level.push_back(level_candidates(spec, sig, size, 2 * per_level + 1, rng));

  // Smallest per-level quota that still reaches the requested length.
  std::size_t available = 0;
  for (const auto &l : by_level)
    available += l.size();
  std::size_t quota = 0;
  if (available > length) {
    std::size_t lo_q = 1, hi_q = 2 * per_level + 1;
    while (lo_q < hi_q) {
      std::size_t mid = (lo_q + hi_q) / 2;
      std::size_t got = 0;
      for (const auto &l : by_level)
        got += std::min(l.size(), mid);
      if (got >= length)
        hi_q = mid;
      else
        lo_q = mid + 1;
    }
    quota = lo_q;
  } else {
    quota = 2 * per_level + 1;
  }

  SequenceChecker global(spec);
  std::vector<Tree> stream;
  stream.reserve(length);
  for (auto &l : by_level) {
    for (std::size_t i = 0; i < std::min(l.size(), quota) && stream.size() < length; ++i) {
      if (!global.push(l[i]).whistled())
        stream.push_back(std::move(l[i]));
    }
  }
  return stream;
}

double BenchReport::ratio(const std::string &checker) const {
  double t1 = 0, t2 = 0;
  std::size_t n1 = SIZE_MAX, n2 = 0;
  for (const auto &r : rows) {
    if (r.checker != checker)
      continue;
    if (r.n < n1) {
      n1 = r.n;
      t1 = r.seconds;
    }
    if (r.n > n2) {
      n2 = r.n;
      t2 = r.seconds;
    }
  }
  if (n2 == 0 || n1 == n2 || t1 <= 0)
    return 0;
  return t2 / t1;
}

namespace {

template <class Checker>
BenchRow time_pushes(const WqoSpec &spec, std::span<const Tree> stream, const char *label, int repeats) {
  BenchRow row{label, stream.size(), 0, 0};
  double best = -1;
  for (int r = 0; r < std::max(1, repeats); ++r) {
    Checker checker(spec);
    std::size_t whistles = 0;
    auto start = std::chrono::steady_clock::now();
    for (const Tree &t : stream)
      whistles += checker.push(t).whistled() ? 1 : 0;
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (best < 0 || elapsed.count() < best)
      best = elapsed.count();
    row.whistles = whistles;
  }
  row.seconds = best;
  return row;
}

} // namespace

BenchReport bench_whistle(const WqoSpec &spec, const SignaturePtr &sig, std::size_t n,
                          std::uint32_t target_size, std::uint64_t seed, int repeats) {
  BenchReport report;
  report.wqo = spec.name();
  if (n == 0)
    return report;
  std::vector<Tree> full = admitted_stream(spec, sig, 2 * n, target_size, seed);
  std::vector<Tree> half;
  for (std::size_t i = 0; i < full.size(); i += 2)
    half.push_back(full[i]);
  double total = 0;
  for (const Tree &t : full)
    total += t.size();
  report.mean_size = full.empty() ? 0 : total / static_cast<double>(full.size());

  for (const auto *stream : {&half, &full})
    report.rows.push_back(time_pushes<SequenceChecker>(spec, *stream, "optimized", repeats));
  for (const auto *stream : {&half, &full})
    report.rows.push_back(time_pushes<NaiveChecker>(spec, *stream, "naive", repeats));
  return report;
}

void write_bench_tsv(std::ostream &out, const BenchReport &report) {
  out << "# wqo=" << report.wqo << " mean_size=" << report.mean_size << '\n';
  out << "checker\tn\tseconds\twhistles\n";
  for (const auto &r : report.rows)
    out << r.checker << '\t' << r.n << '\t' << r.seconds << '\t' << r.whistles << '\n';
  if (report.rows.empty())
    return;
  for (const char *checker : {"optimized", "naive"})
    out << "# ratio " << checker << " time(2n)/time(n)=" << report.ratio(checker) << '\n';
}

} // namespace wqo
