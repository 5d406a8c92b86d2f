#include "wqo/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "wqo/error.hpp"

namespace wqo {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::optional<std::string> validate(const GeneratorConfig &cfg) {
  if (!cfg.sig)
    throw Error("generator needs a signature");
  if (!cfg.sig->has_probabilities())
    throw Error("generator needs constructor probabilities in the signature");
  bool leaf = false;
  for (const auto &c : cfg.sig->constructors())
    leaf = leaf || (c.arity == 0 && *c.probability > 0);
  if (!leaf)
    throw Error("generator needs a nullary constructor with positive probability");
  double m = cfg.sig->expected_branching();
  if (m >= 1.0) {
    return "expected branching factor " + std::to_string(m) +
           " is not below 1; most draws will exceed the size cap";
  }
  return std::nullopt;
}

double analytic_mean_size(const Signature &sig) {
  double m = sig.expected_branching();
  if (m >= 1.0)
    return std::numeric_limits<double>::infinity();
  return 1.0 / (1.0 - m);
}

namespace {

ConstructorId pick(const Signature &sig, Rng &rng) {
  double u = rng.uniform();
  double acc = 0;
  std::uint32_t last = 0;
  for (std::uint32_t i = 0; i < sig.size(); ++i) {
    double p = *sig[ConstructorId{i}].probability;
    if (p <= 0)
      continue;
    acc += p;
    last = i;
    if (u < acc)
      return ConstructorId{i};
  }
  return ConstructorId{last};
}

class CappedDraw {
public:
  CappedDraw(const GeneratorConfig &cfg, Rng &rng) : cfg_(cfg), rng_(rng) {}

  std::optional<Tree> draw() {
    if (++nodes_ > cfg_.size_cap)
      return std::nullopt;
    ConstructorId c = pick(*cfg_.sig, rng_);
    std::vector<Tree> children;
    children.reserve(cfg_.sig->arity(c));
    for (std::uint32_t i = 0; i < cfg_.sig->arity(c); ++i) {
      auto child = draw();
      if (!child)
        return std::nullopt;
      children.push_back(std::move(*child));
    }
    return Tree::make(cfg_.sig, c, children);
  }

private:
  const GeneratorConfig &cfg_;
  Rng &rng_;
  std::uint32_t nodes_ = 0;
};

std::optional<Tree> draw_once(const GeneratorConfig &cfg, Rng &rng) { return CappedDraw(cfg, rng).draw(); }

} // namespace

Tree random_tree(const GeneratorConfig &cfg, Rng &rng) {
  validate(cfg);
  for (std::uint64_t attempt = 0; attempt <= cfg.max_draws; ++attempt) {
    if (auto t = draw_once(cfg, rng))
      return *t;
  }
  throw GenerationError("no tree within size cap " + std::to_string(cfg.size_cap) + " after " +
                        std::to_string(cfg.max_draws) + " draws");
}

std::vector<Tree> generate_corpus(const GeneratorConfig &cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  std::vector<Tree> corpus;
  corpus.reserve(cfg.corpus_size);
  std::unordered_set<Tree> seen;
  std::uint64_t rejected = 0;
  while (corpus.size() < cfg.corpus_size) {
    auto t = draw_once(cfg, rng);
    if (t && (!cfg.distinct || seen.insert(*t).second)) {
      corpus.push_back(std::move(*t));
      continue;
    }
    if (++rejected > cfg.max_draws) {
      throw GenerationError("corpus generation gave up after " + std::to_string(cfg.max_draws) +
                            " rejected draws with " + std::to_string(corpus.size()) + " of " +
                            std::to_string(cfg.corpus_size) + " trees");
    }
  }
  return corpus;
}

namespace {

Tree sized(const SignaturePtr &sig, std::uint32_t n, Rng &rng, const std::vector<ConstructorId> &leaves,
           const std::vector<ConstructorId> &inner) {
  if (n == 1)
    return Tree::make(sig, leaves[rng.below(leaves.size())]);

  std::vector<ConstructorId> fits;
  for (ConstructorId c : inner) {
    if (sig->arity(c) <= n - 1)
      fits.push_back(c);
  }
  if (fits.empty())
    throw GenerationError("no constructor fits a tree of size " + std::to_string(n));
  ConstructorId c = fits[rng.below(fits.size())];
  const std::uint32_t k = sig->arity(c);

  // Random composition of n - 1 into k positive parts: k - 1 distinct cuts
  // out of 1 .. n - 2.
  std::vector<std::uint32_t> cuts(n - 2);
  std::iota(cuts.begin(), cuts.end(), 1u);
  for (std::uint32_t i = 0; i + 1 < k; ++i)
    std::swap(cuts[i], cuts[i + rng.below(cuts.size() - i)]);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());

  std::vector<Tree> children;
  std::uint32_t prev = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t next = i + 1 < k ? cuts[i] : n - 1;
    children.push_back(sized(sig, next - prev, rng, leaves, inner));
    prev = next;
  }
  return Tree::make(sig, c, children);
}

} // namespace

Tree random_tree_of_size(const SignaturePtr &sig, std::uint32_t size, Rng &rng) {
  if (size == 0)
    throw GenerationError("tree size must be positive");
  std::vector<ConstructorId> leaves, inner;
  for (std::uint32_t i = 0; i < sig->size(); ++i)
    (sig->arity(ConstructorId{i}) == 0 ? leaves : inner).push_back(ConstructorId{i});
  if (leaves.empty())
    throw GenerationError("signature has no nullary constructor");
  return sized(sig, size, rng, leaves, inner);
}

std::vector<Tree> doubling_stream(const Tree &seed, ConstructorId c, std::size_t length) {
  const SignaturePtr &sig = seed.signature_ptr();
  if (sig->arity(c) == 0)
    throw Error("doubling needs a constructor of positive arity");
  std::vector<Tree> stream;
  stream.reserve(length);
  Tree t = seed;
  for (std::size_t i = 0; i < length; ++i) {
    stream.push_back(t);
    std::vector<Tree> copies(sig->arity(c), t);
    t = Tree::make(sig, c, copies);
  }
  return stream;
}

} // namespace wqo
