#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wqo/tree.hpp"

namespace wqo {

/// Seedable source of uniform doubles in [0, 1).
///
/// State is a std::mt19937_64 seeded with the 64-bit seed; each draw takes
/// one 64-bit output x and returns (x >> 11) * 2^-53. Both steps are fully
/// specified, so a seed names the same stream on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  std::mt19937_64 &engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

struct GeneratorConfig {
  SignaturePtr sig;
  std::uint64_t seed = 1;
  std::size_t corpus_size = 400;
  std::uint32_t size_cap = 1000;
  bool distinct = true;
  std::uint64_t max_draws = 1'000'000;
};

/// Throws Error when the signature has no probabilities or no nullary
/// constructor. Returns a warning when the expected branching factor is not
/// below one (generation may then rarely terminate under the cap).
std::optional<std::string> validate(const GeneratorConfig &cfg);

/// 1 / (1 - sum p(c) * arity(c)): mean size of an uncapped random tree.
double analytic_mean_size(const Signature &sig);

/// Draws the root by the signature probabilities and every child
/// independently the same way. A draw whose size exceeds the cap is
/// discarded and redrawn; after cfg.max_draws discards, GenerationError.
Tree random_tree(const GeneratorConfig &cfg, Rng &rng);

/// cfg.corpus_size trees in draw order, pairwise distinct when cfg.distinct.
std::vector<Tree> generate_corpus(const GeneratorConfig &cfg);

/// Uniformly chosen constructors, shaped to have exactly `size` nodes.
/// Needs a nullary constructor and, for size > 1, a constructor of positive
/// arity not exceeding size - 1.
Tree random_tree_of_size(const SignaturePtr &sig, std::uint32_t size, Rng &rng);

/// t, c(t,...,t), c(c(t,...,t),...), ... with c the constructor given.
std::vector<Tree> doubling_stream(const Tree &seed, ConstructorId c, std::size_t length);

} // namespace wqo
