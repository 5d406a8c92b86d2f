#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wqo/wqo_spec.hpp"

namespace wqo {

/// A stream of distinct trees, ordered by non-increasing size, from which
/// everything the spec's checker would whistle at has been removed. Sizes
/// run from about 1.5 * target down to about 0.5 * target. May be shorter
/// than requested when the spec admits few trees (Z or Y partitions).
std::vector<Tree> admitted_stream(const WqoSpec &spec, const SignaturePtr &sig, std::size_t length,
                                  std::uint32_t target_size, std::uint64_t seed);

struct BenchRow {
  std::string checker; // "optimized" or "naive"
  std::size_t n = 0;
  double seconds = 0;
  std::size_t whistles = 0;
};

struct BenchReport {
  std::string wqo;
  double mean_size = 0;
  std::vector<BenchRow> rows;

  /// time(2n) / time(n) for one checker, or 0 when not measured.
  double ratio(const std::string &checker) const;
};

/// Times pushing n and 2n trees of an admitted stream into fresh optimized
/// and naive checkers; each figure is the best of `repeats` runs. The n-long
/// stream is every other element of the 2n-long one.
BenchReport bench_whistle(const WqoSpec &spec, const SignaturePtr &sig, std::size_t n,
                          std::uint32_t target_size, std::uint64_t seed = 1, int repeats = 3);

void write_bench_tsv(std::ostream &out, const BenchReport &report);

} // namespace wqo
