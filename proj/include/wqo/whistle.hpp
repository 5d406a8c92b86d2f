#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wqo/wqo_spec.hpp"

namespace wqo {

struct PushOutcome {
  enum class Kind { Admitted, Whistle };

  Kind kind = Kind::Admitted;
  /// Index the pushed tree has (or would have had) in the sequence.
  std::size_t position = 0;
  /// Some earlier admitted element related to the pushed one.
  std::optional<std::size_t> witness;

  bool whistled() const { return kind == Kind::Whistle; }
};

/// How a SequenceChecker answers a push for its spec.
struct Strategy {
  enum class Scan {
    PartitionHit, // partition key equality is the whole order
    SizeShortcut, // compare against the last admitted size plus a hash table
    Full,         // layered comparison against every candidate
  };

  bool by_set = false;      // partitioned on the constructor set
  bool by_repeated = false; // partitioned on the k-repeated set
  Scan scan = Scan::Full;
  ComponentSet residual;    // what is still compared inside a partition

  std::string describe() const;
};

Strategy select_strategy(const WqoSpec &spec);

/// Online whistle: admits trees one at a time and blows on the first tree
/// that some earlier admitted tree is related to.
///
/// Elements are split into partitions by their constructor set and/or
/// k-repeated set when the spec has Z, M or Y, so only same-key elements are
/// compared. Within a partition the S part is answered from the last admitted
/// size and a hash table when S is all that remains; otherwise each candidate
/// is compared component by component, cheapest first, with cheap necessary
/// conditions (size, bag inclusion, Euler string) tried before P, E and H.
///
/// A whistled tree is not admitted; the checker may keep being pushed to.
class SequenceChecker {
public:
  explicit SequenceChecker(WqoSpec spec);

  PushOutcome push(const Tree &t);
  void reset();

  const WqoSpec &spec() const { return spec_; }
  const Strategy &strategy() const { return strategy_; }
  std::size_t size() const { return admitted_.size(); }
  const Profile &operator[](std::size_t i) const { return admitted_[i]; }
  std::size_t partition_count() const { return partitions_.size(); }
  /// Admitted indices sharing t's partition key, in admission order.
  std::vector<std::size_t> partition_of(const Tree &t) const;

  /// Number of pairwise candidate comparisons made so far.
  std::uint64_t comparisons() const { return comparisons_; }

private:
  struct Partition {
    std::vector<std::uint32_t> members;
    std::uint32_t last_size = 0;
    std::unordered_multimap<std::uint64_t, std::uint32_t> by_hash;
  };

  std::string partition_key(const Profile &p) const;
  std::optional<std::size_t> find_witness(const Partition &part, const Profile &p);
  bool related(const Profile &s, const Profile &t) const;

  WqoSpec spec_;
  Strategy strategy_;
  std::vector<WqoId> by_cost_order_;
  MeasureMask mask_;
  std::vector<Profile> admitted_;
  std::unordered_map<std::string, Partition> partitions_;
  SignaturePtr sig_;
  std::uint64_t comparisons_ = 0;
};

/// Reference checker: compares every new tree against every admitted tree in
/// order with rel() and reports the first witness.
class NaiveChecker {
public:
  explicit NaiveChecker(WqoSpec spec);

  PushOutcome push(const Tree &t);
  void reset();

  const WqoSpec &spec() const { return spec_; }
  std::size_t size() const { return admitted_.size(); }
  const Profile &operator[](std::size_t i) const { return admitted_[i]; }

private:
  WqoSpec spec_;
  MeasureMask mask_;
  std::vector<Profile> admitted_;
  SignaturePtr sig_;
};

} // namespace wqo
