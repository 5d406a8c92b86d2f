#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <string>
#include <vector>

#include "wqo/wqo_spec.hpp"

namespace wqo {

/// Relation over a fixed corpus as an n x n bit matrix; bit (i, j) is set
/// when corpus[i] is related to corpus[j].
class PairSet {
public:
  PairSet() = default;
  explicit PairSet(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  std::size_t dimension() const { return n_; }
  bool test(std::size_t i, std::size_t j) const { return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j) { bits_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  std::uint64_t count() const;
  PairSet &operator&=(const PairSet &o);
  bool is_subset_of(const PairSet &o) const;
  /// First (i, j) in *this but not in o, row-major.
  std::optional<std::pair<std::size_t, std::size_t>> first_not_in(const PairSet &o) const;

  friend bool operator==(const PairSet &, const PairSet &) = default;

private:
  // Each row starts on a word boundary, so distinct rows never share a word.
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Every base relation over a corpus, each evaluated directly from its own
/// definition. Intersections are formed from these by bitwise and.
class RelationTable {
public:
  /// Evaluates all n^2 ordered pairs, split over `threads` workers
  /// (0 = hardware concurrency). The result does not depend on the split.
  RelationTable(std::span<const Tree> corpus, std::uint32_t y_threshold = 2, unsigned threads = 0);

  std::size_t corpus_size() const { return n_; }
  const PairSet &base(WqoId id) const { return base_[static_cast<std::size_t>(id)]; }
  /// Conjunction of the given components, not canonicalized.
  PairSet conjunction(ComponentSet c) const;
  PairSet pairs(const WqoSpec &spec) const { return conjunction(spec.components()); }

private:
  std::size_t n_;
  std::vector<PairSet> base_;
};

struct CensusRow {
  std::string name;
  WqoSpec spec;
  std::uint64_t count = 0;
};

struct CensusResult {
  std::vector<CensusRow> rows; // ascending count, ties by name
  std::uint64_t seed = 0;
  std::size_t corpus_size = 0;
  std::uint32_t size_cap = 0;
  std::uint32_t y_threshold = 2;

  const CensusRow *find(std::string_view name) const;
};

CensusResult census(const RelationTable &table, std::span<const WqoSpec> specs);
CensusResult census(std::span<const Tree> corpus, std::span<const WqoSpec> specs,
                    std::uint32_t y_threshold = 2);

/// "# seed=.. corpus=.. cap=.. k=.." header, then name<TAB>count rows.
void write_census_tsv(std::ostream &out, const CensusResult &result);

struct AuditReport {
  struct Implication {
    std::string finer, coarser;
    bool holds = true;          // pair-level inclusion
    bool count_ordered = true;  // count(finer) <= count(coarser)
    bool strict = false;        // closures differ
    bool strict_witnessed = false;
  };
  struct Identity {
    std::string lhs, rhs;
    bool holds = true;
  };
  struct Witness {
    std::string description;
    bool holds = true;
  };

  std::vector<Implication> implications;
  std::vector<Identity> identities;
  std::vector<Witness> witnesses;

  std::size_t violations() const;
  std::size_t unwitnessed_strict_edges() const;
  bool ok() const { return violations() == 0; }
};

/// Checks pair-level inclusion and count order for every implied pair of
/// specs, the identities M = ZS, MP = ZP and MB = ZSB, and the fixed
/// strictness witnesses over a/0, b/1, c/2, d/3. Strict edges without a
/// witness in the corpus are reported as unwitnessed, never as violations.
AuditReport hierarchy_audit(const RelationTable &table, std::span<const WqoSpec> specs);

void write_audit(std::ostream &out, const AuditReport &report);

} // namespace wqo
