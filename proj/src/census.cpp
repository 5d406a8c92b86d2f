#include "wqo/census.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <thread>

#include "wqo/error.hpp"
#include "wqo/orders.hpp"
#include "wqo/term_io.hpp"

namespace wqo {

std::uint64_t PairSet::count() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : bits_)
    n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

PairSet &PairSet::operator&=(const PairSet &o) {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    bits_[i] &= o.bits_[i];
  return *this;
}

bool PairSet::is_subset_of(const PairSet &o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~o.bits_[i])
      return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> PairSet::first_not_in(const PairSet &o) const {
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (std::uint64_t diff = bits_[k] & ~o.bits_[k]) {
      std::size_t row = k / stride_;
      std::size_t col = (k % stride_) * 64 + static_cast<std::size_t>(std::countr_zero(diff));
      return std::pair(row, col);
    }
  }
  return std::nullopt;
}

RelationTable::RelationTable(std::span<const Tree> corpus, std::uint32_t y_threshold, unsigned threads)
    : n_(corpus.size()) {
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    if (!same_signature(corpus[0].signature(), corpus[i].signature()))
      throw SignatureMismatch("corpus mixes signatures");
  }
  std::vector<Profile> profiles;
  profiles.reserve(n_);
  for (const Tree &t : corpus)
    profiles.push_back(make_profile(t, MeasureMask::all(), y_threshold));

  base_.assign(kAllWqoIds.size(), PairSet(n_));
  auto fill_rows = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (WqoId id : kAllWqoIds) {
          if (holds(id, profiles[i], profiles[j]))
            base_[static_cast<std::size_t>(id)].set(i, j);
        }
      }
    }
  };

  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n_, 1)));
  if (threads <= 1) {
    fill_rows(0, n_);
    return;
  }
  // Interleaved row blocks balance the uneven cost of large trees.
  constexpr std::size_t kBlock = 8;
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t first = w * kBlock; first < n_; first += threads * kBlock)
        fill_rows(first, std::min(n_, first + kBlock));
    });
  }
}

PairSet RelationTable::conjunction(ComponentSet c) const {
  PairSet out;
  bool first = true;
  for (WqoId id : kAllWqoIds) {
    if (!c.contains(id))
      continue;
    if (first) {
      out = base(id);
      first = false;
    } else {
      out &= base(id);
    }
  }
  if (first)
    throw Error("empty conjunction");
  return out;
}

const CensusRow *CensusResult::find(std::string_view name) const {
  for (const auto &row : rows) {
    if (row.name == name)
      return &row;
  }
  return nullptr;
}

CensusResult census(const RelationTable &table, std::span<const WqoSpec> specs) {
  CensusResult result;
  result.corpus_size = table.corpus_size();
  for (const WqoSpec &spec : specs)
    result.rows.push_back({spec.name(), spec, table.pairs(spec).count()});
  if (!specs.empty())
    result.y_threshold = specs.front().y_threshold();
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const CensusRow &a, const CensusRow &b) {
    return std::tie(a.count, a.name) < std::tie(b.count, b.name);
  });
  return result;
}

CensusResult census(std::span<const Tree> corpus, std::span<const WqoSpec> specs,
                    std::uint32_t y_threshold) {
  return census(RelationTable(corpus, y_threshold), specs);
}

void write_census_tsv(std::ostream &out, const CensusResult &result) {
  out << "# seed=" << result.seed << " corpus=" << result.corpus_size << " cap=" << result.size_cap
      << " k=" << result.y_threshold << '\n';
  out << "wqo_name\tpair_count\n";
  for (const auto &row : result.rows)
    out << row.name << '\t' << row.count << '\n';
}

std::size_t AuditReport::violations() const {
  std::size_t n = 0;
  for (const auto &e : implications)
    n += (!e.holds || !e.count_ordered) ? 1 : 0;
  for (const auto &e : identities)
    n += e.holds ? 0 : 1;
  for (const auto &e : witnesses)
    n += e.holds ? 0 : 1;
  return n;
}

std::size_t AuditReport::unwitnessed_strict_edges() const {
  std::size_t n = 0;
  for (const auto &e : implications)
    n += (e.strict && !e.strict_witnessed) ? 1 : 0;
  return n;
}

namespace {

struct FixedWitness {
  const char *description;
  const char *s;
  const char *t;
  const char *related_by;   // must relate s to t
  const char *unrelated_by; // must not relate s to t
};

// Trees over a/0, b/1, c/2, d/3:
//   A = b(b(a))   B = c(b(a),b(a))   C = d(b(a),b(a),b(a))
//   D = c(b(b(a)),a) has the bag of B;  D' adds one b to D's left branch.
constexpr FixedWitness kFixedWitnesses[] = {
    {"H strictly finer than E: A, C", "b(b(a))", "d(b(a),b(a),b(a))", "E", "H"},
    {"E strictly finer than P: A, B", "b(b(a))", "c(b(a),b(a))", "P", "E"},
    {"P strictly finer than B: B, D", "c(b(a),b(a))", "c(b(b(a)),a)", "B", "P"},
    {"P strictly finer than SB: B, D'", "c(b(a),b(a))", "c(b(b(b(a))),a)", "SB", "P"},
    {"Y not finer than Z: B, C", "c(b(a),b(a))", "d(b(a),b(a),b(a))", "Y", "Z"},
    {"Z not finer than Y: D, D with one b", "c(b(b(a)),a)", "c(b(a),a)", "Z", "Y"},
    {"M strictly finer than Z", "b(b(a))", "b(a)", "Z", "M"},
    {"M strictly finer than S", "a", "b(a)", "S", "M"},
    {"P strictly finer than S", "b(a)", "c(a,a)", "S", "P"},
    {"B not finer than S: equal bags", "c(b(a),a)", "c(a,b(a))", "B", "S"},
    {"S not finer than B", "b(b(a))", "c(a,c(a,a))", "S", "B"},
    {"B not finer than M", "a", "b(a)", "B", "M"},
    {"M not finer than B", "c(b(b(a)),b(b(a)))", "c(c(b(a),a),c(a,a))", "M", "B"},
};

ConstructorBag bag_of(std::initializer_list<std::uint32_t> counts) {
  ConstructorBag b(counts.size());
  std::uint32_t i = 0;
  for (auto c : counts)
    b[ConstructorId{i++}] = c;
  return b;
}

} // namespace

AuditReport hierarchy_audit(const RelationTable &table, std::span<const WqoSpec> specs) {
  AuditReport report;
  std::vector<PairSet> pairs;
  pairs.reserve(specs.size());
  for (const WqoSpec &spec : specs)
    pairs.push_back(table.pairs(spec));

  for (std::size_t a = 0; a < specs.size(); ++a) {
    for (std::size_t b = 0; b < specs.size(); ++b) {
      if (a == b || !specs[a].implies(specs[b]))
        continue;
      AuditReport::Implication e;
      e.finer = specs[a].name();
      e.coarser = specs[b].name();
      e.holds = pairs[a].is_subset_of(pairs[b]);
      e.count_ordered = pairs[a].count() <= pairs[b].count();
      e.strict = !specs[b].implies(specs[a]);
      e.strict_witnessed = e.strict && !pairs[b].is_subset_of(pairs[a]);
      report.implications.push_back(std::move(e));
    }
  }

  using W = WqoId;
  auto identity = [&](const char *lhs, ComponentSet l, const char *rhs, ComponentSet r) {
    report.identities.push_back({lhs, rhs, table.conjunction(l) == table.conjunction(r)});
  };
  identity("M", components_of({W::M}), "ZS", components_of({W::Z, W::S}));
  identity("MP", components_of({W::M, W::P}), "ZP", components_of({W::Z, W::P}));
  identity("MB", components_of({W::M, W::B}), "ZSB", components_of({W::Z, W::S, W::B}));

  const SignaturePtr sig = default_signature();
  for (const auto &w : kFixedWitnesses) {
    Tree s = parse_tree(w.s, sig);
    Tree t = parse_tree(w.t, sig);
    bool ok = rel(parse_wqo_name(w.related_by), s, t) && !rel(parse_wqo_name(w.unrelated_by), s, t);
    report.witnesses.push_back({std::string(w.description) + " (" + w.s + ", " + w.t + ")", ok});
  }

  // Bag-level witnesses for the incomparability of inclusion and <=
  // (counts of a, b).
  report.witnesses.push_back({"{a,b,b} <= {a,a,a,b} but not included",
                              multiset_leq(bag_of({1, 2}), bag_of({3, 1})) &&
                                  !multiset_subset(bag_of({1, 2}), bag_of({3, 1}))});
  report.witnesses.push_back({"{a} included in {a,b} but not <=",
                              multiset_subset(bag_of({1, 0}), bag_of({1, 1})) &&
                                  !multiset_leq(bag_of({1, 0}), bag_of({1, 1}))});
  return report;
}

void write_audit(std::ostream &out, const AuditReport &report) {
  std::size_t strict = 0;
  for (const auto &e : report.implications) {
    strict += e.strict ? 1 : 0;
    if (!e.holds)
      out << "# VIOLATION pairs(" << e.finer << ") not within pairs(" << e.coarser << ")\n";
    else if (!e.count_ordered)
      out << "# VIOLATION count(" << e.finer << ") > count(" << e.coarser << ")\n";
  }
  for (const auto &e : report.identities)
    out << "# identity " << e.lhs << " = " << e.rhs << (e.holds ? " ok" : " VIOLATION") << '\n';
  for (const auto &w : report.witnesses)
    out << "# witness " << w.description << (w.holds ? " ok" : " VIOLATION") << '\n';
  for (const auto &e : report.implications) {
    if (e.strict && !e.strict_witnessed)
      out << "# unwitnessed on this corpus: " << e.finer << " strictly finer than " << e.coarser << '\n';
  }
  out << "# audit: " << report.implications.size() << " implications (" << strict << " strict, "
      << report.unwitnessed_strict_edges() << " unwitnessed), " << report.violations()
      << " violations\n";
}

} // namespace wqo
