#include "wqo/whistle.hpp"

#include "wqo/error.hpp"
#include "wqo/orders.hpp"

namespace wqo {

namespace {

void bind_signature(SignaturePtr &bound, const Tree &t) {
  if (!bound) {
    bound = t.signature_ptr();
    return;
  }
  if (!same_signature(*bound, t.signature()))
    throw SignatureMismatch("tree is built over a different signature than the sequence");
}

void append_words(std::string &key, const ConstructorSet &s) {
  for (std::uint64_t w : s.words())
    key.append(reinterpret_cast<const char *>(&w), sizeof w);
}

} // namespace

std::string Strategy::describe() const {
  std::string out;
  if (by_set || by_repeated) {
    out = "partition by ";
    if (by_set)
      out += "constructor set";
    if (by_set && by_repeated)
      out += " and ";
    if (by_repeated)
      out += "repeated set";
    out += ", ";
  }
  switch (scan) {
  case Scan::PartitionHit:
    out += "whistle on any partition hit";
    break;
  case Scan::SizeShortcut:
    out += "last-size shortcut with hashed equality";
    break;
  case Scan::Full: {
    out += "layered scan of ";
    for (WqoId id : kAllWqoIds) {
      if (residual.contains(id))
        out += letter(id);
    }
    break;
  }
  }
  return out;
}

Strategy select_strategy(const WqoSpec &spec) {
  Strategy st;
  st.by_set = spec.contains(WqoId::Z) || spec.contains(WqoId::M);
  st.by_repeated = spec.contains(WqoId::Y);
  st.residual = spec.components();
  st.residual.erase(WqoId::Z);
  st.residual.erase(WqoId::Y);
  if (st.residual.contains(WqoId::M)) {
    st.residual.erase(WqoId::M);
    st.residual.insert(WqoId::S);
  }
  if (st.residual.empty())
    st.scan = Strategy::Scan::PartitionHit;
  else if (st.residual == components_of({WqoId::S}))
    st.scan = Strategy::Scan::SizeShortcut;
  else
    st.scan = Strategy::Scan::Full;
  return st;
}

SequenceChecker::SequenceChecker(WqoSpec spec)
    : spec_(spec), strategy_(select_strategy(spec)), mask_(spec.required_measures()) {
  by_cost_order_ = WqoSpec(strategy_.residual.empty() ? spec.components() : strategy_.residual,
                           spec.y_threshold())
                       .evaluation_order();
  const auto &r = strategy_.residual;
  if (r.contains(WqoId::P) || r.contains(WqoId::E) || r.contains(WqoId::H))
    mask_ |= Measure::Bag;
  if (r.contains(WqoId::H))
    mask_ |= Measure::Euler;
}

void SequenceChecker::reset() {
  admitted_.clear();
  partitions_.clear();
  sig_.reset();
  comparisons_ = 0;
}

std::string SequenceChecker::partition_key(const Profile &p) const {
  std::string key;
  if (strategy_.by_set)
    append_words(key, p.set);
  if (strategy_.by_repeated)
    append_words(key, p.repeated);
  return key;
}

std::vector<std::size_t> SequenceChecker::partition_of(const Tree &t) const {
  auto it = partitions_.find(partition_key(make_profile(t, mask_, spec_.y_threshold())));
  if (it == partitions_.end())
    return {};
  return {it->second.members.begin(), it->second.members.end()};
}

bool SequenceChecker::related(const Profile &s, const Profile &t) const {
  for (WqoId id : by_cost_order_) {
    switch (id) {
    case WqoId::P:
    case WqoId::E:
    case WqoId::H:
      // Necessary conditions, cheapest first: each of P, E, H implies B,
      // and H implies E.
      if (s.size() > t.size() || !multiset_subset(s.bag, t.bag))
        return false;
      if (id == WqoId::H && !rel_E(s, t))
        return false;
      break;
    default:
      break;
    }
    if (!holds(id, s, t))
      return false;
  }
  return true;
}

std::optional<std::size_t> SequenceChecker::find_witness(const Partition &part, const Profile &p) {
  switch (strategy_.scan) {
  case Strategy::Scan::PartitionHit:
    if (!part.members.empty())
      return part.members.front();
    return std::nullopt;

  case Strategy::Scan::SizeShortcut: {
    // Admitted sizes inside a partition never increase, so the last member
    // is the smallest one.
    if (!part.members.empty() && part.last_size < p.size())
      return part.members.back();
    auto [lo, hi] = part.by_hash.equal_range(p.hash());
    for (auto it = lo; it != hi; ++it) {
      ++comparisons_;
      if (tree_equal(admitted_[it->second].tree, p.tree))
        return it->second;
    }
    return std::nullopt;
  }

  case Strategy::Scan::Full:
    for (std::uint32_t m : part.members) {
      ++comparisons_;
      if (related(admitted_[m], p))
        return m;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

PushOutcome SequenceChecker::push(const Tree &t) {
  bind_signature(sig_, t);
  Profile p = make_profile(t, mask_, spec_.y_threshold());
  std::string key = partition_key(p);
  const std::size_t position = admitted_.size();

  auto it = partitions_.find(key);
  if (it != partitions_.end()) {
    if (auto w = find_witness(it->second, p))
      return {PushOutcome::Kind::Whistle, position, *w};
  } else {
    it = partitions_.emplace(std::move(key), Partition{}).first;
  }

  Partition &part = it->second;
  const auto index = static_cast<std::uint32_t>(position);
  part.members.push_back(index);
  part.last_size = p.size();
  if (strategy_.scan == Strategy::Scan::SizeShortcut)
    part.by_hash.emplace(p.hash(), index);
  admitted_.push_back(std::move(p));
  return {PushOutcome::Kind::Admitted, position, std::nullopt};
}

NaiveChecker::NaiveChecker(WqoSpec spec) : spec_(spec), mask_(spec.required_measures()) {}

void NaiveChecker::reset() {
  admitted_.clear();
  sig_.reset();
}

PushOutcome NaiveChecker::push(const Tree &t) {
  bind_signature(sig_, t);
  Profile p = make_profile(t, mask_, spec_.y_threshold());
  const std::size_t position = admitted_.size();
  for (std::size_t i = 0; i < admitted_.size(); ++i) {
    if (rel(spec_, admitted_[i], p))
      return {PushOutcome::Kind::Whistle, position, i};
  }
  admitted_.push_back(std::move(p));
  return {PushOutcome::Kind::Admitted, position, std::nullopt};
}

} // namespace wqo
