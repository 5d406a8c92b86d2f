#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wqo {

/// Index of a constructor within its signature.
struct ConstructorId {
  std::uint32_t value = 0;

  friend auto operator<=>(ConstructorId, ConstructorId) = default;
};

struct Constructor {
  std::string name;
  std::uint32_t arity = 0;
  std::optional<double> probability;
};

/// A finite, ordered alphabet of constructors with fixed arities.
///
/// Signatures are immutable and shared between all trees built over them.
/// Probabilities are either given for every constructor or for none, and
/// when present sum to one within 1e-9.
class Signature {
public:
  static std::shared_ptr<const Signature> create(std::vector<Constructor> ctors);

  std::size_t size() const { return ctors_.size(); }
  const Constructor &operator[](ConstructorId id) const { return ctors_[id.value]; }
  const std::vector<Constructor> &constructors() const { return ctors_; }

  std::uint32_t arity(ConstructorId id) const { return ctors_[id.value].arity; }
  const std::string &name(ConstructorId id) const { return ctors_[id.value].name; }
  std::optional<ConstructorId> find(std::string_view name) const;

  bool has_probabilities() const;
  /// Expected number of children of a random node, sum of p(c) * arity(c).
  /// Generation terminates almost surely only when this is below one.
  double expected_branching() const;

  friend bool operator==(const Signature &a, const Signature &b);

private:
  explicit Signature(std::vector<Constructor> ctors);

  std::vector<Constructor> ctors_;
  std::unordered_map<std::string, ConstructorId> index_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

/// Reads "name arity [probability]" lines; '#' starts a comment.
SignaturePtr parse_signature(std::istream &in);
SignaturePtr parse_signature(std::string_view text);
SignaturePtr load_signature(const std::string &path);

/// a/0 0.50, b/1 0.20, c/2 0.15, d/3 0.15: the census signature.
SignaturePtr default_signature();

} // namespace wqo
