#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "wqo/signature.hpp"

namespace wqo {

class Tree;

namespace detail {

struct Node {
  ConstructorId ctor;
  std::vector<std::shared_ptr<const Node>> children;
  std::uint32_t size = 1;
  std::uint64_t hash = 0;
};

} // namespace detail

/// An immutable finite term over a Signature.
///
/// A Tree is a cheap handle: copies share structure. Size and a structural
/// hash are computed bottom-up when a node is built, so both are O(1) to
/// query afterwards.
class Tree {
public:
  /// Builds ctor(children...). Throws SignatureMismatch if a child belongs to
  /// a different signature and Error on an arity mismatch.
  static Tree make(SignaturePtr sig, ConstructorId ctor, std::span<const Tree> children = {});
  static Tree make(SignaturePtr sig, ConstructorId ctor, std::initializer_list<Tree> children);

  ConstructorId ctor() const { return node_->ctor; }
  std::uint32_t arity() const { return static_cast<std::uint32_t>(node_->children.size()); }
  Tree child(std::uint32_t i) const { return Tree(sig_, node_->children[i]); }

  /// Number of nodes.
  std::uint32_t size() const { return node_->size; }
  std::uint64_t hash() const { return node_->hash; }

  const Signature &signature() const { return *sig_; }
  const SignaturePtr &signature_ptr() const { return sig_; }
  const detail::Node &node() const { return *node_; }

  /// Structural equality; hashes are only used to reject quickly.
  friend bool operator==(const Tree &a, const Tree &b);

private:
  Tree(SignaturePtr sig, std::shared_ptr<const detail::Node> node)
      : sig_(std::move(sig)), node_(std::move(node)) {}

  SignaturePtr sig_;
  std::shared_ptr<const detail::Node> node_;
};

inline std::uint32_t size(const Tree &t) { return t.size(); }
inline std::uint64_t tree_hash(const Tree &t) { return t.hash(); }
bool tree_equal(const Tree &a, const Tree &b);

/// True when both signatures are the same object or structurally equal.
bool same_signature(const Signature &a, const Signature &b);

} // namespace wqo

template <> struct std::hash<wqo::Tree> {
  std::size_t operator()(const wqo::Tree &t) const noexcept { return t.hash(); }
};
