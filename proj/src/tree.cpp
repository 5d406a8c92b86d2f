#include "wqo/tree.hpp"

#include "wqo/error.hpp"

namespace wqo {

namespace {

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

} // namespace

bool same_signature(const Signature &a, const Signature &b) { return &a == &b || a == b; }

Tree Tree::make(SignaturePtr sig, ConstructorId ctor, std::span<const Tree> children) {
  if (ctor.value >= sig->size())
    throw Error("constructor id " + std::to_string(ctor.value) + " outside signature");
  if (children.size() != sig->arity(ctor)) {
    throw Error("constructor '" + sig->name(ctor) + "' has arity " +
                std::to_string(sig->arity(ctor)) + ", got " + std::to_string(children.size()) +
                " children");
  }
  auto node = std::make_shared<detail::Node>();
  node->ctor = ctor;
  node->children.reserve(children.size());
  std::uint64_t h = mix(ctor.value + 1);
  for (const Tree &c : children) {
    if (!same_signature(*c.sig_, *sig))
      throw SignatureMismatch("child built over a different signature");
    node->children.push_back(c.node_);
    node->size += c.size();
    h = mix(h ^ c.hash()) + 0x632be59bd9b4e019ull;
  }
  node->hash = h;
  return Tree(std::move(sig), std::move(node));
}

Tree Tree::make(SignaturePtr sig, ConstructorId ctor, std::initializer_list<Tree> children) {
  return make(std::move(sig), ctor, std::span<const Tree>(children.begin(), children.size()));
}

namespace {

bool nodes_equal(const detail::Node &a, const detail::Node &b) {
  if (&a == &b)
    return true;
  if (a.hash != b.hash || a.size != b.size || a.ctor != b.ctor)
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!nodes_equal(*a.children[i], *b.children[i]))
      return false;
  }
  return true;
}

} // namespace

bool operator==(const Tree &a, const Tree &b) { return nodes_equal(*a.node_, *b.node_); }

bool tree_equal(const Tree &a, const Tree &b) { return a == b; }

} // namespace wqo
