#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wqo/tree.hpp"

namespace wqo {

/// Parses `name` or `name(t1,...,tn)`; whitespace is insignificant.
/// Throws ParseError on syntax errors, unknown constructors and arity
/// mismatches.
Tree parse_tree(std::string_view text, const SignaturePtr &sig);

/// Canonical form without whitespace; parse_tree(render_tree(t)) == t.
std::string render_tree(const Tree &t);

/// One term per line, blank lines ignored. Errors carry the line number.
std::vector<Tree> read_trees(std::istream &in, const SignaturePtr &sig);
std::vector<Tree> load_trees(const std::string &path, const SignaturePtr &sig);
void write_trees(std::ostream &out, std::span<const Tree> trees);

} // namespace wqo
