#include "wqo/term_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "wqo/error.hpp"

namespace wqo {

namespace {

class TermParser {
public:
  TermParser(std::string_view text, const SignaturePtr &sig) : text_(text), sig_(sig) {}

  Tree parse() {
    Tree t = term();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "' after term", pos_);
    return t;
  }

private:
  static bool is_name_char(char ch) {
    return !std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')' && ch != ',' &&
           ch != '#';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Tree term() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_]))
      ++pos_;
    if (start == pos_) {
      if (pos_ == text_.size())
        throw ParseError("expected constructor name, found end of input", pos_);
      throw ParseError("expected constructor name, found '" + std::string(1, text_[pos_]) + "'",
                       pos_);
    }
    std::string_view name = text_.substr(start, pos_ - start);
    auto id = sig_->find(name);
    if (!id)
      throw ParseError("unknown constructor '" + std::string(name) + "'", start);

    std::vector<Tree> children;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      children.push_back(term());
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(term());
        skip_space();
      }
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("expected ',' or ')'", pos_);
      ++pos_;
    }
    std::uint32_t arity = sig_->arity(*id);
    if (children.size() != arity) {
      throw ParseError("constructor '" + std::string(name) + "' expects " + std::to_string(arity) +
                           " arguments, got " + std::to_string(children.size()),
                       start);
    }
    return Tree::make(sig_, *id, children);
  }

  std::string_view text_;
  const SignaturePtr &sig_;
  std::size_t pos_ = 0;
};

void render(const Tree &t, std::string &out) {
  out += t.signature().name(t.ctor());
  if (t.arity() == 0)
    return;
  out += '(';
  for (std::uint32_t i = 0; i < t.arity(); ++i) {
    if (i)
      out += ',';
    render(t.child(i), out);
  }
  out += ')';
}

} // namespace

Tree parse_tree(std::string_view text, const SignaturePtr &sig) { return TermParser(text, sig).parse(); }

std::string render_tree(const Tree &t) {
  std::string out;
  out.reserve(t.size() * 3);
  render(t, out);
  return out;
}

std::vector<Tree> read_trees(std::istream &in, const SignaturePtr &sig) {
  std::vector<Tree> trees;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos)
      continue;
    try {
      trees.push_back(parse_tree(line, sig));
    } catch (const ParseError &e) {
      throw ParseError(e.message(), e.offset(), lineno);
    }
  }
  return trees;
}

std::vector<Tree> load_trees(const std::string &path, const SignaturePtr &sig) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open tree file '" + path + "'");
  return read_trees(in, sig);
}

void write_trees(std::ostream &out, std::span<const Tree> trees) {
  for (const Tree &t : trees)
    out << render_tree(t) << '\n';
}

} // namespace wqo
