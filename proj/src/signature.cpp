#include "wqo/signature.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "wqo/error.hpp"

namespace wqo {

namespace {

bool valid_token(std::string_view name) {
  if (name.empty())
    return false;
  for (char ch : name) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')' || ch == ',' ||
        ch == '#')
      return false;
  }
  return true;
}

} // namespace

Signature::Signature(std::vector<Constructor> ctors) : ctors_(std::move(ctors)) {
  for (std::uint32_t i = 0; i < ctors_.size(); ++i)
    index_.emplace(ctors_[i].name, ConstructorId{i});
}

std::shared_ptr<const Signature> Signature::create(std::vector<Constructor> ctors) {
  if (ctors.empty())
    throw SignatureError("signature has no constructors");
  std::unordered_map<std::string, int> seen;
  std::size_t with_prob = 0;
  double total = 0;
  for (const auto &c : ctors) {
    if (!valid_token(c.name))
      throw SignatureError("invalid constructor name '" + c.name + "'");
    if (++seen[c.name] > 1)
      throw SignatureError("duplicate constructor '" + c.name + "'");
    if (c.probability) {
      double p = *c.probability;
      if (!(p >= 0.0 && p <= 1.0))
        throw SignatureError("probability of '" + c.name + "' outside [0,1]");
      total += p;
      ++with_prob;
    }
  }
  if (with_prob != 0 && with_prob != ctors.size())
    throw SignatureError("probabilities must be given for all constructors or none");
  if (with_prob != 0 && std::abs(total - 1.0) > 1e-9)
    throw SignatureError("probabilities sum to " + std::to_string(total) + ", not 1");
  return std::shared_ptr<const Signature>(new Signature(std::move(ctors)));
}

std::optional<ConstructorId> Signature::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

bool Signature::has_probabilities() const { return ctors_.front().probability.has_value(); }

double Signature::expected_branching() const {
  double m = 0;
  for (const auto &c : ctors_)
    m += c.probability.value_or(0.0) * c.arity;
  return m;
}

bool operator==(const Signature &a, const Signature &b) {
  if (a.ctors_.size() != b.ctors_.size())
    return false;
  for (std::size_t i = 0; i < a.ctors_.size(); ++i) {
    if (a.ctors_[i].name != b.ctors_[i].name || a.ctors_[i].arity != b.ctors_[i].arity)
      return false;
  }
  return true;
}

SignaturePtr parse_signature(std::istream &in) {
  std::vector<Constructor> ctors;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name))
      continue;
    long long arity = -1;
    if (!(fields >> arity) || arity < 0)
      throw SignatureError("line " + std::to_string(lineno) + ": expected 'name arity [probability]'");
    Constructor c{name, static_cast<std::uint32_t>(arity), std::nullopt};
    std::string prob;
    if (fields >> prob) {
      try {
        std::size_t used = 0;
        c.probability = std::stod(prob, &used);
        if (used != prob.size())
          throw std::invalid_argument(prob);
      } catch (const std::exception &) {
        throw SignatureError("line " + std::to_string(lineno) + ": bad probability '" + prob + "'");
      }
    }
    std::string extra;
    if (fields >> extra)
      throw SignatureError("line " + std::to_string(lineno) + ": trailing field '" + extra + "'");
    ctors.push_back(std::move(c));
  }
  return Signature::create(std::move(ctors));
}

SignaturePtr parse_signature(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_signature(in);
}

SignaturePtr load_signature(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw SignatureError("cannot open signature file '" + path + "'");
  return parse_signature(in);
}

SignaturePtr default_signature() {
  static const SignaturePtr sig = Signature::create({
      {"a", 0, 0.50},
      {"b", 1, 0.20},
      {"c", 2, 0.15},
      {"d", 3, 0.15},
  });
  return sig;
}

} // namespace wqo
