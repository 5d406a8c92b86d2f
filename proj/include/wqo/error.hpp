#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wqo {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed signature declaration or signature file.
class SignatureError : public Error {
public:
  using Error::Error;
};

/// A term that does not conform to the grammar or to the signature.
/// `offset` is the zero-based character offset within the term's line;
/// `line` is one-based, or zero when the term did not come from a file.
class ParseError : public Error {
public:
  ParseError(std::string message, std::size_t offset, std::size_t line = 0)
      : Error((line ? "line " + std::to_string(line) + ": " : std::string()) + message +
              " at offset " + std::to_string(offset)),
        message_(std::move(message)), offset_(offset), line_(line) {}

  const std::string &message() const { return message_; }
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

private:
  std::string message_;
  std::size_t offset_;
  std::size_t line_;
};

/// Two trees, or a tree and a checker, built over different signatures.
class SignatureMismatch : public Error {
public:
  using Error::Error;
};

class GenerationError : public Error {
public:
  using Error::Error;
};

} // namespace wqo
