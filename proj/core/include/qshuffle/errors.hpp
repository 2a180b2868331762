#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qshuffle {

/// Malformed word, coefficient or element text. Carries the offending token
/// and its zero-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string token, std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position) +
                           " (token '" + token + "')"),
        token_(std::move(token)),
        position_(position) {}

  const std::string& token() const { return token_; }
  std::size_t position() const { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

/// Unknown relation or series identity id.
class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(const std::string& id)
      : std::invalid_argument("unknown identity id '" + id + "'") {}
};

}  // namespace qshuffle
