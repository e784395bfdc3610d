#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hint {

/// Base of every error the library signals.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Equal dimensions whose second coordinates are +inf and -inf.
class UndefinedSum : public Error {
 public:
  using Error::Error;
};

class EmptyList : public Error {
 public:
  using Error::Error;
};

/// A set primitive that the space does not know about.
class UnknownSet : public Error {
 public:
  using Error::Error;
};

/// Two primitives that were declared disjoint overlap.
class NonDisjoint : public Error {
 public:
  using Error::Error;
};

/// The function or set leaves the closed expression grammar (for example an
/// irrational root would be needed to describe a sublevel set exactly).
class UnsupportedExpression : public Error {
 public:
  using Error::Error;
};

class UnsupportedScenario : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input. `position()` is a character offset into
/// the offending text, or npos when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = std::string::npos)
      : Error(position == std::string::npos
                  ? what
                  : what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hint
