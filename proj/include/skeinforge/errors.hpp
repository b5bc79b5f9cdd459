#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skeinforge {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands drawn from different coefficient rings, or an invalid ring.
class ConfigError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A configured size limit (crossings, singular points) was exceeded.
class BoundError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

} // namespace skeinforge
