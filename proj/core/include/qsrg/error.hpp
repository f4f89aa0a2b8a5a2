#pragma once

#include <stdexcept>
#include <string>

namespace qsrg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAGroup : Error {
  using Error::Error;
};

struct NotAbelian : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct NotRegular : Error {
  using Error::Error;
};

struct OrderBoundExceeded : Error {
  using Error::Error;
};

struct BadConnectionSet : Error {
  using Error::Error;
};

struct UnsupportedFamily : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Fired when the numeric eigensolver disagrees with the exact integer pass.
struct NumericMismatch : Error {
  using Error::Error;
};

}  // namespace qsrg
