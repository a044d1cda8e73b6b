#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfarb {

// Base for every error raised by the library. The CLI maps these to exit
// status 1; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed tree text. offset is the byte position where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size limit was exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfarb
