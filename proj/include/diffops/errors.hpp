#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffops {

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error at a byte offset of the parsed text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), message_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

// A Groebner computation ran past its pair or basis-size limit. Exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diffops
