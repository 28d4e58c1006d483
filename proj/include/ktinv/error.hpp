#pragma once

#include <stdexcept>
#include <string>

namespace ktinv {

enum class ErrorKind {
  malformed_input,  // unparsable or out-of-range user data
  structural,       // operands from different rings
  precondition,     // a hypothesis such as primitivity does not hold
  bound_exceeded,   // an iteration cap or search bound ran out
  config,           // configured limit violated (e.g. depth cap)
  internal          // self-check disagreement; indicates a bug
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace ktinv
