#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semidyn {

/// All validation and precondition failures carry a stable machine-readable
/// code ("NotAssociative", "CapExceeded", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("ParseError",
              "line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
        line(line),
        column(column) {}

  int line;
  int column;
};

[[noreturn]] inline void fail(std::string code, const std::string& what) {
  throw Error(std::move(code), what);
}

/// A failed internal check means a theorem the code relies on did not hold on
/// a concrete instance. Never downgraded to a warning.
inline void internal_check(bool cond, const std::string& what) {
  if (!cond) throw Error("InternalInvariant", what);
}

}  // namespace semidyn
