#ifndef CHARLOCI_ERRORS_HPP
#define CHARLOCI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charloci {

enum class ErrorCode {
  ParseError,
  RingMismatch,
  TorusMismatch,
  PreconditionFailed,
  ResolutionTooLong,
  NotSurjective,
  ZeroValue,
  NonCommuting,
  NonInvertible,
  NotAChainMap,
  NotReflexive,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorCode::ParseError,
              what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace charloci

#endif
