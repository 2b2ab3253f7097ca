#ifndef LIMATTN_ERROR_HPP
#define LIMATTN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace limattn {

enum class ErrorCode {
  Parse,
  InvalidArgument,
  CyclicRelation,
  NotASwitch,
  MissingOrder,
  NotInClass,
  NotRationalizable,
  CyclicShortlist,
  SizeTooLarge,
  ConstructionExhausted,
  VerificationFailed,
};

const char* to_string(ErrorCode code);

// Errors a caller can trigger with bad input (parse failures, violated
// preconditions) versus defects, where a construction the theory guarantees
// did not come out right.
enum class ErrorCategory { Parse, Precondition, Defect };

ErrorCategory category_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);

  // 1-based; 0 when the problem is not tied to a single line.
  int line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  std::string message_;
};

}  // namespace limattn

#endif  // LIMATTN_ERROR_HPP
