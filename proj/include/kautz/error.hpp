#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace kautz {

enum class ErrorCode {
  EmptyWord,
  AdjacentRepeat,
  SymbolOutOfRange,
  WordTooShort,
  InvalidAlpha,
  PositionOutOfRange,
  LengthMismatch,
  NotCircularlyValid,
  TooLarge,
  EdgeNotInGraph,
  BudgetExceeded,
  PreconditionViolated,
  WrongOutdegree,
  InvalidArgument,
  Overflow,
  InvariantViolation,
};

const char* to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this exception type. `index`
/// carries the offending letter position for word validation errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

/// Budget refusal; `required` is the work estimate that was over the cap.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, double required, double cap)
      : Error(ErrorCode::BudgetExceeded, what), required_(required), cap_(cap) {}

  double required() const noexcept { return required_; }
  double cap() const noexcept { return cap_; }

 private:
  double required_;
  double cap_;
};

}  // namespace kautz
