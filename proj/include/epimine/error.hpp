#pragma once

#include <stdexcept>
#include <string>

namespace epimine {

enum class ErrorCode {
  // value domain
  MissingOne,
  ClosureViolation,
  HalfNotInSet,
  OutOfRange,
  // language
  SyntaxError,
  DuplicateConditionArgument,
  HeadInConditions,
  EmptyConditions,
  // argumentation model
  LengthMismatch,
  ConflictingRelation,
  EmptyRelationSet,
  // semantics
  UnknownArgument,
  CapExceeded,
  InvalidDistribution,
  // data / pipeline
  MissingValue,
  EmptyDataset,
  SchemaError,
  ValueOffGrid,
  LikertOutOfRange,
  DatasetTooSmall,
  InvalidConfig,
};

const char* to_string(ErrorCode code);

/// All library failures are reported as an Error carrying a stable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace epimine
