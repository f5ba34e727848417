#pragma once

#include <stdexcept>
#include <string>

namespace canonlab {

enum class ErrorCode {
    DuplicateBranch,
    DanglingBranch,
    Disconnected,
    EmptySide,
    TooManyComponents,
    TwistOnNode,
    InvalidBundle,
    PoleAtPoint,
    ZeroSpace,
    BundleMismatch,
    ExpressFailure,
    GenusTooSmall,
    NotAPencil,
    NotGloballyGenerated,
    TooFewSections,
    WrongCardinality,
    BudgetExhausted,
    BadParameters,
    ModpMismatch,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace canonlab
