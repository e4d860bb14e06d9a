#pragma once

#include <stdexcept>
#include <string>

namespace smat {

// Error categories; the CLI maps them to exit codes (see tools/).
enum class ErrorCode : int {
  Generic = 1,
  PrecisionPlan = 2,
  Parse = 3,
  Verification = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InsufficientInputAccuracy : Error {
  long required_lambda;
  long declared_lambda;
  InsufficientInputAccuracy(const std::string& where, long required, long declared)
      : Error(ErrorCode::PrecisionPlan,
              where + ": declared input accuracy 2^-" + std::to_string(declared) +
                  " is below the required 2^-" + std::to_string(required)),
        required_lambda(required),
        declared_lambda(declared) {}
};

struct ZeroInBox : Error {
  explicit ZeroInBox(const std::string& what)
      : Error(ErrorCode::Generic, "reciprocal of a box that may contain 0: " + what) {}
};

struct ZeroLeadingCoefficient : Error {
  ZeroLeadingCoefficient() : Error(ErrorCode::Generic, "leading coefficient is zero") {}
};

struct LeadingCoefficientTooSmall : Error {
  explicit LeadingCoefficientTooSmall(const std::string& what)
      : Error(ErrorCode::Generic, "leading coefficient too small to normalize: " + what) {}
};

struct NonPositiveDiscriminant : Error {
  NonPositiveDiscriminant() : Error(ErrorCode::Generic, "discriminant magnitude must be positive") {}
};

struct UnknownFormula : Error {
  explicit UnknownFormula(const std::string& name)
      : Error(ErrorCode::Generic, "unknown precision formula: " + name) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what)
      : Error(ErrorCode::Generic, "dimension mismatch: " + what) {}
};

struct DuplicateNodes : Error {
  explicit DuplicateNodes(const std::string& what)
      : Error(ErrorCode::Generic, "nodes not distinct: " + what) {}
};

struct CoincidentNodes : Error {
  explicit CoincidentNodes(const std::string& what)
      : Error(ErrorCode::Generic, "node sets too close: " + what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

}  // namespace smat
