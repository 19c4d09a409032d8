#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistorlab {

enum class ErrorCode {
  ZeroDivisor,
  SingularField,
  SingularMoebius,
  DegenerateMap,
  NotNormalized,
  SingularPoint,
  DegenerateFactorization,
  BranchFailure,
  ChartMiss,
  OriginSingular,
  DegenerateEmbedding,
  NoIntersection,
  ChartSingular,
  PoleChart,
  NonNullDirection,
  SingularOnPath,
  NotASolution,
  UnknownSuite,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C API can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twistorlab
