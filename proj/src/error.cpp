#include "twistorlab/error.hpp"

namespace twistorlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::SingularField: return "SingularField";
    case ErrorCode::SingularMoebius: return "SingularMoebius";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::DegenerateFactorization: return "DegenerateFactorization";
    case ErrorCode::BranchFailure: return "BranchFailure";
    case ErrorCode::ChartMiss: return "ChartMiss";
    case ErrorCode::OriginSingular: return "OriginSingular";
    case ErrorCode::DegenerateEmbedding: return "DegenerateEmbedding";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::ChartSingular: return "ChartSingular";
    case ErrorCode::PoleChart: return "PoleChart";
    case ErrorCode::NonNullDirection: return "NonNullDirection";
    case ErrorCode::SingularOnPath: return "SingularOnPath";
    case ErrorCode::NotASolution: return "NotASolution";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace twistorlab
