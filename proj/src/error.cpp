#include "uvc/error.hpp"

namespace uvc {

std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NonIntegerLeastEigenvalue: return "NonIntegerLeastEigenvalue";
    case ErrorCode::NotOneWalkRegular: return "NotOneWalkRegular";
    case ErrorCode::RatioMismatch: return "RatioMismatch";
    case ErrorCode::DegenerateRange: return "DegenerateRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

} // namespace uvc
