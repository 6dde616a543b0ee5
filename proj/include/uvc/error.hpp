#ifndef UVC_ERROR_HPP
#define UVC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace uvc {

enum class ErrorCode {
    MalformedGraph6,
    DimensionMismatch,
    NotSquare,
    EndpointIsRoot,
    InvalidArgument,
    SizeBudgetExceeded,
    BadParity,
    OutOfRange,
    NotPrime,
    EmptyGraph,
    NotRegular,
    NotConnected,
    NonIntegerLeastEigenvalue,
    NotOneWalkRegular,
    RatioMismatch,
    DegenerateRange,
    BudgetExceeded,
};

/// Machine-readable name of an error code, e.g. "MalformedGraph6".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace uvc

#endif // UVC_ERROR_HPP
