#ifndef HILBINT_ERRORS_HPP
#define HILBINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hilbint {

// Base class for all library errors. Every throw carries a message naming
// the offending value, so CLI surfaces actionable diagnostics.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPositiveArgument : Error {
    explicit NonPositiveArgument(const std::string& msg) : Error(msg) {}
};

struct NonPositiveParameter : Error {
    explicit NonPositiveParameter(const std::string& msg) : Error(msg) {}
};

struct QuadratureNonConvergence : Error {
    explicit QuadratureNonConvergence(const std::string& msg) : Error(msg) {}
};

struct EmptyGrid : Error {
    explicit EmptyGrid(const std::string& msg) : Error(msg) {}
};

struct InsufficientGrid : Error {
    explicit InsufficientGrid(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct PowerIterationStall : Error {
    explicit PowerIterationStall(const std::string& msg) : Error(msg) {}
};

struct UnboundedRatio : Error {
    explicit UnboundedRatio(const std::string& msg) : Error(msg) {}
};

struct NoCommonLowerBound : Error {
    explicit NoCommonLowerBound(const std::string& msg) : Error(msg) {}
};

struct OrderViolation : Error {
    explicit OrderViolation(const std::string& msg) : Error(msg) {}
};

struct HypothesisViolation : Error {
    explicit HypothesisViolation(const std::string& msg) : Error(msg) {}
};

struct ResolutionTooLow : Error {
    explicit ResolutionTooLow(const std::string& msg) : Error(msg) {}
};

struct SupportLeak : Error {
    explicit SupportLeak(const std::string& msg) : Error(msg) {}
};

struct GridUnderResolved : Error {
    explicit GridUnderResolved(const std::string& msg) : Error(msg) {}
};

struct ExpressionParseError : Error {
    explicit ExpressionParseError(const std::string& msg) : Error(msg) {}
};

struct ConfigParseError : Error {
    explicit ConfigParseError(const std::string& msg) : Error(msg) {}
};

struct DeserializationError : Error {
    explicit DeserializationError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

} // namespace hilbint

#endif
