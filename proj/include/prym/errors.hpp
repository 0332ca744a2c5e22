#pragma once

#include <stdexcept>
#include <string>

namespace prym {

/// Base class for every failure with mathematical meaning.  Input/usage
/// problems (bad JSON, bad CLI flags) use ParseError; everything else keeps
/// the name of the violated contract.
struct PrymError : std::runtime_error {
    explicit PrymError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : PrymError {
    explicit DivisionByZero(const std::string& m = "division by zero in F_p") : PrymError(m) {}
};

struct NotAUnit : PrymError {
    explicit NotAUnit(const std::string& m = "dual number with zero constant part has no inverse") : PrymError(m) {}
};

struct IncompatibleVariables : PrymError {
    explicit IncompatibleVariables(const std::string& m = "operands live over different variable sets") : PrymError(m) {}
};

struct NotHomogeneous : PrymError {
    explicit NotHomogeneous(const std::string& m = "polynomial is not homogeneous of the required degree") : PrymError(m) {}
};

struct IncompatibleDegrees : PrymError {
    explicit IncompatibleDegrees(const std::string& m = "forms do not have the required degrees") : PrymError(m) {}
};

struct PositiveDimensional : PrymError {
    explicit PositiveDimensional(const std::string& m = "ideal is not zero-dimensional") : PrymError(m) {}
};

struct NotSingularAtP0 : PrymError {
    explicit NotSingularAtP0(const std::string& m = "quartic is not singular at the marked point") : PrymError(m) {}
};

struct NotOrdinaryNode : PrymError {
    explicit NotOrdinaryNode(const std::string& m = "singular point is not an ordinary node") : PrymError(m) {}
};

struct PointNotOnVariety : PrymError {
    explicit PointNotOnVariety(const std::string& m = "point does not lie on the hypersurface") : PrymError(m) {}
};

struct DegenerateNodes : PrymError {
    explicit DegenerateNodes(const std::string& m = "node configuration is degenerate") : PrymError(m) {}
};

struct UnexpectedKernelDim : PrymError {
    explicit UnexpectedKernelDim(const std::string& m = "quadric kernel has unexpected dimension") : PrymError(m) {}
};

struct UnexpectedTangentDim : PrymError {
    explicit UnexpectedTangentDim(const std::string& m = "tangent space has unexpected dimension") : PrymError(m) {}
};

struct NonGenericPivot : PrymError {
    explicit NonGenericPivot(const std::string& m = "elimination requires a pivot that is not a unit") : PrymError(m) {}
};

struct NoGeneralMemberFound : PrymError {
    explicit NoGeneralMemberFound(const std::string& m = "no sufficiently general member found within the try budget") : PrymError(m) {}
};

struct ParseError : PrymError {
    explicit ParseError(const std::string& m) : PrymError(m) {}
};

}  // namespace prym
