#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Constant term of the operand is not a ring unit.
struct NotInvertibleError : Error {
    using Error::Error;
};

// Operation needs a Laurent polynomial (finite, fully known support) but
// received an order-truncated series.
struct ExactnessError : Error {
    using Error::Error;
};

// Infinite product whose factors do not converge coefficient-wise.
struct DivergentProductError : Error {
    using Error::Error;
};

// Parameters outside the supported set (bad variant, bad identity id, ...).
struct UnsupportedSpecError : Error {
    using Error::Error;
};

// Basis reduction ran out of rewrite budget; carries the partial expression.
struct ReductionFailedError : Error {
    std::string partial;
    ReductionFailedError(const std::string& msg, std::string partial_expr)
        : Error(msg), partial(std::move(partial_expr)) {}
};

// A reflection normalization exponent left negative powers of q behind.
struct WrongNormalizationError : Error {
    using Error::Error;
};

}  // namespace qlab
