#pragma once

#include <stdexcept>
#include <string>

namespace resum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments or flag combinations.
struct UsageError : Error { using Error::Error; };
// Argument outside the mathematical domain of an operation.
struct DomainError : Error { using Error::Error; };
// A budget (basis size, quadrature nodes, iterations) ran out.
struct ResourceError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
// Data did not have the shape an estimator needs.
struct DiagnosticError : Error { using Error::Error; };
struct SelectionFailure : Error { using Error::Error; };
struct FixedPointFailure : Error { using Error::Error; };
struct FitFailure : Error { using Error::Error; };
struct SolverFailure : Error { using Error::Error; };
struct DegeneracyError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
// Borel-Pade denominator vanishing on the integration path.
struct SummabilityError : Error { using Error::Error; };

}  // namespace resum
