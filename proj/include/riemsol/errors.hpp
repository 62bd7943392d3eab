#pragma once

#include <stdexcept>
#include <string>

namespace riemsol {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Frame index outside 1..3 (or i == j in a bracket declaration).
struct BadIndexError : Error {
    using Error::Error;
};

/// The same unordered bracket pair was declared twice.
struct DuplicateBracketError : Error {
    using Error::Error;
};

/// Structure constants fail the Jacobi identity.
struct JacobiViolationError : Error {
    using Error::Error;
};

/// Supplied metric is not symmetric positive definite.
struct MetricNotSpdError : Error {
    using Error::Error;
};

/// Contraction slot out of range or repeated.
struct BadSlotError : Error {
    using Error::Error;
};

/// Tensor valence does not match what the operation requires.
struct BadValenceError : Error {
    using Error::Error;
};

/// A symmetric bilinear form was required but the input is not symmetric.
struct NotSymmetricError : Error {
    using Error::Error;
};

/// Sectional curvature requested for linearly dependent vectors.
struct DegeneratePlaneError : Error {
    using Error::Error;
};

/// String does not match the rational literal grammar, or denominator is zero.
struct RationalFormatError : Error {
    using Error::Error;
};

/// Manifest text is not valid JSON.
struct ParseError : Error {
    ParseError(const std::string& what, int line_, int column_)
        : Error(what), line(line_), column(column_) {}
    int line = 0;
    int column = 0;
};

/// Manifest JSON is well formed but violates the manifest schema.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace riemsol
