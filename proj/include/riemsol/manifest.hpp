#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riemsol/frame_manifold.hpp"

namespace riemsol {

struct AcmSpec {
    Vec3 xi;
    Mat3 phi;  ///< column j = components of phi(e_{j+1})
    std::optional<Vec3> eta;
};

struct SolitonSpec {
    std::string name;
    Vec3 potential;
    Rational lambda;
};

struct GradientSolitonSpec {
    std::string name;
    Vec3 potential_gradient;
    Rational lambda;
};

struct CollinearSpec {
    std::string name;
    Rational c;
    Rational lambda;
};

/// Fully validated manifest. Rationals are exact; no floating point crosses
/// this boundary.
struct Manifest {
    int dimension = 3;
    std::vector<BracketInput> brackets;
    std::optional<Mat3> metric;
    std::optional<AcmSpec> acm;
    std::vector<SolitonSpec> solitons;
    std::vector<GradientSolitonSpec> gradient_solitons;
    std::vector<CollinearSpec> collinear_checks;
};

/// Parses and validates a manifest document. Throws ParseError (malformed
/// JSON, with line/column), SchemaError (missing, extra or mistyped fields)
/// or RationalFormatError.
Manifest parse_manifest(std::string_view text);

} // namespace riemsol
