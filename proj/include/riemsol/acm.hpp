#pragma once

#include <optional>

#include "riemsol/curvature.hpp"
#include "riemsol/operators.hpp"
#include "riemsol/report.hpp"

namespace riemsol {

/// Almost contact metric structure (phi, xi, eta) on a frame manifold.
/// phi uses the column convention; eta holds the covector components
/// eta_i = eta(e_i) and defaults to the metric dual of xi.
struct AcmStructure {
    Mat3 phi;
    Vec3 xi;
    Vec3 eta;
    bool eta_supplied = false;

    Rational eta_of(const Vec3& v) const {
        return eta[0] * v[0] + eta[1] * v[1] + eta[2] * v[2];
    }
};

AcmStructure make_acm_structure(const FrameManifold& m, const Mat3& phi, const Vec3& xi,
                                const std::optional<Vec3>& eta = std::nullopt);

/// Residuals of the structure axioms: phi^2 = -id + eta (x) xi, phi xi = 0,
/// eta o phi = 0, eta(xi) = 1, the compatibility g(phi E, phi F) =
/// g(E,F) - eta(E) eta(F), the metric duality eta = g(., xi), and
/// antisymmetry of the fundamental form Phi(E,F) = g(E, phi F).
CheckReport validate_acm(const FrameManifold& m, const AcmStructure& s);

/// Fundamental 2-form Phi(e_i, e_j) = g(e_i, phi e_j) as a (0,2) tensor.
Tensor fundamental_two_form(const FrameManifold& m, const AcmStructure& s);

/// Nijenhuis torsion [phi,phi](e_i, e_j) =
/// phi^2 [e_i,e_j] + [phi e_i, phi e_j] - phi[phi e_i, e_j] - phi[e_i, phi e_j].
Vec3 nijenhuis(const FrameManifold& m, const AcmStructure& s, int i, int j);

/// Normality residual [phi,phi] + 2 d eta (x) xi per frame pair.
CheckReport normality_check(const FrameManifold& m, const AcmStructure& s);

struct AlphaBetaReport {
    Rational alpha;  ///< 1/2 div xi
    Rational beta;   ///< 1/2 tr(phi nabla xi)
    std::array<Vec3, 3> b2_residual;  ///< nabla_{e_i} xi - alpha[e_i - eta(e_i) xi] + beta phi e_i

    bool b2_holds() const {
        return b2_residual[0].is_zero() && b2_residual[1].is_zero() && b2_residual[2].is_zero();
    }
};

AlphaBetaReport alpha_beta(const FrameManifold& m, const Connection& conn,
                           const AcmStructure& s);

/// Exact residuals of the covariant-derivative and curvature identities of a
/// normal structure with constant alpha, beta (all scalar-derivative terms
/// are zero in this model): b1, b3, b4, b5, b6, b7, b9 and the Lie-derivative
/// identity n2. One entry per identity; the residual column is the max-abs
/// over all frame index combinations.
CheckReport structural_identities(const FrameManifold& m, const Connection& conn,
                                  const CurvaturePackage& pkg, const AcmStructure& s,
                                  const AlphaBetaReport& ab);

struct ClassificationReport {
    bool is_normal = false;
    bool is_quasi_sasakian = false;  ///< alpha = 0
    bool is_cosymplectic = false;    ///< alpha = beta = 0
    bool is_alpha_kenmotsu = false;  ///< beta = 0, alpha != 0
    bool is_beta_sasakian = false;   ///< alpha = 0, beta != 0
    bool is_einstein = false;
    bool is_eta_einstein = false;    ///< S = a g + b eta (x) eta solvable exactly
    Rational eta_einstein_a;         ///< valid when is_eta_einstein
    Rational eta_einstein_b;
    std::optional<Rational> constant_curvature;
    Rational eta_wedge_deta;         ///< (eta ^ d eta)(e1, e2, e3)
};

ClassificationReport classify(const FrameManifold& m, const Connection& conn,
                              const CurvaturePackage& pkg, const AcmStructure& s,
                              const AlphaBetaReport& ab);

/// (g1): (nabla_E Q) xi = -{r/2 + 3(alpha^2-beta^2)}[alpha(E - eta(E) xi) - beta phi E]
/// per direction, plus the scalar constraint (g7) alpha{r/2 + 3(alpha^2-beta^2)} = 0;
/// (gl4) reduces to (g7) because r is constant (xi r = 0) and is reported too.
CheckReport lemma_5_checks(const FrameManifold& m, const Connection& conn,
                           const CurvaturePackage& pkg, const AcmStructure& s,
                           const AlphaBetaReport& ab);

} // namespace riemsol
