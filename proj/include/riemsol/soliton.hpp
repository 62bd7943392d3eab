#pragma once

#include <optional>

#include "riemsol/acm.hpp"
#include "riemsol/curvature.hpp"
#include "riemsol/operators.hpp"
#include "riemsol/report.hpp"

namespace riemsol {

/// Candidate Riemann soliton data (Z, lambda); residuals decide soliton-hood.
struct SolitonInstance {
    Vec3 potential;
    Rational lambda;
};

/// Candidate gradient soliton data: V stands in for the gradient D(gamma).
struct GradientSolitonInstance {
    Vec3 potential_gradient;
    Rational lambda;
};

enum class SolitonTypeTag { Expanding, Steady, Shrinking };

SolitonTypeTag classify_lambda(const Rational& lambda);
std::string to_string(SolitonTypeTag tag);

/// Residual of the Riemann soliton equation
/// 2R + lambda (g (x) g) + g (x) (L_Z g), as a (0,4) tensor.
/// Identically zero iff (m, Z, lambda) is a Riemann soliton.
Tensor riemann_soliton_residual(const FrameManifold& m, const Connection& conn,
                                const CurvaturePackage& pkg, const SolitonInstance& inst);

/// The unique lambda making riemann_soliton_residual vanish, if one exists.
std::optional<Rational> solve_lambda(const FrameManifold& m, const Connection& conn,
                                     const CurvaturePackage& pkg, const Vec3& z);

/// Residual of the contracted form: L_Z g + 2S + (4 lambda + 2 div Z) g.
Tensor ricci_soliton_residual(const FrameManifold& m, const Connection& conn,
                              const CurvaturePackage& pkg, const SolitonInstance& inst);

/// Asserts that contracting the Riemann soliton residual over its first and
/// last slots equals the contracted-form residual, for any (Z, lambda).
CheckReport contraction_identity_check(const FrameManifold& m, const Connection& conn,
                                       const CurvaturePackage& pkg,
                                       const SolitonInstance& inst);

/// Integrability identity for Ricci solitons. inst.lambda is the
/// Ricci-normalization lambda': the precondition is L_Z g + 2S + 2 lambda' g = 0
/// (reported as skipped when unmet), and the identity checked is
/// 1/2 ||L_Z g||^2 = dr(Z) + 2 div(-lambda' Z - QZ), with dr(Z) = 0 here.
CheckReport integrability_check(const FrameManifold& m, const Connection& conn,
                                const CurvaturePackage& pkg, const SolitonInstance& inst);

/// Aggregate per-instance soliton facts.
struct SolitonReport {
    Tensor residual_4tensor;
    Tensor residual_ricci;
    std::optional<Rational> solved_lambda;
    SolitonTypeTag type_tag = SolitonTypeTag::Steady;

    SolitonReport()
        : residual_4tensor({Variance::Covariant, Variance::Covariant, Variance::Covariant,
                            Variance::Covariant}),
          residual_ricci({Variance::Covariant, Variance::Covariant}) {}
};

SolitonReport soliton_report(const FrameManifold& m, const Connection& conn,
                             const CurvaturePackage& pkg, const SolitonInstance& inst);

struct GradientArsReport {
    bool closed = false;       ///< d(V flat) = 0
    Tensor residual_aa2;       ///< 2R + lambda (g (x) g) + g (x) Hess
    Tensor residual_gl12;      ///< R(E,F)V - (nabla_F Q)E + (nabla_E Q)F per pair
    Rational laplacian;        ///< div V
    bool dichotomy_alpha_zero = false;
    bool dichotomy_constant_curvature = false;  ///< r = -6(alpha^2 - beta^2)

    GradientArsReport()
        : residual_aa2({Variance::Covariant, Variance::Covariant, Variance::Covariant,
                        Variance::Covariant}),
          residual_gl12({Variance::Covariant, Variance::Covariant, Variance::Contravariant}) {}
};

/// Gradient almost-Riemann-soliton verification: closedness of V flat, the
/// gradient soliton equation with the Hessian in place of 1/2 L_V g, the
/// curvature-vs-Ricci-operator identity (constant scalar bracket dropped),
/// and the two sides of the dichotomy (quasi-Sasakian or constant curvature
/// -(alpha^2-beta^2)).
GradientArsReport gradient_ars_check(const FrameManifold& m, const Connection& conn,
                                     const CurvaturePackage& pkg, const AlphaBetaReport& ab,
                                     const GradientSolitonInstance& ginst);

struct Theorem31Verdicts {
    bool h1_riemann_soliton = false;   ///< riemann residual = 0
    bool h2_divergence_free = false;   ///< div Z = 0
    bool c1_quasi_sasakian = false;    ///< alpha = 0
    bool c2_constant_curvature = false; ///< constant curvature = -lambda
    /// Derived facts, evaluated only when both hypotheses hold.
    std::optional<bool> scalar_fact;          ///< r = -6 lambda
    std::optional<bool> ricci_operator_fact;  ///< Q xi = -2 lambda xi
};

/// Truth table for the divergence-free Riemann soliton theorem; never
/// asserts the implication itself.
Theorem31Verdicts theorem_31_check(const FrameManifold& m, const Connection& conn,
                                   const CurvaturePackage& pkg, const AcmStructure& s,
                                   const AlphaBetaReport& ab, const SolitonInstance& inst);

struct Theorem42Report {
    Rational c;
    Rational div_z;
    bool div_matches_2_alpha_c = false;
    Rational lambda_star;      ///< (alpha^2 - beta^2) - div Z
    Rational supplied_lambda;
    bool lambda_matches = false;
    bool residual_vanishes = false;  ///< riemann residual at (c xi, lambda_star)
};

/// Collinear-potential consistency facts for Z = c xi.
Theorem42Report theorem_42_check(const FrameManifold& m, const Connection& conn,
                                 const CurvaturePackage& pkg, const AcmStructure& s,
                                 const AlphaBetaReport& ab, const Rational& c,
                                 const Rational& lambda);

} // namespace riemsol
