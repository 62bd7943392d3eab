#include "riemsol/soliton.hpp"

namespace riemsol {

SolitonTypeTag classify_lambda(const Rational& lambda) {
    if (lambda > 0) return SolitonTypeTag::Expanding;
    if (lambda < 0) return SolitonTypeTag::Shrinking;
    return SolitonTypeTag::Steady;
}

std::string to_string(SolitonTypeTag tag) {
    switch (tag) {
        case SolitonTypeTag::Expanding: return "expanding";
        case SolitonTypeTag::Steady: return "steady";
        case SolitonTypeTag::Shrinking: return "shrinking";
    }
    return "steady";
}

Tensor riemann_soliton_residual(const FrameManifold& m, const Connection& conn,
                                const CurvaturePackage& pkg, const SolitonInstance& inst) {
    const Tensor g = m.metric_tensor();
    const Tensor lie = lie_derivative_metric(m, conn, inst.potential);
    return 2 * pkg.riemann_04 + inst.lambda * kulkarni_nomizu(g, g) + kulkarni_nomizu(g, lie);
}

std::optional<Rational> solve_lambda(const FrameManifold& m, const Connection& conn,
                                     const CurvaturePackage& pkg, const Vec3& z) {
    // residual(lambda) = base + lambda * gg componentwise; solve each
    // component with gg != 0 and demand global consistency.
    const Tensor gg = kulkarni_nomizu(m.metric_tensor(), m.metric_tensor());
    const Tensor base = riemann_soliton_residual(m, conn, pkg, {z, Rational(0)});
    std::optional<Rational> lambda;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                for (int l = 0; l < kDim; ++l) {
                    if (gg.at(i, j, k, l) == 0) {
                        if (base.at(i, j, k, l) != 0) return std::nullopt;
                        continue;
                    }
                    const Rational candidate = -base.at(i, j, k, l) / gg.at(i, j, k, l);
                    if (!lambda) {
                        lambda = candidate;
                    } else if (*lambda != candidate) {
                        return std::nullopt;
                    }
                }
    return lambda;
}

Tensor ricci_soliton_residual(const FrameManifold& m, const Connection& conn,
                              const CurvaturePackage& pkg, const SolitonInstance& inst) {
    Tensor out = lie_derivative_metric(m, conn, inst.potential);
    const Rational coeff = 4 * inst.lambda + 2 * divergence(m, conn, inst.potential);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            out.at(i, j) += 2 * pkg.ricci.at(i, j) + coeff * m.metric().at(i, j);
        }
    return out;
}

CheckReport contraction_identity_check(const FrameManifold& m, const Connection& conn,
                                       const CurvaturePackage& pkg,
                                       const SolitonInstance& inst) {
    CheckReport report;
    const Tensor contracted =
        contract(riemann_soliton_residual(m, conn, pkg, inst), 0, 3, m);
    const Tensor ricci_form = ricci_soliton_residual(m, conn, pkg, inst);
    report.add_residual("soliton.contraction", "cc2", contracted - ricci_form,
                        "contraction of the Riemann soliton residual over slots (1,4) "
                        "equals the contracted-form residual");
    return report;
}

CheckReport integrability_check(const FrameManifold& m, const Connection& conn,
                                const CurvaturePackage& pkg, const SolitonInstance& inst) {
    CheckReport report;
    const Tensor lie = lie_derivative_metric(m, conn, inst.potential);

    Tensor ricci_soliton = lie;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            ricci_soliton.at(i, j) +=
                2 * pkg.ricci.at(i, j) + 2 * inst.lambda * m.metric().at(i, j);
        }
    if (!ricci_soliton.is_zero()) {
        report.add_skipped("soliton.integrability", "n1",
                           "precondition not met: (Z, lambda' = " + to_string(inst.lambda) +
                               ") is not a Ricci soliton (L_Z g + 2S + 2 lambda' g != 0)");
        return report;
    }

    const Rational lhs = norm_squared(lie, m) / 2;
    // dr(Z) = 0 in the constant model; div(-lambda' Z - QZ) via the connection.
    const Vec3 field = -(inst.lambda * inst.potential) - pkg.ricci_operator * inst.potential;
    const Rational rhs = 2 * divergence(m, conn, field);
    report.add_residual("soliton.integrability", "n1", lhs - rhs,
                        "1/2 ||L_Z g||^2 = dr(Z) + 2 div(-lambda' Z - QZ) with dr(Z) = 0");
    return report;
}

SolitonReport soliton_report(const FrameManifold& m, const Connection& conn,
                             const CurvaturePackage& pkg, const SolitonInstance& inst) {
    SolitonReport out;
    out.residual_4tensor = riemann_soliton_residual(m, conn, pkg, inst);
    out.residual_ricci = ricci_soliton_residual(m, conn, pkg, inst);
    out.solved_lambda = solve_lambda(m, conn, pkg, inst.potential);
    out.type_tag = classify_lambda(inst.lambda);
    return out;
}

GradientArsReport gradient_ars_check(const FrameManifold& m, const Connection& conn,
                                     const CurvaturePackage& pkg, const AlphaBetaReport& ab,
                                     const GradientSolitonInstance& ginst) {
    GradientArsReport out;
    const Vec3& v = ginst.potential_gradient;
    const HessianResult hess = hessian_from_gradient(m, conn, v);
    out.closed = hess.closed;
    out.laplacian = divergence(m, conn, v);

    // (aa2): the gradient form replaces L_Z g by twice the Hessian, so the
    // symmetrized Hessian plays the Lie-derivative role in the KN term.
    Tensor hessian_sym({Variance::Covariant, Variance::Covariant});
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            hessian_sym.at(i, j) = hess.hessian.at(i, j) + hess.hessian.at(j, i);
    const Tensor g = m.metric_tensor();
    out.residual_aa2 =
        2 * pkg.riemann_04 + ginst.lambda * kulkarni_nomizu(g, g) + kulkarni_nomizu(g, hessian_sym);

    for (int i = 0; i < kDim; ++i) {
        const Mat3 nabla_q_i = covariant_derivative_operator(m, conn, pkg.ricci_operator,
                                                             Vec3::basis(i));
        for (int j = 0; j < kDim; ++j) {
            const Mat3 nabla_q_j = covariant_derivative_operator(m, conn, pkg.ricci_operator,
                                                                 Vec3::basis(j));
            const Vec3 res = pkg.riemann(Vec3::basis(i), Vec3::basis(j), v) -
                             nabla_q_j * Vec3::basis(i) + nabla_q_i * Vec3::basis(j);
            for (int l = 0; l < kDim; ++l) out.residual_gl12.at(i, j, l) = res[l];
        }
    }

    out.dichotomy_alpha_zero = ab.alpha == 0;
    const Rational a2b2 = ab.alpha * ab.alpha - ab.beta * ab.beta;
    out.dichotomy_constant_curvature = pkg.scalar == -6 * a2b2;
    return out;
}

Theorem31Verdicts theorem_31_check(const FrameManifold& m, const Connection& conn,
                                   const CurvaturePackage& pkg, const AcmStructure& s,
                                   const AlphaBetaReport& ab, const SolitonInstance& inst) {
    Theorem31Verdicts v;
    v.h1_riemann_soliton = riemann_soliton_residual(m, conn, pkg, inst).is_zero();
    v.h2_divergence_free = divergence(m, conn, inst.potential) == 0;
    v.c1_quasi_sasakian = ab.alpha == 0;
    const auto k = constant_curvature_coefficient(pkg, m);
    v.c2_constant_curvature = k.has_value() && *k == -inst.lambda;
    if (v.h1_riemann_soliton && v.h2_divergence_free) {
        v.scalar_fact = pkg.scalar == -6 * inst.lambda;
        v.ricci_operator_fact =
            (pkg.ricci_operator * s.xi + (2 * inst.lambda) * s.xi).is_zero();
    }
    return v;
}

Theorem42Report theorem_42_check(const FrameManifold& m, const Connection& conn,
                                 const CurvaturePackage& pkg, const AcmStructure& s,
                                 const AlphaBetaReport& ab, const Rational& c,
                                 const Rational& lambda) {
    Theorem42Report out;
    out.c = c;
    out.supplied_lambda = lambda;
    const Vec3 z = c * s.xi;
    out.div_z = divergence(m, conn, z);
    out.div_matches_2_alpha_c = out.div_z == 2 * ab.alpha * c;
    const Rational a2b2 = ab.alpha * ab.alpha - ab.beta * ab.beta;
    out.lambda_star = a2b2 - out.div_z;
    out.lambda_matches = lambda == out.lambda_star;
    out.residual_vanishes =
        riemann_soliton_residual(m, conn, pkg, {z, out.lambda_star}).is_zero();
    return out;
}

} // namespace riemsol
