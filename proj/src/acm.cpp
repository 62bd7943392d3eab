#include "riemsol/acm.hpp"

namespace riemsol {

namespace {

Vec3 column(const Mat3& a, int j) {
    Vec3 out;
    for (int i = 0; i < kDim; ++i) out[i] = a.at(i, j);
    return out;
}

Tensor eta_as_tensor(const AcmStructure& s) {
    Tensor t({Variance::Covariant});
    for (int i = 0; i < kDim; ++i) t.at(i) = s.eta[i];
    return t;
}

} // namespace

AcmStructure make_acm_structure(const FrameManifold& m, const Mat3& phi, const Vec3& xi,
                                const std::optional<Vec3>& eta) {
    AcmStructure s;
    s.phi = phi;
    s.xi = xi;
    s.eta_supplied = eta.has_value();
    s.eta = eta.value_or(m.flat(xi));
    return s;
}

CheckReport validate_acm(const FrameManifold& m, const AcmStructure& s) {
    CheckReport report;

    Mat3 xi_eta; // (xi (x) eta)(e_j) = eta_j xi
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) xi_eta.at(i, j) = s.xi[i] * s.eta[j];
    report.add_residual("acm.a1.phi_square", "a1", s.phi * s.phi + Mat3::identity() - xi_eta,
                        "phi^2 = -id + eta (x) xi");

    report.add_residual("acm.a1.phi_xi", "a1", s.phi * s.xi, "phi(xi) = 0");

    Vec3 eta_phi;
    for (int j = 0; j < kDim; ++j) {
        Rational sum = 0;
        for (int i = 0; i < kDim; ++i) sum += s.eta[i] * s.phi.at(i, j);
        eta_phi[j] = sum;
    }
    report.add_residual("acm.a1.eta_phi", "a1", eta_phi, "eta o phi = 0");

    report.add_residual("acm.a1.eta_xi", "a1", s.eta_of(s.xi) - 1, "eta(xi) = 1");

    Mat3 compat;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            compat.at(i, j) = m.inner(column(s.phi, i), column(s.phi, j)) -
                              m.inner(Vec3::basis(i), Vec3::basis(j)) + s.eta[i] * s.eta[j];
        }
    report.add_residual("acm.a5.compatibility", "a5", compat,
                        "g(phi E, phi F) = g(E,F) - eta(E) eta(F)");

    report.add_residual("acm.a6.eta_dual", "a6", s.eta - m.flat(s.xi), "eta = g(., xi)");

    const Mat3 fundamental = fundamental_two_form(m, s).as_matrix();
    report.add_residual("acm.a7.fundamental_antisym", "a7",
                        fundamental + fundamental.transpose(),
                        "Phi(E,F) = g(E, phi F) is antisymmetric");
    return report;
}

Tensor fundamental_two_form(const FrameManifold& m, const AcmStructure& s) {
    Tensor t({Variance::Covariant, Variance::Covariant});
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) t.at(i, j) = m.inner(Vec3::basis(i), column(s.phi, j));
    return t;
}

Vec3 nijenhuis(const FrameManifold& m, const AcmStructure& s, int i, int j) {
    const Vec3 ei = Vec3::basis(i);
    const Vec3 ej = Vec3::basis(j);
    const Vec3 phi_ei = s.phi * ei;
    const Vec3 phi_ej = s.phi * ej;
    return s.phi * (s.phi * m.bracket(ei, ej)) + m.bracket(phi_ei, phi_ej) -
           s.phi * m.bracket(phi_ei, ej) - s.phi * m.bracket(ei, phi_ej);
}

CheckReport normality_check(const FrameManifold& m, const AcmStructure& s) {
    CheckReport report;
    const Tensor deta = exterior_derivative_1form(m, eta_as_tensor(s));
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j) {
            const Vec3 residual = nijenhuis(m, s, i, j) + (2 * deta.at(i, j)) * s.xi;
            report.add_residual(
                "acm.a3.normality.e" + std::to_string(i + 1) + std::to_string(j + 1), "a3",
                residual,
                "[phi,phi](e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                    ") + 2 d eta(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                    ") xi = 0");
        }
    return report;
}

AlphaBetaReport alpha_beta(const FrameManifold& m, const Connection& conn,
                           const AcmStructure& s) {
    AlphaBetaReport out;
    out.alpha = divergence(m, conn, s.xi) / 2;

    Rational tr_phi_nabla = 0;
    for (int i = 0; i < kDim; ++i) tr_phi_nabla += (s.phi * conn.derivative(i, s.xi))[i];
    out.beta = tr_phi_nabla / 2;

    for (int i = 0; i < kDim; ++i) {
        const Vec3 e = Vec3::basis(i);
        out.b2_residual[static_cast<size_t>(i)] =
            conn.derivative(i, s.xi) - out.alpha * (e - s.eta[i] * s.xi) +
            out.beta * (s.phi * e);
    }
    return out;
}

CheckReport structural_identities(const FrameManifold& m, const Connection& conn,
                                  const CurvaturePackage& pkg, const AcmStructure& s,
                                  const AlphaBetaReport& ab) {
    CheckReport report;
    const Rational& alpha = ab.alpha;
    const Rational& beta = ab.beta;
    const Rational a2b2 = alpha * alpha - beta * beta;

    std::array<Mat3, 3> nabla_phi;
    std::array<Vec3, 3> nabla_xi;
    for (int i = 0; i < kDim; ++i) {
        nabla_phi[static_cast<size_t>(i)] =
            covariant_derivative_operator(m, conn, s.phi, Vec3::basis(i));
        nabla_xi[static_cast<size_t>(i)] = conn.derivative(i, s.xi);
    }

    // (b1), repaired reading: (nabla_E phi)(F) = g(phi nabla_E xi, F) xi - eta(F) phi nabla_E xi.
    Tensor b1({Variance::Covariant, Variance::Covariant, Variance::Contravariant});
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Vec3 phi_nabla_xi = s.phi * nabla_xi[static_cast<size_t>(i)];
            const Vec3 res = column(nabla_phi[static_cast<size_t>(i)], j) -
                             m.inner(phi_nabla_xi, Vec3::basis(j)) * s.xi +
                             s.eta[j] * phi_nabla_xi;
            for (int l = 0; l < kDim; ++l) b1.at(i, j, l) = res[l];
        }
    report.add_residual("identity.b1", "b1",
                        b1, "(nabla_E phi)(F) = g(phi nabla_E xi, F) xi - eta(F) phi nabla_E xi");

    // (b3): (nabla_E phi)(F) = alpha[g(phi E,F) xi - eta(F) phi E] + beta[g(E,F) xi - eta(F) E].
    Tensor b3({Variance::Covariant, Variance::Covariant, Variance::Contravariant});
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Vec3 ei = Vec3::basis(i);
            const Vec3 ej = Vec3::basis(j);
            const Vec3 phi_ei = s.phi * ei;
            const Vec3 res =
                column(nabla_phi[static_cast<size_t>(i)], j) -
                alpha * (m.inner(phi_ei, ej) * s.xi - s.eta[j] * phi_ei) -
                beta * (m.inner(ei, ej) * s.xi - s.eta[j] * ei);
            for (int l = 0; l < kDim; ++l) b3.at(i, j, l) = res[l];
        }
    report.add_residual("identity.b3", "b3",
                        b3, "(nabla_E phi)(F) = alpha[g(phi E,F) xi - eta(F) phi E] + beta[g(E,F) xi - eta(F) E]");

    // (b4) with constant alpha, beta:
    // R(E,F)xi = (a^2-b^2)[eta(F) phi^2 E - eta(E) phi^2 F] + 2ab[eta(F) phi E - eta(E) phi F].
    Tensor b4({Variance::Covariant, Variance::Covariant, Variance::Contravariant});
    const Mat3 phi2 = s.phi * s.phi;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Vec3 ei = Vec3::basis(i);
            const Vec3 ej = Vec3::basis(j);
            const Vec3 res = pkg.riemann(ei, ej, s.xi) -
                             a2b2 * (s.eta[j] * (phi2 * ei) - s.eta[i] * (phi2 * ej)) -
                             (2 * alpha * beta) * (s.eta[j] * (s.phi * ei) - s.eta[i] * (s.phi * ej));
            for (int l = 0; l < kDim; ++l) b4.at(i, j, l) = res[l];
        }
    report.add_residual("identity.b4", "b4",
                        b4, "R(E,F)xi = (alpha^2-beta^2)[eta(F) phi^2 E - eta(E) phi^2 F] + 2 alpha beta [eta(F) phi E - eta(E) phi F]");

    // (b5): S(E, xi) = -2(alpha^2-beta^2) eta(E).
    Vec3 b5;
    for (int i = 0; i < kDim; ++i) {
        Rational s_e_xi = 0;
        for (int k = 0; k < kDim; ++k) s_e_xi += pkg.ricci.at(i, k) * s.xi[k];
        b5[i] = s_e_xi + 2 * a2b2 * s.eta[i];
    }
    report.add_residual("identity.b5", "b5", b5, "S(E, xi) = -2(alpha^2-beta^2) eta(E)");

    report.add_residual("identity.b6", "b6", Rational(2 * alpha * beta),
                        "xi beta + 2 alpha beta = 0 (xi beta = 0 here)");

    // (b7): (nabla_E eta)(F) = alpha g(phi E, phi F) - beta g(phi E, F).
    Mat3 b7;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Rational nabla_eta = 0; // (nabla_{e_i} eta)(e_j) = -eta(nabla_{e_i} e_j)
            for (int k = 0; k < kDim; ++k) nabla_eta -= s.eta[k] * conn.gamma(i, j, k);
            const Vec3 phi_ei = s.phi * Vec3::basis(i);
            b7.at(i, j) = nabla_eta - alpha * m.inner(phi_ei, s.phi * Vec3::basis(j)) +
                          beta * m.inner(phi_ei, Vec3::basis(j));
        }
    report.add_residual("identity.b7", "b7", b7,
                        "(nabla_E eta)(F) = alpha g(phi E, phi F) - beta g(phi E, F)");

    // (b9): S(E,F) = (r/2 + alpha^2-beta^2) g(phi E, phi F) - 2(alpha^2-beta^2) eta(E) eta(F).
    Mat3 b9;
    const Rational coeff = pkg.scalar / 2 + a2b2;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            b9.at(i, j) = pkg.ricci.at(i, j) -
                          coeff * m.inner(s.phi * Vec3::basis(i), s.phi * Vec3::basis(j)) +
                          2 * a2b2 * s.eta[i] * s.eta[j];
        }
    report.add_residual("identity.b9", "b9", b9,
                        "S(E,F) = (r/2 + alpha^2-beta^2) g(phi E, phi F) - 2(alpha^2-beta^2) eta(E) eta(F)");

    // (n2): L_xi g = 2 alpha (g - eta (x) eta).
    Tensor n2 = lie_derivative_metric(m, conn, s.xi);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            n2.at(i, j) -= 2 * alpha * (m.metric().at(i, j) - s.eta[i] * s.eta[j]);
        }
    report.add_residual("identity.n2", "n2", n2, "L_xi g = 2 alpha (g - eta (x) eta)");

    return report;
}

namespace {

/// Exact solve of S = a g + b eta (x) eta over the 6 symmetric components.
/// Returns (a, b) when consistent.
std::optional<std::pair<Rational, Rational>> solve_eta_einstein(const FrameManifold& m,
                                                                const Tensor& ricci,
                                                                const Vec3& eta) {
    struct Row {
        Rational g, h, s;
    };
    std::vector<Row> rows;
    for (int i = 0; i < kDim; ++i)
        for (int j = i; j < kDim; ++j) {
            rows.push_back({m.metric().at(i, j), eta[i] * eta[j], ricci.at(i, j)});
        }

    auto consistent = [&](const Rational& a, const Rational& b) {
        for (const Row& row : rows) {
            if (a * row.g + b * row.h != row.s) return false;
        }
        return true;
    };

    for (size_t p = 0; p < rows.size(); ++p)
        for (size_t q = p + 1; q < rows.size(); ++q) {
            const Rational det = rows[p].g * rows[q].h - rows[q].g * rows[p].h;
            if (det == 0) continue;
            const Rational a = (rows[p].s * rows[q].h - rows[q].s * rows[p].h) / det;
            const Rational b = (rows[p].g * rows[q].s - rows[q].g * rows[p].s) / det;
            if (consistent(a, b)) return std::make_pair(a, b);
            return std::nullopt;
        }

    // eta (x) eta is proportional to no SPD metric unless eta = 0, so at this
    // point the h column vanishes and only S = a g remains; g_11 > 0 always.
    const Rational a = rows[0].s / rows[0].g;
    if (consistent(a, Rational(0))) return std::make_pair(a, Rational(0));
    return std::nullopt;
}

} // namespace

ClassificationReport classify(const FrameManifold& m, const Connection& conn,
                              const CurvaturePackage& pkg, const AcmStructure& s,
                              const AlphaBetaReport& ab) {
    (void)conn;
    ClassificationReport out;
    out.is_normal = normality_check(m, s).all_passed();
    out.is_quasi_sasakian = ab.alpha == 0;
    out.is_cosymplectic = ab.alpha == 0 && ab.beta == 0;
    out.is_alpha_kenmotsu = ab.beta == 0 && ab.alpha != 0;
    out.is_beta_sasakian = ab.alpha == 0 && ab.beta != 0;

    Tensor einstein_res = pkg.ricci;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            einstein_res.at(i, j) -= (pkg.scalar / 3) * m.metric().at(i, j);
    out.is_einstein = einstein_res.is_zero();

    if (auto ab_pair = solve_eta_einstein(m, pkg.ricci, s.eta)) {
        out.is_eta_einstein = true;
        out.eta_einstein_a = ab_pair->first;
        out.eta_einstein_b = ab_pair->second;
    }

    out.constant_curvature = constant_curvature_coefficient(pkg, m);

    Tensor eta_t({Variance::Covariant});
    for (int i = 0; i < kDim; ++i) eta_t.at(i) = s.eta[i];
    const Tensor deta = exterior_derivative_1form(m, eta_t);
    out.eta_wedge_deta = s.eta[0] * deta.at(1, 2) - s.eta[1] * deta.at(0, 2) +
                         s.eta[2] * deta.at(0, 1);
    return out;
}

CheckReport lemma_5_checks(const FrameManifold& m, const Connection& conn,
                           const CurvaturePackage& pkg, const AcmStructure& s,
                           const AlphaBetaReport& ab) {
    CheckReport report;
    const Rational a2b2 = ab.alpha * ab.alpha - ab.beta * ab.beta;
    const Rational factor = pkg.scalar / 2 + 3 * a2b2;

    Mat3 g1; // column i = residual of (g1) in direction e_i
    for (int i = 0; i < kDim; ++i) {
        const Vec3 e = Vec3::basis(i);
        const Mat3 nabla_q = covariant_derivative_operator(m, conn, pkg.ricci_operator, e);
        const Vec3 res =
            nabla_q * s.xi + factor * (ab.alpha * (e - s.eta[i] * s.xi) - ab.beta * (s.phi * e));
        for (int l = 0; l < kDim; ++l) g1.at(l, i) = res[l];
    }
    report.add_residual("lemma5.g1", "g1", g1,
                        "(nabla_E Q)xi = -{r/2 + 3(alpha^2-beta^2)}[alpha(E - eta(E)xi) - beta phi E]");

    // r is constant, so xi r = 0 and (gl4) reduces to 4 alpha {r/2 + 3(alpha^2-beta^2)} = 0.
    report.add_residual("lemma5.gl4", "gl4", Rational(4 * ab.alpha * factor),
                        "xi r = -4 alpha {r/2 + 3(alpha^2-beta^2)} with xi r = 0");
    report.add_residual("lemma5.g7", "g7", Rational(ab.alpha * factor),
                        "alpha {r/2 + 3(alpha^2-beta^2)} = 0");
    return report;
}

} // namespace riemsol
