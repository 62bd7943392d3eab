#include "riemsol/suites.hpp"

#include <json.hpp>

#include "riemsol/acm.hpp"
#include "riemsol/connection.hpp"
#include "riemsol/curvature.hpp"
#include "riemsol/errors.hpp"
#include "riemsol/operators.hpp"
#include "riemsol/soliton.hpp"

namespace riemsol {

std::optional<Suite> suite_from_name(std::string_view name) {
    if (name == "validate") return Suite::Validate;
    if (name == "connection") return Suite::Connection;
    if (name == "curvature") return Suite::Curvature;
    if (name == "acm") return Suite::Acm;
    if (name == "classify") return Suite::Classify;
    if (name == "identities") return Suite::Identities;
    if (name == "soliton") return Suite::Soliton;
    if (name == "gradient") return Suite::Gradient;
    if (name == "theorems") return Suite::Theorems;
    if (name == "report" || name == "all") return Suite::All;
    return std::nullopt;
}

std::string suite_name(Suite suite) {
    switch (suite) {
        case Suite::Validate: return "validate";
        case Suite::Connection: return "connection";
        case Suite::Curvature: return "curvature";
        case Suite::Acm: return "acm";
        case Suite::Classify: return "classify";
        case Suite::Identities: return "identities";
        case Suite::Soliton: return "soliton";
        case Suite::Gradient: return "gradient";
        case Suite::Theorems: return "theorems";
        case Suite::All: return "report";
    }
    return "report";
}

bool ReportDocument::passed() const {
    for (const CheckEntry& e : entries) {
        if (e.status == CheckStatus::Fail) return false;
    }
    return true;
}

std::string format_vector(const Vec3& v) {
    std::string out;
    for (int i = 0; i < kDim; ++i) {
        if (v[i] == 0) continue;
        const Rational mag = rational_abs(v[i]);
        if (out.empty()) {
            if (v[i] < 0) out += "-";
        } else {
            out += v[i] < 0 ? " - " : " + ";
        }
        if (mag != 1) out += to_string(mag) + " ";
        out += "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

namespace {

struct Context {
    std::optional<FrameManifold> m;
    std::optional<Connection> conn;
    std::optional<CurvaturePackage> pkg;
    std::optional<AcmStructure> s;
    std::optional<AlphaBetaReport> ab;

    void need_connection() {
        if (!conn) conn = koszul_connection(*m);
    }
    void need_curvature() {
        need_connection();
        if (!pkg) pkg = curvature_package(*m, *conn);
    }
    void need_acm(const Manifest& manifest) {
        if (!s && manifest.acm) {
            s = make_acm_structure(*m, manifest.acm->phi, manifest.acm->xi, manifest.acm->eta);
            need_connection();
            ab = alpha_beta(*m, *conn, *s);
        }
    }
};

bool section_build(const Manifest& manifest, Context& ctx, CheckReport& rep) {
    try {
        ctx.m = FrameManifold::build(manifest.brackets, manifest.metric);
    } catch (const Error& err) {
        rep.add(CheckEntry{"build.construction", "-", CheckStatus::Fail, "-", err.what()});
        return false;
    }
    rep.add_verdict("build.jacobi", "-", true,
                    "structure constants define a Lie algebra (Jacobi identity holds)");
    rep.add_verdict("build.metric_spd", "-", true, "metric is symmetric positive definite");
    return true;
}

void section_connection(Context& ctx, CheckReport& rep) {
    ctx.need_connection();
    const FrameManifold& m = *ctx.m;
    const Connection& conn = *ctx.conn;

    Tensor torsion({Variance::Covariant, Variance::Covariant, Variance::Contravariant});
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Vec3 res = conn.derivative(i, j) - conn.derivative(j, i) - m.bracket(i, j);
            for (int l = 0; l < kDim; ++l) torsion.at(i, j, l) = res[l];
        }
    rep.add_residual("connection.torsion_free", "-", torsion,
                     "nabla_E F - nabla_F E = [E, F] on all frame pairs");

    Tensor compat({Variance::Covariant, Variance::Covariant, Variance::Covariant});
    for (int k = 0; k < kDim; ++k)
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                compat.at(k, i, j) = m.inner(conn.derivative(k, i), Vec3::basis(j)) +
                                     m.inner(Vec3::basis(i), conn.derivative(k, j));
            }
    rep.add_residual("connection.metric_compat", "-", compat,
                     "g(nabla_E F, W) + g(F, nabla_E W) = E g(F,W) = 0 on all frame triples");

    std::string table;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Vec3 d = conn.derivative(i, j);
            if (d.is_zero()) continue;
            if (!table.empty()) table += "; ";
            table += "nabla_e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + " = " +
                     format_vector(d);
        }
    rep.add_info("connection.table", "f5",
                 table.empty() ? "all connection coefficients vanish" : table);
}

void emit_b8(const FrameManifold& m, const CurvaturePackage& pkg, CheckReport& rep) {
    Tensor res({Variance::Covariant, Variance::Covariant, Variance::Covariant,
                Variance::Contravariant});
    const Mat3& g = m.metric();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                Rational s_jk = pkg.ricci.at(j, k);
                Rational s_ik = pkg.ricci.at(i, k);
                const Vec3 rhs = s_jk * Vec3::basis(i) - s_ik * Vec3::basis(j) +
                                 g.at(j, k) * (pkg.ricci_operator * Vec3::basis(i)) -
                                 g.at(i, k) * (pkg.ricci_operator * Vec3::basis(j)) -
                                 (pkg.scalar / 2) *
                                     (g.at(j, k) * Vec3::basis(i) - g.at(i, k) * Vec3::basis(j));
                const Vec3 res_v = pkg.riemann(i, j, k) - rhs;
                for (int l = 0; l < kDim; ++l) res.at(i, j, k, l) = res_v[l];
            }
    rep.add_residual("curvature.b8", "b8",
                     res,
                     "R(E,F)Z = S(F,Z)E - S(E,Z)F + g(F,Z)QE - g(E,Z)QF - (r/2)[g(F,Z)E - g(E,Z)F]");
}

void section_curvature(Context& ctx, CheckReport& rep) {
    ctx.need_curvature();
    const FrameManifold& m = *ctx.m;
    const CurvaturePackage& pkg = *ctx.pkg;
    const Tensor& r4 = pkg.riemann_04;

    Tensor antisym12 = r4;
    Tensor antisym34 = r4;
    Tensor pair_sym = r4;
    Tensor bianchi = r4;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k)
                for (int l = 0; l < kDim; ++l) {
                    antisym12.at(i, j, k, l) = r4.at(i, j, k, l) + r4.at(j, i, k, l);
                    antisym34.at(i, j, k, l) = r4.at(i, j, k, l) + r4.at(i, j, l, k);
                    pair_sym.at(i, j, k, l) = r4.at(i, j, k, l) - r4.at(k, l, i, j);
                    bianchi.at(i, j, k, l) =
                        r4.at(i, j, k, l) + r4.at(j, k, i, l) + r4.at(k, i, j, l);
                }
    rep.add_residual("curvature.symmetry.antisym12", "-", antisym12,
                     "R(E,F,W,X) = -R(F,E,W,X)");
    rep.add_residual("curvature.symmetry.antisym34", "-", antisym34,
                     "R(E,F,W,X) = -R(E,F,X,W)");
    rep.add_residual("curvature.symmetry.pair", "-", pair_sym,
                     "R(E,F,W,X) = R(W,X,E,F)");
    rep.add_residual("curvature.symmetry.bianchi", "-", bianchi,
                     "R(E,F)W + R(F,W)E + R(W,E)F = 0");

    emit_b8(m, pkg, rep);

    rep.add_residual("curvature.ricci_symmetric", "-",
                     pkg.ricci.as_matrix() - pkg.ricci.as_matrix().transpose(),
                     "S(E,F) = S(F,E)");

    std::string table;
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                const Vec3 r = pkg.riemann(i, j, k);
                if (r.is_zero()) continue;
                if (!table.empty()) table += "; ";
                table += "R(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")e" +
                         std::to_string(k + 1) + " = " + format_vector(r);
            }
    rep.add_info("curvature.table", "-",
                 table.empty() ? "curvature tensor vanishes (flat)" : table);
    rep.add_info("curvature.scalar", "-", "scalar curvature r = " + to_string(pkg.scalar));

    const auto k = constant_curvature_coefficient(pkg, m);
    rep.add_info("curvature.constant_sectional", "-",
                 k ? "constant sectional curvature k = " + to_string(*k)
                   : "sectional curvature is not constant");
}

void section_acm_validate(const Manifest& manifest, Context& ctx, CheckReport& rep) {
    if (!manifest.acm) {
        rep.add_skipped("acm.structure", "-", "manifest declares no acm structure");
        return;
    }
    ctx.need_acm(manifest);
    rep.append(validate_acm(*ctx.m, *ctx.s));
}

void section_acm_normality(const Manifest& manifest, Context& ctx, CheckReport& rep) {
    if (!ctx.s) {
        if (!manifest.acm) return;
        ctx.need_acm(manifest);
    }
    rep.append(normality_check(*ctx.m, *ctx.s));

    Tensor b2({Variance::Covariant, Variance::Contravariant});
    for (int i = 0; i < kDim; ++i)
        for (int l = 0; l < kDim; ++l)
            b2.at(i, l) = ctx.ab->b2_residual[static_cast<size_t>(i)][l];
    rep.add_residual("acm.b2", "b2", b2,
                     "nabla_E xi = alpha[E - eta(E) xi] - beta phi E");
    rep.add_info("acm.alpha_beta", "b2",
                 "alpha = " + to_string(ctx.ab->alpha) + ", beta = " + to_string(ctx.ab->beta));
}

void section_classify(const Manifest& manifest, Context& ctx, CheckReport& rep) {
    if (!manifest.acm) {
        rep.add_skipped("classify.structure", "-", "manifest declares no acm structure");
        return;
    }
    ctx.need_curvature();
    ctx.need_acm(manifest);
    const ClassificationReport cls = classify(*ctx.m, *ctx.conn, *ctx.pkg, *ctx.s, *ctx.ab);
    const AlphaBetaReport& ab = *ctx.ab;

    rep.add_info("classify.normal", "a3", cls.is_normal ? "normal" : "not normal");
    std::string type;
    if (cls.is_cosymplectic) {
        type = "cosymplectic (alpha = beta = 0)";
    } else if (cls.is_alpha_kenmotsu) {
        type = "alpha-Kenmotsu (alpha = " + to_string(ab.alpha) + ", beta = 0)";
    } else if (cls.is_beta_sasakian) {
        type = "beta-Sasakian (alpha = 0, beta = " + to_string(ab.beta) + ")";
    } else {
        type = "outside the alpha-Kenmotsu/cosymplectic/beta-Sasakian trichotomy (alpha = " +
               to_string(ab.alpha) + ", beta = " + to_string(ab.beta) + ")";
    }
    rep.add_info("classify.type", "b3", type);
    rep.add_info("classify.quasi_sasakian", "-",
                 cls.is_quasi_sasakian ? "quasi-Sasakian (alpha = 0)"
                                       : "not quasi-Sasakian (alpha = " + to_string(ab.alpha) + ")");
    rep.add_info("classify.einstein", "-", cls.is_einstein ? "Einstein" : "not Einstein");
    rep.add_info("classify.eta_einstein", "b9",
                 cls.is_eta_einstein
                     ? "eta-Einstein: S = a g + b eta (x) eta with a = " +
                           to_string(cls.eta_einstein_a) + ", b = " + to_string(cls.eta_einstein_b)
                     : "not eta-Einstein");
    rep.add_info("classify.constant_curvature", "-",
                 cls.constant_curvature
                     ? "constant sectional curvature k = " + to_string(*cls.constant_curvature)
                     : "sectional curvature is not constant");
    rep.add_info("classify.eta_wedge_deta", "-",
                 "(eta ^ d eta)(e1,e2,e3) = " + to_string(cls.eta_wedge_deta));

    const bool consistent =
        (!cls.is_cosymplectic || (cls.is_quasi_sasakian && !cls.is_alpha_kenmotsu &&
                                  !cls.is_beta_sasakian)) &&
        (!cls.is_beta_sasakian || cls.is_quasi_sasakian) &&
        (!cls.is_alpha_kenmotsu || !cls.is_quasi_sasakian) &&
        (!cls.is_einstein || cls.is_eta_einstein) &&
        (!cls.constant_curvature || cls.is_einstein);
    rep.add_verdict("classify.consistency", "-", consistent,
                    "classification flags are mutually consistent");
}

void section_identities(const Manifest& manifest, Context& ctx, CheckReport& rep,
                        bool include_b8) {
    if (!manifest.acm) {
        rep.add_skipped("identity.structure", "-", "manifest declares no acm structure");
        return;
    }
    ctx.need_curvature();
    ctx.need_acm(manifest);
    if (include_b8) emit_b8(*ctx.m, *ctx.pkg, rep);
    rep.append(structural_identities(*ctx.m, *ctx.conn, *ctx.pkg, *ctx.s, *ctx.ab));

    const Tensor lie = lie_derivative_metric(*ctx.m, *ctx.conn, ctx.s->xi);
    if (lie.is_zero()) {
        rep.add_info("acm.xi_killing", "n2", "xi is a Killing field (L_xi g = 0)");
    } else {
        rep.add_info("acm.xi_killing", "n2",
                     "xi is not a Killing field: max |L_xi g| = " + to_string(lie.max_abs()) +
                         "; consistent with L_xi g = 2 alpha (g - eta (x) eta) at alpha = " +
                         to_string(ctx.ab->alpha));
    }

    rep.append(lemma_5_checks(*ctx.m, *ctx.conn, *ctx.pkg, *ctx.s, *ctx.ab));
}

void section_solitons(const Manifest& manifest, Context& ctx, CheckReport& rep,
                      const SuiteOptions& opts) {
    ctx.need_curvature();
    for (const SolitonSpec& spec : manifest.solitons) {
        if (opts.name_filter && spec.name != *opts.name_filter) continue;
        const std::string prefix = "soliton." + spec.name;
        const SolitonInstance inst{spec.potential, spec.lambda};
        const FrameManifold& m = *ctx.m;
        const Connection& conn = *ctx.conn;
        const CurvaturePackage& pkg = *ctx.pkg;

        const Tensor aa1 = riemann_soliton_residual(m, conn, pkg, inst);
        rep.add_residual(prefix + ".aa1", "aa1", aa1,
                         "2R + lambda (g (x) g) + g (x) L_Z g = 0 with Z = " +
                             format_vector(spec.potential) + ", lambda = " +
                             to_string(spec.lambda));
        const Tensor cc2 = ricci_soliton_residual(m, conn, pkg, inst);
        rep.add_residual(prefix + ".cc2", "cc2", cc2,
                         "L_Z g + 2S + (4 lambda + 2 div Z) g = 0");

        CheckReport contraction = contraction_identity_check(m, conn, pkg, inst);
        for (CheckEntry& e : contraction.entries) e.id = prefix + ".contraction";
        rep.append(contraction);

        const auto solved = solve_lambda(m, conn, pkg, spec.potential);
        rep.add_info(prefix + ".lambda", "-",
                     solved ? "declared lambda = " + to_string(spec.lambda) +
                                  "; unique consistent lambda = " + to_string(*solved)
                            : "declared lambda = " + to_string(spec.lambda) +
                                  "; no lambda makes the residual vanish");
        const SolitonTypeTag tag = classify_lambda(spec.lambda);
        rep.add_info(prefix + ".type", "-",
                     to_string(tag) + " (lambda " +
                         (tag == SolitonTypeTag::Expanding
                              ? "> 0"
                              : tag == SolitonTypeTag::Shrinking ? "< 0" : "= 0") +
                         ")");

        const Rational div_z = divergence(m, conn, spec.potential);
        if (aa1.is_zero() && div_z == 0) {
            Tensor n3 = lie_derivative_metric(m, conn, spec.potential);
            for (int i = 0; i < kDim; ++i)
                for (int j = 0; j < kDim; ++j)
                    n3.at(i, j) += 2 * pkg.ricci.at(i, j) +
                                   4 * spec.lambda * m.metric().at(i, j);
            rep.add_residual(prefix + ".n3", "n3", n3,
                             "divergence-free reduction: L_Z g + 2S + 4 lambda g = 0");
        } else {
            rep.add_skipped(prefix + ".n3", "n3",
                            "requires a Riemann soliton with div Z = 0");
        }

        // Lemma 3.1 needs the Ricci-soliton lambda' = 2 lambda (the contracted
        // equation carries 4 lambda + 2 div Z against the classical 2 lambda').
        CheckReport integ = integrability_check(m, conn, pkg, {spec.potential, 2 * spec.lambda});
        for (CheckEntry& e : integ.entries) e.id = prefix + ".integrability";
        rep.append(integ);
    }
}

void section_gradients(const Manifest& manifest, Context& ctx, CheckReport& rep,
                       const SuiteOptions& opts) {
    ctx.need_curvature();
    ctx.need_acm(manifest);
    for (const GradientSolitonSpec& spec : manifest.gradient_solitons) {
        if (opts.name_filter && spec.name != *opts.name_filter) continue;
        const std::string prefix = "gradient." + spec.name;
        const GradientSolitonInstance ginst{spec.potential_gradient, spec.lambda};
        const AlphaBetaReport ab = ctx.ab.value_or(AlphaBetaReport{});
        const GradientArsReport res = gradient_ars_check(*ctx.m, *ctx.conn, *ctx.pkg, ab, ginst);

        const HessianResult hess = hessian_from_gradient(*ctx.m, *ctx.conn,
                                                         spec.potential_gradient);
        rep.add_residual(prefix + ".closed", "-", hess.d_flat,
                         "d(V flat) = 0: V = " + format_vector(spec.potential_gradient) +
                             " is a gradient field");
        rep.add_residual(prefix + ".aa2", "aa2", res.residual_aa2,
                         "2R + lambda (g (x) g) + g (x) 2 Hess(gamma) = 0 with lambda = " +
                             to_string(spec.lambda));
        rep.add_residual(prefix + ".gl12", "gl12", res.residual_gl12,
                         "R(E,F)V = (nabla_F Q)E - (nabla_E Q)F (constant scalar bracket dropped)");
        rep.add_info(prefix + ".laplacian", "-",
                     "laplacian gamma = div V = " + to_string(res.laplacian));
        if (ctx.ab) {
            std::string detail =
                res.dichotomy_alpha_zero
                    ? "alpha = 0: quasi-Sasakian branch holds"
                    : "alpha = " + to_string(ctx.ab->alpha) + " != 0";
            detail += res.dichotomy_constant_curvature
                          ? "; r = -6(alpha^2-beta^2): constant-curvature branch holds"
                          : "; r != -6(alpha^2-beta^2)";
            rep.add_info(prefix + ".dichotomy", "-", detail);
        } else {
            rep.add_skipped(prefix + ".dichotomy", "-", "requires an acm structure");
        }
    }
}

void section_theorems(const Manifest& manifest, Context& ctx, CheckReport& rep,
                      const SuiteOptions& opts) {
    ctx.need_curvature();
    ctx.need_acm(manifest);
    const bool have_acm = ctx.s.has_value();

    for (const SolitonSpec& spec : manifest.solitons) {
        if (opts.name_filter && spec.name != *opts.name_filter) continue;
        const std::string prefix = "theorem31." + spec.name;
        if (!have_acm) {
            rep.add_skipped(prefix, "-", "requires an acm structure");
            continue;
        }
        const SolitonInstance inst{spec.potential, spec.lambda};
        const Theorem31Verdicts v =
            theorem_31_check(*ctx.m, *ctx.conn, *ctx.pkg, *ctx.s, *ctx.ab, inst);
        rep.add_info(prefix + ".hypotheses", "-",
                     std::string("H1 Riemann soliton: ") +
                         (v.h1_riemann_soliton ? "holds" : "fails") + "; H2 div Z = 0: " +
                         (v.h2_divergence_free ? "holds" : "fails"));
        rep.add_info(prefix + ".conclusions", "-",
                     std::string("C1 quasi-Sasakian: ") +
                         (v.c1_quasi_sasakian ? "holds" : "fails (alpha = " +
                                                              to_string(ctx.ab->alpha) + ")") +
                         "; C2 constant sectional curvature -lambda: " +
                         (v.c2_constant_curvature ? "holds" : "fails"));
        if (v.scalar_fact) {
            rep.add_residual(prefix + ".scalar", "n3",
                             Rational(ctx.pkg->scalar + 6 * spec.lambda), "r = -6 lambda");
        } else {
            rep.add_skipped(prefix + ".scalar", "n3",
                            "requires a Riemann soliton with div Z = 0");
        }
        if (v.ricci_operator_fact) {
            rep.add_residual(prefix + ".q_xi", "n4",
                             ctx.pkg->ricci_operator * ctx.s->xi + (2 * spec.lambda) * ctx.s->xi,
                             "Q xi = -2 lambda xi");
        } else {
            rep.add_skipped(prefix + ".q_xi", "n4",
                            "requires a Riemann soliton with div Z = 0");
        }
    }

    for (const CollinearSpec& spec : manifest.collinear_checks) {
        if (opts.name_filter && spec.name != *opts.name_filter) continue;
        const std::string prefix = "theorem42." + spec.name;
        if (!have_acm) {
            rep.add_skipped(prefix, "-", "requires an acm structure");
            continue;
        }
        const Theorem42Report t =
            theorem_42_check(*ctx.m, *ctx.conn, *ctx.pkg, *ctx.s, *ctx.ab, spec.c, spec.lambda);
        rep.add_residual(prefix + ".div", "-", Rational(t.div_z - 2 * ctx.ab->alpha * spec.c),
                         "div(c xi) = 2 alpha c with c = " + to_string(spec.c));
        rep.add_info(prefix + ".lambda_star", "c9",
                     "lambda* = (alpha^2 - beta^2) - div Z = " + to_string(t.lambda_star) +
                         "; declared lambda = " + to_string(spec.lambda) +
                         (t.lambda_matches ? " (match)" : " (mismatch)"));
        rep.add_info(prefix + ".residual", "c9",
                     t.residual_vanishes
                         ? "Riemann soliton residual at (c xi, lambda*) vanishes"
                         : "Riemann soliton residual at (c xi, lambda*) is nonzero: no Riemann "
                           "soliton with this collinear potential");
    }
}

} // namespace

ReportDocument run_suite(const Manifest& manifest, Suite suite, const SuiteOptions& opts) {
    if (opts.name_filter) {
        bool found = false;
        for (const auto& s : manifest.solitons) found |= s.name == *opts.name_filter;
        for (const auto& s : manifest.gradient_solitons) found |= s.name == *opts.name_filter;
        for (const auto& s : manifest.collinear_checks) found |= s.name == *opts.name_filter;
        if (!found) {
            throw SchemaError("no soliton, gradient soliton or collinear check named \"" +
                              *opts.name_filter + "\"");
        }
    }

    ReportDocument doc;
    doc.suite = suite_name(suite);
    doc.source = opts.source;
    CheckReport rep;
    Context ctx;

    if (section_build(manifest, ctx, rep)) {
        switch (suite) {
            case Suite::Validate:
                section_acm_validate(manifest, ctx, rep);
                break;
            case Suite::Connection:
                section_connection(ctx, rep);
                break;
            case Suite::Curvature:
                section_connection(ctx, rep);
                section_curvature(ctx, rep);
                break;
            case Suite::Acm:
                section_acm_validate(manifest, ctx, rep);
                if (manifest.acm) section_acm_normality(manifest, ctx, rep);
                break;
            case Suite::Classify:
                section_classify(manifest, ctx, rep);
                break;
            case Suite::Identities:
                section_acm_validate(manifest, ctx, rep);
                if (manifest.acm) {
                    section_acm_normality(manifest, ctx, rep);
                    section_identities(manifest, ctx, rep, /*include_b8=*/true);
                }
                break;
            case Suite::Soliton:
                section_solitons(manifest, ctx, rep, opts);
                break;
            case Suite::Gradient:
                section_gradients(manifest, ctx, rep, opts);
                break;
            case Suite::Theorems:
                section_theorems(manifest, ctx, rep, opts);
                break;
            case Suite::All:
                section_acm_validate(manifest, ctx, rep);
                section_connection(ctx, rep);
                section_curvature(ctx, rep);
                if (manifest.acm) {
                    section_acm_normality(manifest, ctx, rep);
                    section_classify(manifest, ctx, rep);
                    section_identities(manifest, ctx, rep, /*include_b8=*/false);
                }
                section_solitons(manifest, ctx, rep, opts);
                section_gradients(manifest, ctx, rep, opts);
                section_theorems(manifest, ctx, rep, opts);
                break;
        }
    }

    doc.entries = std::move(rep.entries);
    return doc;
}

namespace {

void count_statuses(const ReportDocument& doc, int& pass, int& fail, int& skipped, int& info) {
    pass = fail = skipped = info = 0;
    for (const CheckEntry& e : doc.entries) {
        switch (e.status) {
            case CheckStatus::Pass: ++pass; break;
            case CheckStatus::Fail: ++fail; break;
            case CheckStatus::Skipped: ++skipped; break;
            case CheckStatus::Info: ++info; break;
        }
    }
}

} // namespace

std::string report_to_text(const ReportDocument& doc) {
    std::string out = "riemsol " + doc.suite + " @ " + doc.source + "\n";
    for (const CheckEntry& e : doc.entries) {
        std::string line = "  " + to_string(e.status);
        line.append(line.size() < 10 ? 10 - line.size() : 1, ' ');
        line += e.id;
        if (line.size() < 42) line.append(42 - line.size(), ' ');
        line += " [" + e.equation + "]";
        if (line.size() < 50) line.append(50 - line.size(), ' ');
        line += " residual=" + e.residual;
        if (line.size() < 64) line.append(64 - line.size(), ' ');
        line += " " + e.details;
        out += line + "\n";
    }
    int pass = 0, fail = 0, skipped = 0, info = 0;
    count_statuses(doc, pass, fail, skipped, info);
    out += "overall: " + std::string(doc.passed() ? "PASS" : "FAIL") + " (" +
           std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
           std::to_string(skipped) + " skipped, " + std::to_string(info) + " info)\n";
    return out;
}

std::string report_to_json(const ReportDocument& doc) {
    nlohmann::ordered_json root;
    root["tool"] = "riemsol";
    root["suite"] = doc.suite;
    root["source"] = doc.source;
    root["overall"] = doc.passed() ? "pass" : "fail";
    int pass = 0, fail = 0, skipped = 0, info = 0;
    count_statuses(doc, pass, fail, skipped, info);
    root["counts"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"info", info}};
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckEntry& e : doc.entries) {
        nlohmann::ordered_json entry;
        entry["id"] = e.id;
        entry["equation"] = e.equation;
        entry["status"] = to_string(e.status);
        entry["residual"] = e.residual;
        entry["details"] = e.details;
        checks.push_back(std::move(entry));
    }
    root["checks"] = std::move(checks);
    return root.dump(2) + "\n";
}

} // namespace riemsol
