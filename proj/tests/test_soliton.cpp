#include <doctest.h>

#include "riemsol/errors.hpp"
#include "riemsol/soliton.hpp"
#include "test_support.hpp"

using namespace riemsol;
using namespace riemsol::testing;

TEST_CASE("the soliton constant is recovered from the curvature alone") {
    Instance h(hyp3_manifold());
    CHECK(solve_lambda(h.m, h.conn, h.pkg, Vec3::zero()) == rat(1));

    Instance s(su2_manifold());
    CHECK(solve_lambda(s.m, s.conn, s.pkg, Vec3::zero()) == rat(-1));

    Instance f(flat3_manifold());
    CHECK(solve_lambda(f.m, f.conn, f.pkg, Vec3::zero()) == rat(0));

    // Z = xi on the hyperbolic fixture admits no constant at all
    CHECK_FALSE(solve_lambda(h.m, h.conn, h.pkg, Vec3::basis(2)).has_value());

    // the heisenberg frame is not of constant curvature, so Z = 0 cannot work
    Instance n(heisenberg_manifold());
    CHECK_FALSE(solve_lambda(n.m, n.conn, n.pkg, Vec3::zero()).has_value());
}

TEST_CASE("riemann soliton residuals on the fixtures") {
    Instance h(hyp3_manifold());
    CHECK(riemann_soliton_residual(h.m, h.conn, h.pkg, {Vec3::zero(), rat(1)}).is_zero());

    Tensor off = riemann_soliton_residual(h.m, h.conn, h.pkg, {Vec3::zero(), rat(2)});
    CHECK_FALSE(off.is_zero());
    CHECK(off.max_abs() == rat(2));  // (lambda - 1) * (g kn g) has entries up to 2

    Instance s(su2_manifold());
    CHECK(riemann_soliton_residual(s.m, s.conn, s.pkg, {Vec3::zero(), rat(-1)}).is_zero());

    Instance f(flat3_manifold());
    CHECK(riemann_soliton_residual(f.m, f.conn, f.pkg, {Vec3::zero(), rat(0)}).is_zero());
}

TEST_CASE("contracted soliton residual matches its closed form") {
    Instance h(hyp3_manifold());
    CHECK(ricci_soliton_residual(h.m, h.conn, h.pkg, {Vec3::zero(), rat(1)}).is_zero());

    // L_Z g + 2S + (4 lambda + 2 div Z) g at Z = xi, lambda = 1:
    // diag(-2,-2,0) + diag(-4,-4,-4) + (4 - 4) g = diag(-6,-6,-4)
    Tensor res = ricci_soliton_residual(h.m, h.conn, h.pkg, {Vec3::basis(2), rat(1)});
    CHECK(res.at(0, 0) == rat(-6));
    CHECK(res.at(2, 2) == rat(-4));
    CHECK(res.at(0, 1) == rat(0));
}

TEST_CASE("contracting the soliton residual gives the ricci form for any data") {
    std::mt19937_64 eng(65537);

    auto drive = [&](const Instance& inst, int trials) {
        for (int t = 0; t < trials; ++t) {
            SolitonInstance si{random_vec(eng), random_rational(eng)};
            CheckReport rep = contraction_identity_check(inst.m, inst.conn, inst.pkg, si);
            CHECK(rep.all_passed());

            // independent recomputation with explicit loops
            Tensor full = riemann_soliton_residual(inst.m, inst.conn, inst.pkg, si);
            Mat3 contracted = contract_04_first_last(full, inst.m);
            Tensor lie = lie_derivative_metric(inst.m, inst.conn, si.potential);
            Rational coeff = 4 * si.lambda + 2 * divergence(inst.m, inst.conn, si.potential);
            Mat3 closed_form;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    closed_form.at(i, j) = lie.at(i, j) +
                                           2 * inst.pkg.ricci.at(i, j) +
                                           coeff * inst.m.metric().at(i, j);
            CHECK(contracted == closed_form);
        }
    };

    Instance h(hyp3_manifold());
    drive(h, 100);
    Instance f(flat3_manifold());
    drive(f, 100);
    Instance s(su2_manifold());
    drive(s, 100);

    for (int t = 0; t < 30; ++t) {
        Instance r(random_manifold(eng));
        drive(r, 3);
    }
}

TEST_CASE("integrability identity for ricci solitons") {
    // Z = 0 is a Ricci soliton on the hyperbolic fixture with lambda' = 2:
    // 2S + 2 lambda' g = -4g + 4g = 0
    Instance h(hyp3_manifold());
    CheckReport ok = integrability_check(h.m, h.conn, h.pkg, {Vec3::zero(), rat(2)});
    REQUIRE(ok.entries.size() == 1);
    CHECK(ok.entries[0].status == CheckStatus::Pass);
    CHECK(ok.entries[0].equation == "n1");

    Instance s(su2_manifold());
    CheckReport ok2 = integrability_check(s.m, s.conn, s.pkg, {Vec3::zero(), rat(-2)});
    CHECK(ok2.entries[0].status == CheckStatus::Pass);

    // Z = xi cannot satisfy the Ricci soliton precondition on hyp3
    CheckReport skip = integrability_check(h.m, h.conn, h.pkg, {Vec3::basis(2), rat(2)});
    CHECK(skip.entries[0].status == CheckStatus::Skipped);

    // wrong constant: precondition fails even with Z = 0
    CheckReport skip2 = integrability_check(h.m, h.conn, h.pkg, {Vec3::zero(), rat(1)});
    CHECK(skip2.entries[0].status == CheckStatus::Skipped);
}

TEST_CASE("divergence-free potentials reduce the ricci form") {
    // for div Z = 0 the contracted residual is L_Z g + 2S + 4 lambda g;
    // cross-check the reduction against the general form on random data
    std::mt19937_64 eng(29979);
    Instance s(su2_manifold());
    for (int t = 0; t < 25; ++t) {
        Vec3 z = random_vec(eng);
        if (divergence(s.m, s.conn, z) != 0) continue;
        Rational lambda = random_rational(eng);
        Tensor res = ricci_soliton_residual(s.m, s.conn, s.pkg, {z, lambda});
        Tensor lie = lie_derivative_metric(s.m, s.conn, z);
        Tensor reduced = lie + rat(2) * s.pkg.ricci +
                         (4 * lambda) * s.m.metric_tensor();
        CHECK(res == reduced);
    }
}

TEST_CASE("gradient soliton verification") {
    Instance f(flat3_manifold());
    AcmStructure fs = flat3_acm(f.m);
    AlphaBetaReport fab = alpha_beta(f.m, koszul_connection(f.m), fs);
    GradientArsReport fr = gradient_ars_check(f.m, f.conn, f.pkg, fab,
                                              {Vec3::zero(), rat(0)});
    CHECK(fr.closed);
    CHECK(fr.residual_aa2.is_zero());
    CHECK(fr.residual_gl12.is_zero());
    CHECK(fr.laplacian == rat(0));
    CHECK(fr.dichotomy_alpha_zero);
    CHECK(fr.dichotomy_constant_curvature);

    // V = xi on hyp3 is closed but solves no gradient soliton equation
    Instance h(hyp3_manifold());
    AcmStructure hs = hyp3_acm(h.m);
    AlphaBetaReport hab = alpha_beta(h.m, h.conn, hs);
    GradientArsReport hr = gradient_ars_check(h.m, h.conn, h.pkg, hab,
                                              {Vec3::basis(2), rat(1)});
    CHECK(hr.closed);
    CHECK(hr.laplacian == rat(-2));
    CHECK_FALSE(hr.residual_aa2.is_zero());
    CHECK(hr.residual_aa2.max_abs() == rat(4));
    CHECK_FALSE(hr.residual_gl12.is_zero());
    CHECK_FALSE(hr.dichotomy_alpha_zero);
    CHECK(hr.dichotomy_constant_curvature);  // r = -6 = -6(alpha^2 - beta^2)

    // V = xi on su(2) is not closed; its antisymmetric hessian candidate
    // symmetrizes away and the curvature part alone decides the residual
    Instance s(su2_manifold());
    AcmStructure ss = su2_acm(s.m);
    AlphaBetaReport sab = alpha_beta(s.m, s.conn, ss);
    GradientArsReport sr = gradient_ars_check(s.m, s.conn, s.pkg, sab,
                                              {Vec3::basis(2), rat(-1)});
    CHECK_FALSE(sr.closed);
    CHECK(sr.residual_aa2.is_zero());
    CHECK(sr.laplacian == rat(0));

    // with V = 0 the gradient residual coincides with the plain residual,
    // and the curvature identity residual matches its explicit recomputation
    std::mt19937_64 eng(112233);
    for (int t = 0; t < 20; ++t) {
        Instance r(random_manifold(eng));
        Rational lambda = random_rational(eng);
        Vec3 v = random_vec(eng);
        AlphaBetaReport ab;  // alpha, beta unused by the aa2 residual
        GradientArsReport gr = gradient_ars_check(r.m, r.conn, r.pkg, ab,
                                                  {Vec3::zero(), lambda});
        Tensor plain = riemann_soliton_residual(r.m, r.conn, r.pkg,
                                                {Vec3::zero(), lambda});
        CHECK(gr.residual_aa2 == plain);

        GradientArsReport gv = gradient_ars_check(r.m, r.conn, r.pkg, ab, {v, lambda});
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Mat3 dqi = covariant_derivative_operator(r.m, r.conn, r.pkg.ricci_operator,
                                                         Vec3::basis(i));
                Mat3 dqj = covariant_derivative_operator(r.m, r.conn, r.pkg.ricci_operator,
                                                         Vec3::basis(j));
                Vec3 want = r.pkg.riemann(Vec3::basis(i), Vec3::basis(j), v) -
                            dqj * Vec3::basis(i) + dqi * Vec3::basis(j);
                Vec3 got = vec(gv.residual_gl12.at(i, j, 0), gv.residual_gl12.at(i, j, 1),
                               gv.residual_gl12.at(i, j, 2));
                CHECK(got == want);
            }
    }
}

TEST_CASE("divergence-free soliton truth table") {
    Instance h(hyp3_manifold());
    AcmStructure hs = hyp3_acm(h.m);
    AlphaBetaReport hab = alpha_beta(h.m, h.conn, hs);
    Theorem31Verdicts hv = theorem_31_check(h.m, h.conn, h.pkg, hs, hab,
                                            {Vec3::zero(), rat(1)});
    CHECK(hv.h1_riemann_soliton);
    CHECK(hv.h2_divergence_free);
    CHECK_FALSE(hv.c1_quasi_sasakian);
    CHECK(hv.c2_constant_curvature);
    CHECK(hv.scalar_fact == true);
    CHECK(hv.ricci_operator_fact == true);

    Theorem31Verdicts off = theorem_31_check(h.m, h.conn, h.pkg, hs, hab,
                                             {Vec3::zero(), rat(2)});
    CHECK_FALSE(off.h1_riemann_soliton);
    CHECK(off.h2_divergence_free);
    CHECK_FALSE(off.scalar_fact.has_value());

    Instance s(su2_manifold());
    AcmStructure ss = su2_acm(s.m);
    AlphaBetaReport sab = alpha_beta(s.m, s.conn, ss);
    Theorem31Verdicts sv = theorem_31_check(s.m, s.conn, s.pkg, ss, sab,
                                            {Vec3::zero(), rat(-1)});
    CHECK(sv.h1_riemann_soliton);
    CHECK(sv.h2_divergence_free);
    CHECK(sv.c1_quasi_sasakian);
    CHECK(sv.c2_constant_curvature);
    CHECK(sv.scalar_fact == true);
    CHECK(sv.ricci_operator_fact == true);

    Instance f(flat3_manifold());
    AcmStructure fs = flat3_acm(f.m);
    AlphaBetaReport fab = alpha_beta(f.m, f.conn, fs);
    Theorem31Verdicts fv = theorem_31_check(f.m, f.conn, f.pkg, fs, fab,
                                            {Vec3::zero(), rat(0)});
    CHECK(fv.h1_riemann_soliton);
    CHECK(fv.c1_quasi_sasakian);
    CHECK(fv.c2_constant_curvature);
}

TEST_CASE("collinear potential consistency") {
    Instance h(hyp3_manifold());
    AcmStructure hs = hyp3_acm(h.m);
    AlphaBetaReport hab = alpha_beta(h.m, h.conn, hs);
    Theorem42Report hr = theorem_42_check(h.m, h.conn, h.pkg, hs, hab, rat(1), rat(1));
    CHECK(hr.div_z == rat(-2));
    CHECK(hr.div_matches_2_alpha_c);  // 2 alpha c = -2
    CHECK(hr.lambda_star == rat(3));  // (alpha^2 - beta^2) - div Z = 1 + 2
    CHECK_FALSE(hr.lambda_matches);
    CHECK_FALSE(hr.residual_vanishes);

    Instance s(su2_manifold());
    AcmStructure ss = su2_acm(s.m);
    AlphaBetaReport sab = alpha_beta(s.m, s.conn, ss);
    Theorem42Report sr = theorem_42_check(s.m, s.conn, s.pkg, ss, sab, rat(1), rat(-1));
    CHECK(sr.div_z == rat(0));
    CHECK(sr.div_matches_2_alpha_c);
    CHECK(sr.lambda_star == rat(-1));
    CHECK(sr.lambda_matches);
    CHECK(sr.residual_vanishes);
    CHECK(riemann_soliton_residual(s.m, s.conn, s.pkg,
                                   {Vec3::basis(2), sr.lambda_star})
              .is_zero());

    Instance f(flat3_manifold());
    AcmStructure fs = flat3_acm(f.m);
    AlphaBetaReport fab = alpha_beta(f.m, f.conn, fs);
    Theorem42Report fr = theorem_42_check(f.m, f.conn, f.pkg, fs, fab, rat(1), rat(0));
    CHECK(fr.lambda_star == rat(0));
    CHECK(fr.lambda_matches);
    CHECK(fr.residual_vanishes);

    // scaling c scales both div Z and lambda_star accordingly
    Theorem42Report hr2 = theorem_42_check(h.m, h.conn, h.pkg, hs, hab, rat(-2), rat(1));
    CHECK(hr2.div_z == rat(4));
    CHECK(hr2.div_matches_2_alpha_c);
    CHECK(hr2.lambda_star == rat(-3));
}

TEST_CASE("lambda sign classification") {
    CHECK(classify_lambda(rat(1)) == SolitonTypeTag::Expanding);
    CHECK(classify_lambda(rat(0)) == SolitonTypeTag::Steady);
    CHECK(classify_lambda(rat(-1, 7)) == SolitonTypeTag::Shrinking);
    CHECK(to_string(SolitonTypeTag::Expanding).find("expanding") != std::string::npos);
    CHECK(to_string(SolitonTypeTag::Steady).find("steady") != std::string::npos);
    CHECK(to_string(SolitonTypeTag::Shrinking).find("shrinking") != std::string::npos);
}

TEST_CASE("aggregate soliton report") {
    Instance h(hyp3_manifold());
    SolitonReport rep = soliton_report(h.m, h.conn, h.pkg, {Vec3::zero(), rat(1)});
    CHECK(rep.residual_4tensor.is_zero());
    CHECK(rep.residual_ricci.is_zero());
    CHECK(rep.solved_lambda == rat(1));
    CHECK(rep.type_tag == SolitonTypeTag::Expanding);
}
