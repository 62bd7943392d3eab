#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "riemsol/acm.hpp"
#include "riemsol/connection.hpp"
#include "riemsol/curvature.hpp"
#include "riemsol/frame_manifold.hpp"
#include "riemsol/operators.hpp"
#include "riemsol/soliton.hpp"

namespace riemsol::testing {

inline Rational rat(int num, int den = 1) { return Rational(num) / Rational(den); }

inline Vec3 vec(const Rational& a, const Rational& b, const Rational& c) {
    Vec3 v;
    v[0] = a;
    v[1] = b;
    v[2] = c;
    return v;
}

inline Vec3 vec(int a, int b, int c) { return vec(Rational(a), Rational(b), Rational(c)); }

inline Mat3 mat(std::array<std::array<int, 3>, 3> rows) {
    Mat3 a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return a;
}

// Rotation by a quarter turn in the (e1, e2) plane, annihilating e3. The
// sign of the turn is the only difference between the two fixtures below.
inline Mat3 phi_minus() {  // phi(e1) = -e2, phi(e2) = e1
    return mat({{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}});
}

inline Mat3 phi_plus() {  // phi(e1) = e2, phi(e2) = -e1
    return mat({{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}});
}

// Hyperbolic space H^3 of curvature -1: [e1,e3] = -e1, [e2,e3] = -e2.
inline FrameManifold hyp3_manifold() {
    std::vector<BracketInput> br{{1, 3, vec(-1, 0, 0)}, {2, 3, vec(0, -1, 0)}};
    return FrameManifold::build(br);
}

inline AcmStructure hyp3_acm(const FrameManifold& m) {
    return make_acm_structure(m, phi_minus(), Vec3::basis(2));
}

// Abelian frame, flat metric.
inline FrameManifold flat3_manifold() {
    return FrameManifold::build(std::vector<BracketInput>{});
}

inline AcmStructure flat3_acm(const FrameManifold& m) {
    return make_acm_structure(m, phi_minus(), Vec3::basis(2));
}

// Round 3-sphere presented on su(2): [e1,e2] = 2e3 cyclically.
inline FrameManifold su2_manifold() {
    std::vector<BracketInput> br{
        {1, 2, vec(0, 0, 2)}, {2, 3, vec(2, 0, 0)}, {3, 1, vec(0, 2, 0)}};
    return FrameManifold::build(br);
}

inline AcmStructure su2_acm(const FrameManifold& m) {
    return make_acm_structure(m, phi_plus(), Vec3::basis(2));
}

// Heisenberg group: [e1,e2] = 2e3 only. Normal, beta-Sasakian, not Einstein.
inline FrameManifold heisenberg_manifold() {
    std::vector<BracketInput> br{{1, 2, vec(0, 0, 2)}};
    return FrameManifold::build(br);
}

inline AcmStructure heisenberg_acm(const FrameManifold& m) {
    return make_acm_structure(m, phi_plus(), Vec3::basis(2));
}

// E(1,1)-type solvable frame: [e1,e3] = e1, [e2,e3] = -e2. The standard
// rotation still satisfies the structure axioms but the result is not
// normal, and nabla xi does not have the alpha/beta shape.
inline FrameManifold e11_manifold() {
    std::vector<BracketInput> br{{1, 3, vec(1, 0, 0)}, {2, 3, vec(0, -1, 0)}};
    return FrameManifold::build(br);
}

inline AcmStructure e11_acm(const FrameManifold& m) {
    return make_acm_structure(m, phi_minus(), Vec3::basis(2));
}

struct Instance {
    FrameManifold m;
    Connection conn;
    CurvaturePackage pkg;

    explicit Instance(FrameManifold manifold)
        : m(std::move(manifold)), conn(koszul_connection(m)), pkg(curvature_package(m, conn)) {}
};

inline Rational random_rational(std::mt19937_64& eng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return rat(num(eng), den(eng));
}

inline Rational random_nonzero_rational(std::mt19937_64& eng) {
    for (;;) {
        Rational r = random_rational(eng);
        if (r != 0) return r;
    }
}

inline Vec3 random_vec(std::mt19937_64& eng) {
    return vec(random_rational(eng), random_rational(eng), random_rational(eng));
}

inline Mat3 random_symmetric(std::mt19937_64& eng) {
    Mat3 a;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            a.at(i, j) = random_rational(eng);
            a.at(j, i) = a.at(i, j);
        }
    return a;
}

// A^T A + d I with d >= 1 is symmetric positive definite.
inline Mat3 random_spd_metric(std::mt19937_64& eng) {
    Mat3 a;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = random_rational(eng);
    std::uniform_int_distribution<int> shift(1, 3);
    Mat3 g = a.transpose() * a;
    Rational d(shift(eng));
    for (int i = 0; i < 3; ++i) g.at(i, i) += d;
    return g;
}

// Solvable family: [e1,e3], [e2,e3] in span(e1,e2). Jacobi holds for any
// coefficients because all brackets among e1, e2 vanish.
inline FrameManifold random_solvable(std::mt19937_64& eng, bool with_metric) {
    std::vector<BracketInput> br{
        {1, 3, vec(random_rational(eng), random_rational(eng), 0)},
        {2, 3, vec(random_rational(eng), random_rational(eng), 0)}};
    if (with_metric) return FrameManifold::build(br, random_spd_metric(eng));
    return FrameManifold::build(br);
}

// Unimodular family: [e1,e2] = p e3, [e2,e3] = q e1, [e3,e1] = s e2.
// Jacobi holds identically.
inline FrameManifold random_unimodular(std::mt19937_64& eng, bool with_metric) {
    std::vector<BracketInput> br{
        {1, 2, vec(0, 0, random_rational(eng))},
        {2, 3, vec(random_rational(eng), 0, 0)},
        {3, 1, vec(0, random_rational(eng), 0)}};
    if (with_metric) return FrameManifold::build(br, random_spd_metric(eng));
    return FrameManifold::build(br);
}

inline FrameManifold random_manifold(std::mt19937_64& eng) {
    std::uniform_int_distribution<int> coin(0, 1);
    bool with_metric = coin(eng) == 1;
    return coin(eng) == 0 ? random_solvable(eng, with_metric)
                          : random_unimodular(eng, with_metric);
}

struct NormalInstance {
    FrameManifold m;
    AcmStructure acm;
    Rational alpha;
    Rational beta;
};

// Three one-parameter families of normal structures with the identity
// metric: scaled hyperbolic (alpha = -a, beta = 0), scaled su(2) and scaled
// Heisenberg (alpha = 0, beta = b).
inline NormalInstance random_normal_instance(std::mt19937_64& eng) {
    std::uniform_int_distribution<int> pick(0, 2);
    int family = pick(eng);
    Rational t = random_nonzero_rational(eng);
    if (family == 0) {
        std::vector<BracketInput> br{{1, 3, vec(-t, 0, 0)}, {2, 3, vec(0, -t, 0)}};
        FrameManifold m = FrameManifold::build(br);
        AcmStructure s = make_acm_structure(m, phi_minus(), Vec3::basis(2));
        return {std::move(m), s, -t, 0};
    }
    Rational two_t = 2 * t;
    std::vector<BracketInput> br{{1, 2, vec(0, 0, two_t)}};
    if (family == 1) {
        br.push_back({2, 3, vec(two_t, 0, 0)});
        br.push_back({3, 1, vec(0, two_t, 0)});
    }
    FrameManifold m = FrameManifold::build(br);
    AcmStructure s = make_acm_structure(m, phi_plus(), Vec3::basis(2));
    return {std::move(m), s, 0, t};
}

// Contraction of a (0,4) tensor over its first and last slots written as
// explicit loops against the inverse metric, independent of contract().
inline Mat3 contract_04_first_last(const Tensor& t, const FrameManifold& m) {
    Mat3 out;
    const Mat3& ginv = m.inverse_metric();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational sum = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) sum += ginv.at(a, b) * t.at(a, i, j, b);
            out.at(i, j) = sum;
        }
    return out;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(RIEMSOL_EXAMPLES_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace riemsol::testing
