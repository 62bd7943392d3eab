#include "riemsol/curvature.hpp"

#include "riemsol/errors.hpp"

namespace riemsol {

CurvaturePackage::CurvaturePackage()
    : riemann_31({Variance::Covariant, Variance::Covariant, Variance::Covariant,
                  Variance::Contravariant}),
      riemann_04({Variance::Covariant, Variance::Covariant, Variance::Covariant,
                  Variance::Covariant}),
      ricci({Variance::Covariant, Variance::Covariant}) {}

Vec3 CurvaturePackage::riemann(int i, int j, int k) const {
    Vec3 out;
    for (int l = 0; l < kDim; ++l) out[l] = riemann_31.at(i, j, k, l);
    return out;
}

Vec3 CurvaturePackage::riemann(const Vec3& x, const Vec3& y, const Vec3& z) const {
    Vec3 out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                const Rational w = x[i] * y[j] * z[k];
                if (w == 0) continue;
                for (int l = 0; l < kDim; ++l) out[l] += w * riemann_31.at(i, j, k, l);
            }
    return out;
}

CurvaturePackage curvature_package(const FrameManifold& m, const Connection& conn) {
    CurvaturePackage pkg;

    // R(e_i,e_j)e_k = nabla_{e_i} nabla_{e_j} e_k - nabla_{e_j} nabla_{e_i} e_k
    //                 - nabla_{[e_i,e_j]} e_k, with constant coefficients.
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                const Vec3 r = conn.derivative(i, conn.derivative(j, k)) -
                               conn.derivative(j, conn.derivative(i, k)) -
                               conn.derivative(m.bracket(i, j), Vec3::basis(k));
                for (int l = 0; l < kDim; ++l) pkg.riemann_31.at(i, j, k, l) = r[l];
            }

    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                const Vec3 r = pkg.riemann(i, j, k);
                for (int w = 0; w < kDim; ++w)
                    pkg.riemann_04.at(i, j, k, w) = m.inner(r, Vec3::basis(w));
            }

    pkg.ricci = contract(pkg.riemann_04, 0, 3, m);
    pkg.ricci_operator = m.inverse_metric() * pkg.ricci.as_matrix();
    pkg.scalar = contract(pkg.ricci, 0, 1, m).value();
    return pkg;
}

Rational sectional_curvature(const CurvaturePackage& pkg, const FrameManifold& m,
                             const Vec3& u, const Vec3& v) {
    const Rational area2 = m.inner(u, u) * m.inner(v, v) - m.inner(u, v) * m.inner(u, v);
    if (area2 == 0) {
        throw DegeneratePlaneError("sectional curvature needs linearly independent vectors");
    }
    return m.inner(pkg.riemann(u, v, v), u) / area2;
}

std::optional<Rational> constant_curvature_coefficient(const CurvaturePackage& pkg,
                                                       const FrameManifold& m) {
    const Rational k = sectional_curvature(pkg, m, Vec3::basis(0), Vec3::basis(1));
    const Tensor g = m.metric_tensor();
    const Tensor model = (k / 2) * kulkarni_nomizu(g, g);
    if (pkg.riemann_04 == model) return k;
    return std::nullopt;
}

Tensor kulkarni_nomizu(const Tensor& a, const Tensor& b) {
    for (const Tensor* t : {&a, &b}) {
        if (t->rank() != 2 || t->slot(0) != Variance::Covariant ||
            t->slot(1) != Variance::Covariant) {
            throw BadValenceError("Kulkarni-Nomizu product requires (0,2) tensors");
        }
        if (!t->is_symmetric2()) {
            throw NotSymmetricError("Kulkarni-Nomizu product requires symmetric tensors");
        }
    }
    Tensor out({Variance::Covariant, Variance::Covariant, Variance::Covariant,
                Variance::Covariant});
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z)
                for (int w = 0; w < kDim; ++w) {
                    out.at(x, y, z, w) = a.at(x, w) * b.at(y, z) + a.at(y, z) * b.at(x, w) -
                                         a.at(x, z) * b.at(y, w) - a.at(y, w) * b.at(x, z);
                }
    return out;
}

} // namespace riemsol
