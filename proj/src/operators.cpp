#include "riemsol/operators.hpp"

#include "riemsol/errors.hpp"

namespace riemsol {

Tensor lie_derivative_metric(const FrameManifold& m, const Connection& conn, const Vec3& z) {
    Tensor out({Variance::Covariant, Variance::Covariant});
    std::array<Vec3, 3> dz;
    for (int i = 0; i < kDim; ++i) dz[static_cast<size_t>(i)] = conn.derivative(i, z);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            out.at(i, j) = m.inner(dz[static_cast<size_t>(i)], Vec3::basis(j)) +
                           m.inner(dz[static_cast<size_t>(j)], Vec3::basis(i));
        }
    return out;
}

Rational divergence(const FrameManifold& m, const Connection& conn, const Vec3& z) {
    (void)m;
    Rational sum = 0;
    for (int i = 0; i < kDim; ++i) sum += conn.derivative(i, z)[i];
    return sum;
}

Tensor exterior_derivative_1form(const FrameManifold& m, const Tensor& omega) {
    if (omega.rank() != 1 || omega.slot(0) != Variance::Covariant) {
        throw BadValenceError("exterior_derivative_1form requires a (0,1) tensor");
    }
    Tensor out({Variance::Covariant, Variance::Covariant});
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            const Vec3 br = m.bracket(i, j);
            Rational val = 0;
            for (int k = 0; k < kDim; ++k) val += omega.at(k) * br[k];
            out.at(i, j) = -val / 2;
        }
    return out;
}

HessianResult hessian_from_gradient(const FrameManifold& m, const Connection& conn,
                                    const Vec3& v) {
    HessianResult res{Tensor({Variance::Covariant, Variance::Covariant}), false,
                      Tensor({Variance::Covariant, Variance::Covariant})};
    for (int i = 0; i < kDim; ++i) {
        const Vec3 dv = conn.derivative(i, v);
        for (int j = 0; j < kDim; ++j) res.hessian.at(i, j) = m.inner(dv, Vec3::basis(j));
    }
    Tensor v_flat({Variance::Covariant});
    const Vec3 lowered = m.flat(v);
    for (int i = 0; i < kDim; ++i) v_flat.at(i) = lowered[i];
    res.d_flat = exterior_derivative_1form(m, v_flat);
    res.closed = res.d_flat.is_zero();
    return res;
}

Mat3 covariant_derivative_operator(const FrameManifold& m, const Connection& conn,
                                   const Mat3& t, const Vec3& direction) {
    (void)m;
    Mat3 out;
    for (int j = 0; j < kDim; ++j) {
        // column j: nabla_X (T e_j) - T (nabla_X e_j)
        Vec3 t_col;
        for (int i = 0; i < kDim; ++i) t_col[i] = t.at(i, j);
        const Vec3 col = conn.derivative(direction, t_col) - t * conn.derivative(direction, Vec3::basis(j));
        for (int i = 0; i < kDim; ++i) out.at(i, j) = col[i];
    }
    return out;
}

} // namespace riemsol
