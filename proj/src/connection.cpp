#include "riemsol/connection.hpp"

namespace riemsol {

Vec3 Connection::derivative(int i, int j) const {
    Vec3 out;
    for (int k = 0; k < kDim; ++k) out[k] = gamma(i, j, k);
    return out;
}

Vec3 Connection::derivative(int i, const Vec3& field) const {
    Vec3 out;
    for (int j = 0; j < kDim; ++j) {
        if (field[j] == 0) continue;
        for (int k = 0; k < kDim; ++k) out[k] += field[j] * gamma(i, j, k);
    }
    return out;
}

Vec3 Connection::derivative(const Vec3& direction, const Vec3& field) const {
    Vec3 out;
    for (int i = 0; i < kDim; ++i) {
        if (direction[i] == 0) continue;
        const Vec3 di = derivative(i, field);
        for (int k = 0; k < kDim; ++k) out[k] += direction[i] * di[k];
    }
    return out;
}

Connection koszul_connection(const FrameManifold& m) {
    Connection conn;
    const Mat3& ginv = m.inverse_metric();
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Vec3 k_cov; // k_cov[k] = g(nabla_{e_i} e_j, e_k)
            for (int k = 0; k < kDim; ++k) {
                const Rational twice = m.inner(m.bracket(i, j), Vec3::basis(k)) -
                                       m.inner(m.bracket(j, k), Vec3::basis(i)) +
                                       m.inner(m.bracket(k, i), Vec3::basis(j));
                k_cov[k] = twice / 2;
            }
            const Vec3 coeffs = ginv * k_cov;
            for (int k = 0; k < kDim; ++k) conn.gamma(i, j, k) = coeffs[k];
        }
    return conn;
}

} // namespace riemsol
