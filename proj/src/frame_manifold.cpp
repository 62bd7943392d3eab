#include "riemsol/frame_manifold.hpp"

#include <set>
#include <utility>

#include "riemsol/errors.hpp"

namespace riemsol {

FrameManifold FrameManifold::build(std::span<const BracketInput> brackets,
                                   const std::optional<Mat3>& metric) {
    FrameManifold m;

    std::set<std::pair<int, int>> seen;
    for (const auto& b : brackets) {
        if (b.i < 1 || b.i > kDim || b.j < 1 || b.j > kDim) {
            throw BadIndexError("bracket index out of range 1..3: [e" + std::to_string(b.i) +
                                ", e" + std::to_string(b.j) + "]");
        }
        if (b.i == b.j) {
            throw BadIndexError("bracket [e" + std::to_string(b.i) + ", e" + std::to_string(b.j) +
                                "] pairs a frame vector with itself");
        }
        const int lo = std::min(b.i, b.j) - 1;
        const int hi = std::max(b.i, b.j) - 1;
        if (!seen.insert({lo, hi}).second) {
            throw DuplicateBracketError("bracket pair {e" + std::to_string(lo + 1) + ", e" +
                                        std::to_string(hi + 1) + "} declared twice");
        }
        const int i = b.i - 1;
        const int j = b.j - 1;
        for (int k = 0; k < kDim; ++k) {
            m.c_[static_cast<size_t>((i * kDim + j) * kDim + k)] = b.coeffs[k];
            m.c_[static_cast<size_t>((j * kDim + i) * kDim + k)] = -b.coeffs[k];
        }
    }

    // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0.
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j)
            for (int k = j + 1; k < kDim; ++k) {
                const Vec3 sum = m.bracket(m.bracket(i, j), Vec3::basis(k)) +
                                 m.bracket(m.bracket(j, k), Vec3::basis(i)) +
                                 m.bracket(m.bracket(k, i), Vec3::basis(j));
                if (!sum.is_zero()) {
                    throw JacobiViolationError(
                        "Jacobi identity fails on (e" + std::to_string(i + 1) + ", e" +
                        std::to_string(j + 1) + ", e" + std::to_string(k + 1) + "); residual (" +
                        to_string(sum[0]) + ", " + to_string(sum[1]) + ", " + to_string(sum[2]) +
                        ")");
                }
            }

    m.g_ = metric.value_or(Mat3::identity());
    if (!is_symmetric(m.g_)) throw MetricNotSpdError("metric is not symmetric");
    if (!is_positive_definite(m.g_)) {
        throw MetricNotSpdError("metric is not positive definite (a leading principal minor is <= 0)");
    }
    m.g_inv_ = inverse(m.g_);
    return m;
}

Vec3 FrameManifold::bracket(int i, int j) const {
    Vec3 out;
    for (int k = 0; k < kDim; ++k) out[k] = structure_constant(i, j, k);
    return out;
}

Vec3 FrameManifold::bracket(const Vec3& u, const Vec3& v) const {
    Vec3 out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            if (u[i] == 0 || v[j] == 0) continue;
            const Rational w = u[i] * v[j];
            for (int k = 0; k < kDim; ++k) out[k] += w * structure_constant(i, j, k);
        }
    return out;
}

Rational FrameManifold::inner(const Vec3& u, const Vec3& v) const {
    Rational sum = 0;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) sum += g_.at(i, j) * u[i] * v[j];
    return sum;
}

Vec3 FrameManifold::flat(const Vec3& u) const {
    Vec3 out;
    for (int i = 0; i < kDim; ++i) out[i] = inner(u, Vec3::basis(i));
    return out;
}

Vec3 FrameManifold::sharp(const Vec3& omega) const {
    return g_inv_ * omega;
}

} // namespace riemsol
