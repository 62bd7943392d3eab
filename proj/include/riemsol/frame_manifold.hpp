#pragma once

#include <optional>
#include <span>

#include "riemsol/linalg.hpp"
#include "riemsol/tensor.hpp"

namespace riemsol {

/// One declared bracket [e_i, e_j] = sum_k coeffs[k] e_{k+1}, with 1-based
/// frame indices i < j as they appear in manifests.
struct BracketInput {
    int i = 0;
    int j = 0;
    Vec3 coeffs;
};

/// A 3-dimensional manifold presented by a global frame with constant
/// structure constants and a constant-coefficient Riemannian metric.
class FrameManifold {
public:
    /// Validates indices, duplicates, the Jacobi identity and positive
    /// definiteness of the metric (identity when absent). Throws
    /// BadIndexError, DuplicateBracketError, JacobiViolationError or
    /// MetricNotSpdError.
    static FrameManifold build(std::span<const BracketInput> brackets,
                               const std::optional<Mat3>& metric = std::nullopt);

    /// c[i][j][k] with 0-based indices: [e_i, e_j] = sum_k c[i][j][k] e_k.
    const Rational& structure_constant(int i, int j, int k) const {
        return c_[static_cast<size_t>((i * kDim + j) * kDim + k)];
    }

    /// [e_i, e_j] as a frame vector, 0-based indices.
    Vec3 bracket(int i, int j) const;
    /// Bilinear extension to constant-coefficient fields.
    Vec3 bracket(const Vec3& u, const Vec3& v) const;

    const Mat3& metric() const { return g_; }
    const Mat3& inverse_metric() const { return g_inv_; }
    Tensor metric_tensor() const { return Tensor::covariant2(g_); }

    /// g(u, v).
    Rational inner(const Vec3& u, const Vec3& v) const;
    /// Lowered components of a vector: (u_flat)_i = g(u, e_i).
    Vec3 flat(const Vec3& u) const;
    /// Raised components of a covector: index-raising with the inverse metric.
    Vec3 sharp(const Vec3& omega) const;

private:
    FrameManifold() = default;

    std::array<Rational, 27> c_{};
    Mat3 g_;
    Mat3 g_inv_;
};

} // namespace riemsol
