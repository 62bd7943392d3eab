#pragma once

#include "riemsol/frame_manifold.hpp"

namespace riemsol {

/// Levi-Civita connection in the frame: nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k.
class Connection {
public:
    const Rational& gamma(int i, int j, int k) const {
        return gamma_[static_cast<size_t>((i * kDim + j) * kDim + k)];
    }
    Rational& gamma(int i, int j, int k) {
        return gamma_[static_cast<size_t>((i * kDim + j) * kDim + k)];
    }

    /// nabla_{e_i} e_j.
    Vec3 derivative(int i, int j) const;
    /// nabla_{e_i} Z for a constant-coefficient field Z.
    Vec3 derivative(int i, const Vec3& field) const;
    /// nabla_X Z, bilinear in both arguments.
    Vec3 derivative(const Vec3& direction, const Vec3& field) const;

private:
    std::array<Rational, 27> gamma_{};
};

/// Koszul formula specialized to constant-coefficient frames:
/// 2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
/// The right side is solved against the metric exactly. The result is
/// torsion free and metric compatible by construction.
Connection koszul_connection(const FrameManifold& m);

} // namespace riemsol
