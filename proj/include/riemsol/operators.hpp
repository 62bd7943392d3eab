#pragma once

#include "riemsol/connection.hpp"
#include "riemsol/tensor.hpp"

namespace riemsol {

/// (L_Z g)(X,Y) = g(nabla_X Z, Y) + g(nabla_Y Z, X) for constant fields.
/// Result is a symmetric (0,2) tensor.
Tensor lie_derivative_metric(const FrameManifold& m, const Connection& conn, const Vec3& z);

/// div Z = trace of X -> nabla_X Z.
Rational divergence(const FrameManifold& m, const Connection& conn, const Vec3& z);

/// Exterior derivative of a constant-coefficient 1-form, with the
/// 1/2 normalization: d omega(X,Y) = -1/2 omega([X,Y]). Result is an
/// antisymmetric (0,2) tensor. Input must be a (0,1) tensor.
Tensor exterior_derivative_1form(const FrameManifold& m, const Tensor& omega);

struct HessianResult {
    Tensor hessian;   ///< (0,2): Hess(e_i, e_j) = g(nabla_{e_i} V, e_j)
    bool closed;      ///< d(V_flat) = 0, required for V to be a gradient field
    Tensor d_flat;    ///< the obstruction d(V_flat) itself
};

/// Hessian candidate of a constant field V interpreted as a gradient.
/// The verdict `closed` reports whether V_flat is closed; when it is, the
/// hessian is symmetric and equals 1/2 L_V g.
HessianResult hessian_from_gradient(const FrameManifold& m, const Connection& conn,
                                    const Vec3& v);

/// Covariant derivative of a constant (1,1) tensor field T in direction X:
/// (nabla_X T)(Y) = nabla_X (T Y) - T(nabla_X Y). Column convention.
Mat3 covariant_derivative_operator(const FrameManifold& m, const Connection& conn,
                                   const Mat3& t, const Vec3& direction);

} // namespace riemsol
