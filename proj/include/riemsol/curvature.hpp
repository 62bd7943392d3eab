#pragma once

#include <optional>

#include "riemsol/connection.hpp"
#include "riemsol/tensor.hpp"

namespace riemsol {

/// Curvature data of a Levi-Civita connection, all derived exactly.
/// Sign convention: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
/// R(X,Y,Z,W) = g(R(X,Y)Z, W), S(Y,Z) = trace of X -> R(X,Y)Z taken with the
/// metric over the first and last slots of the (0,4) tensor.
struct CurvaturePackage {
    Tensor riemann_31;  ///< slots (co,co,co,contra): at(i,j,k,l) = comp l of R(e_i,e_j)e_k
    Tensor riemann_04;  ///< all covariant: at(i,j,k,w) = g(R(e_i,e_j)e_k, e_w)
    Tensor ricci;       ///< (0,2) Ricci tensor S
    Mat3 ricci_operator; ///< Q with S(Y,Z) = g(QY, Z), column convention
    Rational scalar;    ///< r = trace_g S

    /// R(e_i, e_j) e_k as a frame vector.
    Vec3 riemann(int i, int j, int k) const;
    /// Trilinear extension.
    Vec3 riemann(const Vec3& x, const Vec3& y, const Vec3& z) const;

    CurvaturePackage();
};

CurvaturePackage curvature_package(const FrameManifold& m, const Connection& conn);

/// K(u,v) = R(u,v,v,u) / (|u|^2 |v|^2 - g(u,v)^2).
/// Throws DegeneratePlaneError when u, v do not span a plane.
Rational sectional_curvature(const CurvaturePackage& pkg, const FrameManifold& m,
                             const Vec3& u, const Vec3& v);

/// The constant k with R(X,Y)Z = k (g(Y,Z)X - g(X,Z)Y) when the instance has
/// constant sectional curvature, otherwise nullopt. Decided by comparing the
/// full (0,4) tensor with (k/2) g (x) g, k taken from a frame plane.
std::optional<Rational> constant_curvature_coefficient(const CurvaturePackage& pkg,
                                                       const FrameManifold& m);

/// Kulkarni-Nomizu product of two symmetric (0,2) tensors:
/// (a (x) b)(X,Y,Z,W) = a(X,W)b(Y,Z) + a(Y,Z)b(X,W) - a(X,Z)b(Y,W) - a(Y,W)b(X,Z).
/// Throws BadValenceError / NotSymmetricError on invalid input.
Tensor kulkarni_nomizu(const Tensor& a, const Tensor& b);

} // namespace riemsol
