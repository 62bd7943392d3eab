#pragma once

#include <array>

#include "riemsol/rational.hpp"

namespace riemsol {

inline constexpr int kDim = 3;

/// Exact 3-vector of frame components. Also used for covector components;
/// the distinction is carried by context, not by type.
struct Vec3 {
    std::array<Rational, 3> c{};

    Rational& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Rational& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    static Vec3 zero() { return Vec3{}; }
    static Vec3 basis(int i);

    bool is_zero() const;
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(const Rational& s, const Vec3& a);

/// Exact 3x3 matrix, row-major. Endomorphisms use the column convention:
/// at(i, j) is component i of the image of e_j.
struct Mat3 {
    std::array<Rational, 9> m{};

    Rational& at(int i, int j) { return m[static_cast<size_t>(3 * i + j)]; }
    const Rational& at(int i, int j) const { return m[static_cast<size_t>(3 * i + j)]; }

    static Mat3 zero() { return Mat3{}; }
    static Mat3 identity();

    Mat3 transpose() const;
    Rational trace() const;
    bool is_zero() const;
    friend bool operator==(const Mat3&, const Mat3&) = default;
};

Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a);
Mat3 operator*(const Rational& s, const Mat3& a);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);

bool is_symmetric(const Mat3& a);

/// Sylvester's criterion on the three leading principal minors, exactly.
bool is_positive_definite(const Mat3& a);

Rational determinant(const Mat3& a);

/// Exact inverse by Gauss-Jordan elimination with row pivoting.
/// Throws Error if the matrix is singular.
Mat3 inverse(const Mat3& a);

} // namespace riemsol
