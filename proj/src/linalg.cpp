#include "riemsol/linalg.hpp"

#include "riemsol/errors.hpp"

namespace riemsol {

Vec3 Vec3::basis(int i) {
    Vec3 v;
    v[i] = 1;
    return v;
}

bool Vec3::is_zero() const {
    for (const auto& x : c) {
        if (x != 0) return false;
    }
    return true;
}

Vec3 operator+(const Vec3& a, const Vec3& b) {
    Vec3 out;
    for (int i = 0; i < kDim; ++i) out[i] = a[i] + b[i];
    return out;
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
    Vec3 out;
    for (int i = 0; i < kDim; ++i) out[i] = a[i] - b[i];
    return out;
}

Vec3 operator-(const Vec3& a) {
    Vec3 out;
    for (int i = 0; i < kDim; ++i) out[i] = -a[i];
    return out;
}

Vec3 operator*(const Rational& s, const Vec3& a) {
    Vec3 out;
    for (int i = 0; i < kDim; ++i) out[i] = s * a[i];
    return out;
}

Mat3 Mat3::identity() {
    Mat3 out;
    for (int i = 0; i < kDim; ++i) out.at(i, i) = 1;
    return out;
}

Mat3 Mat3::transpose() const {
    Mat3 out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) out.at(i, j) = at(j, i);
    return out;
}

Rational Mat3::trace() const {
    return at(0, 0) + at(1, 1) + at(2, 2);
}

bool Mat3::is_zero() const {
    for (const auto& x : m) {
        if (x != 0) return false;
    }
    return true;
}

Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (size_t k = 0; k < 9; ++k) out.m[k] = a.m[k] + b.m[k];
    return out;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (size_t k = 0; k < 9; ++k) out.m[k] = a.m[k] - b.m[k];
    return out;
}

Mat3 operator-(const Mat3& a) {
    Mat3 out;
    for (size_t k = 0; k < 9; ++k) out.m[k] = -a.m[k];
    return out;
}

Mat3 operator*(const Rational& s, const Mat3& a) {
    Mat3 out;
    for (size_t k = 0; k < 9; ++k) out.m[k] = s * a.m[k];
    return out;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Rational sum = 0;
            for (int k = 0; k < kDim; ++k) sum += a.at(i, k) * b.at(k, j);
            out.at(i, j) = sum;
        }
    return out;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 out;
    for (int i = 0; i < kDim; ++i) {
        Rational sum = 0;
        for (int k = 0; k < kDim; ++k) sum += a.at(i, k) * v[k];
        out[i] = sum;
    }
    return out;
}

bool is_symmetric(const Mat3& a) {
    return a.at(0, 1) == a.at(1, 0) && a.at(0, 2) == a.at(2, 0) && a.at(1, 2) == a.at(2, 1);
}

bool is_positive_definite(const Mat3& a) {
    if (!is_symmetric(a)) return false;
    const Rational m1 = a.at(0, 0);
    const Rational m2 = a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    return m1 > 0 && m2 > 0 && determinant(a) > 0;
}

Rational determinant(const Mat3& a) {
    return a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
           a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
           a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
}

Mat3 inverse(const Mat3& a) {
    Mat3 work = a;
    Mat3 out = Mat3::identity();
    for (int col = 0; col < kDim; ++col) {
        int pivot = -1;
        for (int row = col; row < kDim; ++row) {
            if (work.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw Error("singular matrix has no inverse");
        if (pivot != col) {
            for (int j = 0; j < kDim; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(out.at(pivot, j), out.at(col, j));
            }
        }
        const Rational inv_pivot = Rational(1) / work.at(col, col);
        for (int j = 0; j < kDim; ++j) {
            work.at(col, j) *= inv_pivot;
            out.at(col, j) *= inv_pivot;
        }
        for (int row = 0; row < kDim; ++row) {
            if (row == col || work.at(row, col) == 0) continue;
            const Rational factor = work.at(row, col);
            for (int j = 0; j < kDim; ++j) {
                work.at(row, j) -= factor * work.at(col, j);
                out.at(row, j) -= factor * out.at(col, j);
            }
        }
    }
    return out;
}

} // namespace riemsol
