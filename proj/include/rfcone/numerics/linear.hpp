#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "rfcone/numerics/errors.hpp"

namespace rfcone {

using Vector3 = std::array<double, 3>;
using Matrix3 = std::array<Vector3, 3>;

struct LinearSolution {
    Vector3 x;
    double residual;  // max-norm of M x - rhs
};

inline double residual_inf(const Matrix3& m, const Vector3& x, const Vector3& rhs) {
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
        double row = -rhs[i];
        for (int j = 0; j < 3; ++j) row += m[i][j] * x[j];
        r = std::max(r, std::abs(row));
    }
    return r;
}

/// Gaussian elimination with partial pivoting. A pivot smaller than 1e-12
/// times the scale of its original row raises SingularMatrix.
inline LinearSolution solve_linear_3(const Matrix3& matrix, const Vector3& rhs) {
    Matrix3 a = matrix;
    Vector3 b = rhs;
    std::array<double, 3> scale{};
    for (int i = 0; i < 3; ++i) {
        scale[i] = std::max({std::abs(a[i][0]), std::abs(a[i][1]), std::abs(a[i][2])});
        if (scale[i] == 0.0) throw SingularMatrix("solve_linear_3: zero row " + std::to_string(i));
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
            std::swap(scale[pivot], scale[col]);
        }
        if (std::abs(a[col][col]) < 1e-12 * scale[col])
            throw SingularMatrix("solve_linear_3: pivot below 1e-12 of row scale in column " + std::to_string(col));
        for (int r = col + 1; r < 3; ++r) {
            double factor = a[r][col] / a[col][col];
            for (int c = col; c < 3; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    Vector3 x{};
    for (int i = 2; i >= 0; --i) {
        double sum = b[i];
        for (int j = i + 1; j < 3; ++j) sum -= a[i][j] * x[j];
        x[i] = sum / a[i][i];
    }
    return {x, residual_inf(matrix, x, rhs)};
}

}  // namespace rfcone
