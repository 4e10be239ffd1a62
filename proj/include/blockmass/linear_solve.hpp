#pragma once

#include "blockmass/errors.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace blockmass {

/// Exact Gaussian elimination over any field type with value semantics and
/// exact +,-,*,/,== (Rational, RationalFunction). Pivoting is deterministic:
/// first row with a nonzero entry, in column order. The computed solution is
/// re-substituted into the original system before it is returned.
template <class F>
std::vector<F> solve_linear_system(const std::vector<std::vector<F>>& matrix,
                                   const std::vector<F>& rhs)
{
    const std::size_t n = matrix.size();
    if (rhs.size() != n) {
        throw std::invalid_argument("linear system shape mismatch");
    }
    for (const auto& row : matrix) {
        if (row.size() != n) {
            throw std::invalid_argument("linear system matrix is not square");
        }
    }

    const F zero{};
    std::vector<std::vector<F>> a = matrix;
    std::vector<F> b = rhs;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == zero) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrix("singular system at column " + std::to_string(col));
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == zero) {
                continue;
            }
            F factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) {
                a[row][j] = a[row][j] - factor * a[col][j];
            }
            b[row] = b[row] - factor * b[col];
        }
    }

    std::vector<F> x(n, zero);
    for (std::size_t i = n; i-- > 0;) {
        F acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc = acc - a[i][j] * x[j];
        }
        x[i] = acc / a[i][i];
    }

    for (std::size_t i = 0; i < n; ++i) {
        F acc = zero;
        for (std::size_t j = 0; j < n; ++j) {
            acc = acc + matrix[i][j] * x[j];
        }
        if (!(acc == rhs[i])) {
            throw SingularMatrix("solution verification failed at row " + std::to_string(i));
        }
    }
    return x;
}

} // namespace blockmass
