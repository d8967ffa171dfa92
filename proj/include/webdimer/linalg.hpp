#pragma once

#include "webdimer/core.hpp"

#include <optional>
#include <vector>

namespace wd {

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Q> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Q& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const Q& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
    std::vector<Q> column(int j) const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Matrix identity(int n);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix random_matrix(int rows, int cols, RationalRng& rng);

Q det(Matrix m);
int rank(Matrix m);

// Minor on the given columns (all rows), columns taken in the listed order.
Q minor(const Matrix& m, const std::vector<int>& cols0);

// Solves A x = b. Free variables are set to zero. Returns nullopt if inconsistent.
std::optional<std::vector<Q>> solve(const Matrix& A, const std::vector<Q>& b);
// Several right-hand sides at once; `rank_out` receives rank(A).
std::optional<Matrix> solve(const Matrix& A, const Matrix& B, int* rank_out = nullptr);
std::optional<Matrix> inverse(const Matrix& A);

}  // namespace wd
