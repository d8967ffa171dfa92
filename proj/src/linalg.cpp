#include "webdimer/linalg.hpp"

#include <utility>

namespace wd {

std::vector<Q> Matrix::column(int j) const {
    std::vector<Q> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw Error("dimension_mismatch", "matrix product shape mismatch");
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
        }
    return z;
}

Matrix random_matrix(int rows, int cols, RationalRng& rng) {
    Matrix m(rows, cols);
    for (auto& q : m.a) q = rng.next();
    return m;
}

Q det(Matrix m) {
    if (m.rows != m.cols) throw Error("dimension_mismatch", "determinant of non-square matrix");
    int n = m.rows;
    Q d = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Q f = m(i, c) / m(c, c);
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

int rank(Matrix m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = r;
        while (p < m.rows && m(p, c) == 0) ++p;
        if (p == m.rows) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        for (int i = r + 1; i < m.rows; ++i) {
            if (m(i, c) == 0) continue;
            Q f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

Q minor(const Matrix& m, const std::vector<int>& cols0) {
    int k = int(cols0.size());
    if (k != m.rows) throw Error("dimension_mismatch", "minor needs as many columns as rows");
    if (k == 1) return m(0, cols0[0]);
    if (k == 2) return m(0, cols0[0]) * m(1, cols0[1]) - m(0, cols0[1]) * m(1, cols0[0]);
    if (k == 3) {
        auto e = [&](int i, int j) -> const Q& { return m(i, cols0[j]); };
        return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
               e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    }
    Matrix s(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) s(i, j) = m(i, cols0[j]);
    return det(std::move(s));
}

std::optional<Matrix> solve(const Matrix& A, const Matrix& B, int* rank_out) {
    if (B.rows != A.rows) throw Error("dimension_mismatch", "right-hand side rows");
    int R = A.rows, C = A.cols, K = B.cols, W = C + K;
    Matrix m(R, W);
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < C; ++j) m(i, j) = A(i, j);
        for (int j = 0; j < K; ++j) m(i, C + j) = B(i, j);
    }
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int p = r;
        while (p < R && m(p, c) == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (int j = 0; j < W; ++j) std::swap(m(p, j), m(r, j));
        Q inv = 1 / m(r, c);
        for (int j = c; j < W; ++j) m(r, j) *= inv;
        for (int i = 0; i < R; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Q f = m(i, c);
            for (int j = c; j < W; ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivcol.push_back(c);
        ++r;
    }
    if (rank_out) *rank_out = r;
    for (int i = r; i < R; ++i)
        for (int j = 0; j < K; ++j)
            if (m(i, C + j) != 0) return std::nullopt;
    Matrix x(C, K);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < K; ++j) x(pivcol[i], j) = m(i, C + j);
    return x;
}

std::optional<std::vector<Q>> solve(const Matrix& A, const std::vector<Q>& b) {
    if (int(b.size()) != A.rows) throw Error("dimension_mismatch", "right-hand side length");
    Matrix B(A.rows, 1);
    for (int i = 0; i < A.rows; ++i) B(i, 0) = b[i];
    auto x = solve(A, B);
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<Matrix> inverse(const Matrix& A) {
    if (A.rows != A.cols) throw Error("dimension_mismatch", "inverse needs a square matrix");
    int r = 0;
    auto x = solve(A, identity(A.rows), &r);
    if (!x || r != A.rows) return std::nullopt;
    return x;
}

}  // namespace wd
