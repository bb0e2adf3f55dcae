#include "hopf/matrix.hpp"

namespace hopf {

std::vector<int> rowReduce(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m[i][col].isZero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(m.a[p], m.a[row]);
        Cyc inv = m[row][col].inv();
        for (int j = col; j < m.cols; ++j) m[row][j] *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m[i][col].isZero()) continue;
            Cyc f = m[i][col];
            for (int j = col; j < m.cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rowReduce(m).size()); }

std::vector<std::vector<Cyc>> kernelBasis(Matrix m) {
    std::vector<int> pivots = rowReduce(m);
    std::vector<bool> isPivot(m.cols, false);
    for (int c : pivots) isPivot[c] = true;
    std::vector<std::vector<Cyc>> basis;
    for (int freeCol = 0; freeCol < m.cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Cyc> v(m.cols, Cyc(0));
        v[freeCol] = Cyc(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[static_cast<int>(r)][freeCol];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Cyc>> solve(Matrix m, std::vector<Cyc> b) {
    int n = m.cols;
    Matrix aug(m.rows, n + 1);
    for (int i = 0; i < m.rows; ++i) {
        aug.a[i] = std::move(m.a[i]);
        aug.a[i].push_back(b[i]);
    }
    std::vector<int> pivots = rowReduce(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt; // 0 = 1 row
    std::vector<Cyc> x(n, Cyc(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug[static_cast<int>(r)][n];
    return x;
}

std::optional<Matrix> leftInverse(const Matrix& basisRows) {
    // Row i of E solves B x = delta_i, so that (E B^T)_{ij} = delta_{ij}.
    int k = basisRows.rows, n = basisRows.cols;
    Matrix e(k, n);
    for (int i = 0; i < k; ++i) {
        Matrix bm(k, n);
        for (int r = 0; r < k; ++r) bm.a[r] = basisRows.a[r];
        std::vector<Cyc> d(k, Cyc(0));
        d[i] = Cyc(1);
        auto sol = solve(std::move(bm), std::move(d));
        if (!sol) return std::nullopt;
        e.a[i] = std::move(*sol);
    }
    return e;
}

} // namespace hopf
