#pragma once

#include "hopf/sparse.hpp"

#include <optional>

namespace hopf {

// Dense exact matrix over Q(zeta); only used for the linear-algebra
// fallbacks (coinvariant kernels, coordinate maps, convolution-inverse
// solves), never in the verification hot loops.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<Cyc>> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(r, std::vector<Cyc>(c, Cyc(0))) {}

    std::vector<Cyc>& operator[](int i) { return a[i]; }
    const std::vector<Cyc>& operator[](int i) const { return a[i]; }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rowReduce(Matrix& m);

int rank(Matrix m);

// Basis of the right kernel {x : m x = 0}, as rows.
std::vector<std::vector<Cyc>> kernelBasis(Matrix m);

// Solves m x = b; std::nullopt when inconsistent. Free variables are 0.
std::optional<std::vector<Cyc>> solve(Matrix m, std::vector<Cyc> b);

// Left inverse E with E * B^T = Id for a full-row-rank matrix B whose rows
// are independent vectors; used to express vectors in a subspace basis.
std::optional<Matrix> leftInverse(const Matrix& basisRows);

} // namespace hopf
