#pragma once

#include <vector>

#include "trisym/rational.hpp"

namespace trisym {

// Dense row-major integer matrix, sized for the small lattices used here
// (at most 16 rows, 4 columns in practice).
struct ZMat {
    int rows = 0, cols = 0;
    std::vector<ZZ> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    ZZ& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const ZZ& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Row-style Hermite normal form.  Returns H with the rows of H spanning the
// same Z-module as the rows of A: echelon shape, positive pivots, entries
// above each pivot reduced into [0, pivot).  Zero rows are dropped.
ZMat hnf_rows(const ZMat& A);

// Same, but also produces a unimodular U (rows x rows) with U*A = H_full,
// where H_full keeps the zero rows at the bottom.  Rows of U below the rank
// span the left kernel of A.
void hnf_rows_transform(const ZMat& A, ZMat& H_full, ZMat& U, int& rank);

// Basis (rows) of { u : u*A = 0 } over Z.
ZMat left_kernel(const ZMat& A);

// Rational dense matrix helpers (row-major).
struct QMat {
    int rows = 0, cols = 0;
    std::vector<QQ> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    QQ& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const QQ& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

QMat qmat_mul(const QMat& A, const QMat& B);
QQ qmat_det(QMat A);
QMat qmat_inverse(QMat A);  // throws std::domain_error if singular

// Solve x*A = b for a row vector x (A square invertible).
std::vector<QQ> solve_left(const QMat& A, const std::vector<QQ>& b);

}  // namespace trisym
