#include "trisym/zmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace trisym {

std::vector<ZZ> positive_divisors(const ZZ& n) {
    if (n == 0) throw std::invalid_argument("positive_divisors: zero");
    std::vector<ZZ> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        size_t base = divs.size();
        ZZ pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::pair<ZZ, int>> factor_integer(const ZZ& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero");
    ZZ m = abs(n);
    std::vector<std::pair<ZZ, int>> out;
    auto strip = [&](const ZZ& p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    ZZ p = 5;
    while (p * p <= m) {
        strip(p);
        strip(p + 2);
        p += 6;
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

namespace {

void swap_rows(ZMat& M, int i, int j) {
    if (i == j) return;
    for (int k = 0; k < M.cols; ++k) std::swap(M.at(i, k), M.at(j, k));
}

void addmul_row(ZMat& M, int dst, int src, const ZZ& c) {
    if (c == 0) return;
    for (int k = 0; k < M.cols; ++k) M.at(dst, k) += c * M.at(src, k);
}

// Core HNF; when U != nullptr it is maintained alongside (starts as identity).
void hnf_core(ZMat& M, ZMat* U, int& rank) {
    int m = M.rows, n = M.cols;
    int r = 0;
    for (int j = 0; j < n && r < m; ++j) {
        // clear column j below row r using extended gcd steps
        while (true) {
            int piv = -1;
            for (int i = r; i < m; ++i)
                if (M.at(i, j) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) break;
            swap_rows(M, r, piv);
            if (U) swap_rows(*U, r, piv);
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (M.at(i, j) == 0) continue;
                ZZ u, v;
                ZZ g = zz_gcdext(M.at(r, j), M.at(i, j), u, v);
                ZZ s = M.at(r, j) / g, t = M.at(i, j) / g;
                // rows (r, i) <- (u*r + v*i, -t*r + s*i); determinant 1
                for (int k = 0; k < n; ++k) {
                    ZZ x = M.at(r, k), y = M.at(i, k);
                    M.at(r, k) = u * x + v * y;
                    M.at(i, k) = s * y - t * x;
                }
                if (U) {
                    for (int k = 0; k < U->cols; ++k) {
                        ZZ x = U->at(r, k), y = U->at(i, k);
                        U->at(r, k) = u * x + v * y;
                        U->at(i, k) = s * y - t * x;
                    }
                }
                clean = false;
            }
            if (clean) break;
        }
        if (M.at(r, j) == 0) continue;
        if (M.at(r, j) < 0) {
            for (int k = 0; k < n; ++k) M.at(r, k) = -M.at(r, k);
            if (U)
                for (int k = 0; k < U->cols; ++k) U->at(r, k) = -U->at(r, k);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            ZZ q;
            mpz_fdiv_q(q.get_mpz_t(), M.at(i, j).get_mpz_t(), M.at(r, j).get_mpz_t());
            addmul_row(M, i, r, -q);
            if (U) addmul_row(*U, i, r, -q);
        }
        ++r;
    }
    rank = r;
}

}  // namespace

ZMat hnf_rows(const ZMat& A) {
    ZMat M = A;
    int rank = 0;
    hnf_core(M, nullptr, rank);
    ZMat H(rank, A.cols);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < A.cols; ++j) H.at(i, j) = M.at(i, j);
    return H;
}

void hnf_rows_transform(const ZMat& A, ZMat& H_full, ZMat& U, int& rank) {
    H_full = A;
    U = ZMat(A.rows, A.rows);
    for (int i = 0; i < A.rows; ++i) U.at(i, i) = 1;
    hnf_core(H_full, &U, rank);
}

ZMat left_kernel(const ZMat& A) {
    ZMat H, U;
    int rank = 0;
    hnf_rows_transform(A, H, U, rank);
    ZMat K(A.rows - rank, A.rows);
    for (int i = rank; i < A.rows; ++i)
        for (int j = 0; j < A.rows; ++j) K.at(i - rank, j) = U.at(i, j);
    return K;
}

QMat qmat_mul(const QMat& A, const QMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("qmat_mul: shape");
    QMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A.at(i, k) == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return C;
}

QQ qmat_det(QMat A) {
    if (A.rows != A.cols) throw std::invalid_argument("qmat_det: not square");
    QQ det = 1;
    int n = A.rows;
    for (int j = 0; j < n; ++j) {
        int piv = -1;
        for (int i = j; i < n; ++i)
            if (A.at(i, j) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return QQ(0);
        if (piv != j) {
            for (int k = 0; k < n; ++k) std::swap(A.at(piv, k), A.at(j, k));
            det = -det;
        }
        det *= A.at(j, j);
        QQ inv = 1 / A.at(j, j);
        for (int i = j + 1; i < n; ++i) {
            QQ f = A.at(i, j) * inv;
            if (f == 0) continue;
            for (int k = j; k < n; ++k) A.at(i, k) -= f * A.at(j, k);
        }
    }
    return det;
}

QMat qmat_inverse(QMat A) {
    if (A.rows != A.cols) throw std::invalid_argument("qmat_inverse: not square");
    int n = A.rows;
    QMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    for (int j = 0; j < n; ++j) {
        int piv = -1;
        for (int i = j; i < n; ++i)
            if (A.at(i, j) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("qmat_inverse: singular");
        if (piv != j)
            for (int k = 0; k < n; ++k) {
                std::swap(A.at(piv, k), A.at(j, k));
                std::swap(I.at(piv, k), I.at(j, k));
            }
        QQ inv = 1 / A.at(j, j);
        for (int k = 0; k < n; ++k) {
            A.at(j, k) *= inv;
            I.at(j, k) *= inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == j || A.at(i, j) == 0) continue;
            QQ f = A.at(i, j);
            for (int k = 0; k < n; ++k) {
                A.at(i, k) -= f * A.at(j, k);
                I.at(i, k) -= f * I.at(j, k);
            }
        }
    }
    return I;
}

std::vector<QQ> solve_left(const QMat& A, const std::vector<QQ>& b) {
    QMat inv = qmat_inverse(A);
    std::vector<QQ> x(A.rows);
    for (int j = 0; j < A.rows; ++j) {
        QQ s = 0;
        for (int i = 0; i < A.rows; ++i) s += b[i] * inv.at(i, j);
        x[j] = s;
    }
    return x;
}

}  // namespace trisym
