#include "trisym/qlattice.hpp"

#include <stdexcept>

namespace trisym {

namespace {

// common denominator scaling: returns integer matrix D*rows
ZMat scale_to_integers(const std::vector<std::vector<QQ>>& rows, int cols, ZZ& D) {
    D = 1;
    for (const auto& r : rows)
        for (const auto& q : r) D = zz_lcm(D, q.get_den());
    ZMat A(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) {
            QQ s = rows[i][j] * QQ(D);
            if (s.get_den() != 1) throw std::logic_error("scale_to_integers");
            A.at(static_cast<int>(i), j) = s.get_num();
        }
    return A;
}

}  // namespace

void QLattice::canonicalize_from(const std::vector<std::vector<QQ>>& gens) {
    ZZ D;
    ZMat A = scale_to_integers(gens, dim_, D);
    ZMat H = hnf_rows(A);
    if (H.rows != dim_) throw std::invalid_argument("QLattice: generators not full rank");
    basis_ = QMat(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            basis_.at(i, j) = QQ(H.at(i, j), D);
            basis_.at(i, j).canonicalize();
        }
}

QLattice QLattice::from_generators(int dim, const std::vector<std::vector<QQ>>& gens) {
    QLattice L;
    L.dim_ = dim;
    L.canonicalize_from(gens);
    return L;
}

QLattice QLattice::standard(int dim) {
    QLattice L;
    L.dim_ = dim;
    L.basis_ = QMat(dim, dim);
    for (int i = 0; i < dim; ++i) L.basis_.at(i, i) = 1;
    return L;
}

std::vector<QQ> QLattice::row(int i) const {
    std::vector<QQ> r(dim_);
    for (int j = 0; j < dim_; ++j) r[j] = basis_.at(i, j);
    return r;
}

std::vector<QQ> QLattice::coords(const std::vector<QQ>& v) const {
    // back-substitution against the upper-triangular basis
    std::vector<QQ> c(dim_), rem = v;
    for (int i = dim_ - 1; i >= 0; --i) {
        c[i] = rem[i] / basis_.at(i, i);
        for (int j = 0; j < dim_; ++j) rem[j] -= c[i] * basis_.at(i, j);
    }
    return c;
}

bool QLattice::contains(const std::vector<QQ>& v) const {
    for (const QQ& c : coords(v))
        if (c.get_den() != 1) return false;
    return true;
}

bool QLattice::contains(const QLattice& other) const {
    for (int i = 0; i < other.dim_; ++i)
        if (!contains(other.row(i))) return false;
    return true;
}

std::vector<QQ> QLattice::reduce_mod(const std::vector<QQ>& v) const {
    std::vector<QQ> c = coords(v), out = v;
    for (int i = 0; i < dim_; ++i) {
        ZZ f = qq_floor(c[i]);
        if (f == 0) continue;
        for (int j = 0; j < dim_; ++j) out[j] -= QQ(f) * basis_.at(i, j);
    }
    return out;
}

QQ QLattice::det_abs() const {
    QQ d = 1;
    for (int i = 0; i < dim_; ++i) d *= basis_.at(i, i);
    return d;
}

QLattice QLattice::sum(const QLattice& other) const {
    std::vector<std::vector<QQ>> gens;
    for (int i = 0; i < dim_; ++i) gens.push_back(row(i));
    for (int i = 0; i < other.dim_; ++i) gens.push_back(other.row(i));
    return from_generators(dim_, gens);
}

QLattice QLattice::dual() const {
    QMat inv = qmat_inverse(basis_);
    std::vector<std::vector<QQ>> gens(dim_, std::vector<QQ>(dim_));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) gens[i][j] = inv.at(j, i);  // transpose
    return from_generators(dim_, gens);
}

QLattice QLattice::intersect(const QLattice& other) const {
    // (A cap B)^* = A^* + B^* for full-rank lattices
    return dual().sum(other.dual()).dual();
}

QLattice QLattice::scaled(const QQ& c) const {
    if (c == 0) throw std::invalid_argument("QLattice::scaled: zero");
    std::vector<std::vector<QQ>> gens;
    for (int i = 0; i < dim_; ++i) {
        auto r = row(i);
        for (auto& x : r) x *= c;
        gens.push_back(std::move(r));
    }
    return from_generators(dim_, gens);
}

QLattice QLattice::apply(const QMat& T) const {
    std::vector<std::vector<QQ>> gens;
    for (int i = 0; i < dim_; ++i) {
        std::vector<QQ> r(dim_);
        for (int j = 0; j < dim_; ++j) {
            QQ s = 0;
            for (int k = 0; k < dim_; ++k) s += basis_.at(i, k) * T.at(k, j);
            r[j] = s;
        }
        gens.push_back(std::move(r));
    }
    return from_generators(dim_, gens);
}

QLattice QLattice::constrained(const QLattice& X, const QMat& T, const QLattice& target) {
    // x = c*BX with c integral; want c*(BX*T) = d*BT for integral d.
    int n = X.dim();
    std::vector<std::vector<QQ>> stacked;
    for (int i = 0; i < n; ++i) {
        std::vector<QQ> r(n);
        for (int j = 0; j < n; ++j) {
            QQ s = 0;
            for (int k = 0; k < n; ++k) s += X.basis_.at(i, k) * T.at(k, j);
            r[j] = s;
        }
        stacked.push_back(std::move(r));
    }
    for (int i = 0; i < n; ++i) {
        auto r = target.row(i);
        for (auto& x : r) x = -x;
        stacked.push_back(std::move(r));
    }
    ZZ D;
    ZMat A = scale_to_integers(stacked, n, D);
    ZMat K = left_kernel(A);
    // kernel rows: (c | d); the c-part applied to X's basis spans the result
    std::vector<std::vector<QQ>> gens;
    for (int i = 0; i < K.rows; ++i) {
        std::vector<QQ> v(n, QQ(0));
        bool nonzero = false;
        for (int k = 0; k < n; ++k) {
            if (K.at(i, k) == 0) continue;
            nonzero = true;
            for (int j = 0; j < n; ++j) v[j] += QQ(K.at(i, k)) * X.basis_.at(k, j);
        }
        if (nonzero) gens.push_back(std::move(v));
    }
    return from_generators(n, gens);
}

bool QLattice::lex_less(const QLattice& o) const {
    return basis_.a < o.basis_.a;
}

}  // namespace trisym
