#include "trisym/rlattice.hpp"

#include <stdexcept>

namespace trisym {

namespace {

std::vector<QQ> flatten(const std::vector<KElem>& v, int deg) {
    std::vector<QQ> out;
    out.reserve(v.size() * deg);
    for (const KElem& e : v) {
        out.push_back(e.x);
        if (deg == 2) out.push_back(e.y);
    }
    return out;
}

bool kvec_zero(const std::vector<KElem>& v) {
    for (const KElem& e : v)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace

PseudoBasis make_pseudo(const BaseField& F, int dim,
                        const std::vector<std::pair<FracIdealR, std::vector<KElem>>>& gens) {
    PseudoBasis B;
    B.d = F.d;
    B.dim = dim;
    for (const auto& [a, v] : gens) {
        if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("make_pseudo: dim");
        B.items.push_back({a, v});
    }
    return B;
}

std::vector<KElem> express_one(const BaseField& F, const std::vector<FracIdealR>& ideals) {
    int deg = F.degree();
    std::vector<std::vector<QQ>> rows;
    for (const FracIdealR& E : ideals)
        for (int i = 0; i < deg; ++i) {
            KElem b = E.basis_elem(i);
            rows.push_back(flatten({b}, deg));
        }
    ZZ D = 1;
    for (const auto& r : rows)
        for (const QQ& q : r) D = zz_lcm(D, q.get_den());
    ZMat A(static_cast<int>(rows.size()), deg);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < deg; ++j) A.at(static_cast<int>(i), j) = QQ(rows[i][j] * QQ(D)).get_num();
    ZMat H, U;
    int rank = 0;
    hnf_rows_transform(A, H, U, rank);
    // the sum must be R: H = D * identity
    bool ok = (rank == deg);
    for (int i = 0; ok && i < deg; ++i)
        for (int j = 0; j < deg; ++j)
            if (H.at(i, j) != (i == j ? D : ZZ(0))) ok = false;
    if (!ok) throw std::invalid_argument("express_one: ideals do not sum to R");
    std::vector<KElem> out(ideals.size(), F.elem(0));
    for (size_t src = 0, row = 0; src < ideals.size(); ++src)
        for (int i = 0; i < deg; ++i, ++row) {
            ZZ c = U.at(0, static_cast<int>(row));
            if (c != 0) out[src] = out[src] + QQ(c) * ideals[src].basis_elem(i);
        }
    KElem total = F.elem(0);
    for (const KElem& e : out) total = total + e;
    if (!(total == F.elem(1))) throw std::logic_error("express_one: decomposition failed");
    return out;
}

std::pair<KElem, KElem> coprime_pair(const BaseField& F, const FracIdealR& a,
                                     const FracIdealR& b) {
    FracIdealR ainv = ideal_inverse(a), binv = ideal_inverse(b);
    FracIdealR R = ring_of_integers(F);
    for (int rx = 1; rx <= 8; ++rx) {
        for (const KElem& x : a.shell(rx)) {
            if (x.is_zero()) continue;
            FracIdealR xa = ideal_mul(x, ainv);
            for (int ry = 1; ry <= 16; ++ry)
                for (const KElem& y : b.shell(ry)) {
                    if (y.is_zero()) continue;
                    FracIdealR yb = ideal_mul(y, binv);
                    if (ideal_sum(xa, yb) == R) return {x, y};
                }
        }
    }
    throw std::logic_error("coprime_pair: search exhausted");
}

PseudoBasis pseudo_hnf(const PseudoBasis& gens) {
    BaseField F = make_base_field(gens.d);
    int n = gens.dim;
    std::vector<PseudoBasis::Item> rows;
    for (const auto& it : gens.items)
        if (!kvec_zero(it.v)) rows.push_back(it);
    std::vector<PseudoBasis::Item> pivots;
    for (int j = 0; j < n; ++j) {
        std::vector<size_t> active;
        for (size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].v[j].is_zero()) active.push_back(i);
        if (active.empty()) throw std::invalid_argument("pseudo_hnf: rank deficient");
        // c = sum of v_i[j] * a_i
        FracIdealR c = ideal_mul(rows[active[0]].v[j], rows[active[0]].coeff);
        for (size_t t = 1; t < active.size(); ++t)
            c = ideal_sum(c, ideal_mul(rows[active[t]].v[j], rows[active[t]].coeff));
        FracIdealR cinv = ideal_inverse(c);
        std::vector<FracIdealR> Es;
        for (size_t i : active)
            Es.push_back(ideal_mul(rows[i].v[j], ideal_mul(rows[i].coeff, cinv)));
        std::vector<KElem> es = express_one(F, Es);
        std::vector<KElem> w(n, F.elem(0));
        for (size_t t = 0; t < active.size(); ++t) {
            KElem lambda = es[t] / rows[active[t]].v[j];
            if (lambda.is_zero()) continue;
            for (int k = 0; k < n; ++k) w[k] = w[k] + lambda * rows[active[t]].v[k];
        }
        if (!(w[j] == F.elem(1))) throw std::logic_error("pseudo_hnf: pivot not normalized");
        // clear coordinate j from the remaining rows
        std::vector<PseudoBasis::Item> next;
        for (auto& it : rows) {
            if (!it.v[j].is_zero()) {
                KElem f = it.v[j];
                for (int k = 0; k < n; ++k) it.v[k] = it.v[k] - f * w[k];
            }
            if (!kvec_zero(it.v)) next.push_back(it);
        }
        rows = std::move(next);
        pivots.push_back({c, w});
    }
    // canonical off-diagonal reduction: w_j[i] modulo the ideal c_i * c_j^-1
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) {
            FracIdealR m = ideal_mul(pivots[i].coeff, ideal_inverse(pivots[j].coeff));
            KElem e = pivots[j].v[i];
            std::vector<QQ> vec = F.degree() == 2 ? std::vector<QQ>{e.x, e.y}
                                                  : std::vector<QQ>{e.x};
            std::vector<QQ> red = m.lat.reduce_mod(vec);
            KElem delta = F.degree() == 2 ? F.elem(e.x - red[0], e.y - red[1])
                                          : F.elem(e.x - red[0]);
            if (!delta.is_zero())
                for (int k = 0; k < n; ++k)
                    pivots[j].v[k] = pivots[j].v[k] - delta * pivots[i].v[k];
        }
    PseudoBasis out;
    out.d = gens.d;
    out.dim = n;
    out.items = std::move(pivots);
    return out;
}

QLattice pseudo_to_zlattice(const PseudoBasis& B) {
    int deg = field_degree(B.d);
    int amb = B.dim * deg;
    std::vector<std::vector<QQ>> rows;
    for (const auto& it : B.items)
        for (int i = 0; i < deg; ++i) {
            KElem g = it.coeff.basis_elem(i);
            std::vector<KElem> scaled;
            scaled.reserve(it.v.size());
            for (const KElem& e : it.v) scaled.push_back(g * e);
            rows.push_back(flatten(scaled, deg));
        }
    return QLattice::from_generators(amb, rows);
}

std::vector<KElem> k_solve(long d, const std::vector<std::vector<KElem>>& basis,
                           const std::vector<KElem>& w) {
    // Gaussian elimination on the transposed system x * basis = w
    int n = static_cast<int>(basis.size());
    std::vector<std::vector<KElem>> A(n, std::vector<KElem>(n + 1, KElem(d, 0, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[j][i] = basis[i][j];  // column i: basis vector i
    for (int j = 0; j < n; ++j) A[j][n] = w[j];
    std::vector<int> perm(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!A[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("k_solve: singular basis");
        std::swap(A[col], A[piv]);
        KElem inv = k_inv(A[col][col]);
        for (int k = col; k <= n; ++k) A[col][k] = A[col][k] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            KElem f = A[r][col];
            for (int k = col; k <= n; ++k) A[r][k] = A[r][k] - f * A[col][k];
        }
    }
    std::vector<KElem> x(n, KElem(d, 0, 0));
    for (int i = 0; i < n; ++i) x[i] = A[i][n];
    return x;
}

FracIdealR module_index(const PseudoBasis& M, const PseudoBasis& N) {
    if (M.d != N.d || M.dim != N.dim) throw std::invalid_argument("module_index: shape mismatch");
    if (static_cast<int>(M.items.size()) != M.dim || static_cast<int>(N.items.size()) != N.dim)
        throw std::invalid_argument("module_index: need full pseudo-bases");
    BaseField F = make_base_field(M.d);
    std::vector<std::vector<KElem>> mb;
    for (const auto& it : M.items) mb.push_back(it.v);
    // g: columns are coordinates of N's vectors in M's vectors
    std::vector<std::vector<KElem>> g(M.dim, std::vector<KElem>(M.dim, F.elem(0)));
    for (int j = 0; j < N.dim; ++j) {
        std::vector<KElem> col = k_solve(M.d, mb, N.items[j].v);
        for (int i = 0; i < M.dim; ++i) g[i][j] = col[i];
    }
    // det by expansion via elimination over K
    KElem det = F.elem(1);
    std::vector<std::vector<KElem>> A = g;
    int n = M.dim;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!A[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("module_index: dependent vectors");
        if (piv != col) {
            std::swap(A[col], A[piv]);
            det = -det;
        }
        det = det * A[col][col];
        KElem inv = k_inv(A[col][col]);
        for (int r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            KElem f = A[r][col] * inv;
            for (int k = col; k < n; ++k) A[r][k] = A[r][k] - f * A[col][k];
        }
    }
    FracIdealR result = principal_ideal(F, det);
    for (const auto& it : N.items) result = ideal_mul(result, it.coeff);
    for (const auto& it : M.items) result = ideal_mul(result, ideal_inverse(it.coeff));
    return result;
}

SteinitzResult steinitz_normalize(const PseudoBasis& B_in) {
    BaseField F = make_base_field(B_in.d);
    PseudoBasis B = B_in;
    int n = static_cast<int>(B.items.size());
    if (B.dim != n) throw std::invalid_argument("steinitz_normalize: need a pseudo-basis");
    std::vector<std::vector<KElem>> T(n, std::vector<KElem>(n, F.elem(0)));
    for (int i = 0; i < n; ++i) T[i][i] = F.elem(1);
    FracIdealR R = ring_of_integers(F);
    for (int i = 0; i + 1 < n; ++i) {
        FracIdealR a = B.items[i].coeff, b = B.items[i + 1].coeff;
        if (a == R) continue;
        auto [x, y] = coprime_pair(F, a, b);
        // 1 = x x' + y y' with x' in a^-1, y' in b^-1
        FracIdealR xa = ideal_mul(x, ideal_inverse(a));
        FracIdealR yb = ideal_mul(y, ideal_inverse(b));
        std::vector<KElem> parts = express_one(F, {xa, yb});
        KElem xp = parts[0] / x, yp = parts[1] / y;
        // rows (u, v) -> (x u + y v, -y' u + x' v); det = 1
        std::vector<KElem> e(B.dim, F.elem(0)), f(B.dim, F.elem(0));
        for (int k = 0; k < B.dim; ++k) {
            e[k] = x * B.items[i].v[k] + y * B.items[i + 1].v[k];
            f[k] = -yp * B.items[i].v[k] + xp * B.items[i + 1].v[k];
        }
        std::vector<KElem> Te(n, F.elem(0)), Tf(n, F.elem(0));
        for (int k = 0; k < n; ++k) {
            Te[k] = x * T[i][k] + y * T[i + 1][k];
            Tf[k] = -yp * T[i][k] + xp * T[i + 1][k];
        }
        B.items[i].v = e;
        B.items[i].coeff = R;
        B.items[i + 1].v = f;
        B.items[i + 1].coeff = ideal_mul(a, b);
        T[i] = Te;
        T[i + 1] = Tf;
    }
    return {B, T};
}

KElem orient_eval(const Orientation& o, const std::vector<KElem>& w1,
                  const std::vector<KElem>& w2) {
    long d = o.declared.d;
    std::vector<KElem> c1 = k_solve(d, {o.v1, o.v2}, w1);
    std::vector<KElem> c2 = k_solve(d, {o.v1, o.v2}, w2);
    KElem det = c1[0] * c2[1] - c1[1] * c2[0];
    return det * o.declared;
}

}  // namespace trisym
