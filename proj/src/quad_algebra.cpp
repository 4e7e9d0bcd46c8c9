#include "trisym/quad_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trisym/polyk.hpp"

namespace trisym {

LElem l_add(const LElem& a, const LElem& b) { return {a.x + b.x, a.y + b.y}; }
LElem l_sub(const LElem& a, const LElem& b) { return {a.x - b.x, a.y - b.y}; }
LElem l_neg(const LElem& a) { return {-a.x, -a.y}; }
LElem l_scale(const KElem& c, const LElem& a) { return {c * a.x, c * a.y}; }

LElem l_mul(const QuadAlgebra& S, const LElem& a, const LElem& b) {
    KElem yy = a.y * b.y;
    return {a.x * b.x - S.u * yy, a.x * b.y + a.y * b.x + S.t * yy};
}

LElem l_conj(const QuadAlgebra& S, const LElem& a) { return {a.x + S.t * a.y, -a.y}; }

KElem l_norm(const QuadAlgebra& S, const LElem& a) {
    return a.x * a.x + S.t * a.x * a.y + S.u * a.y * a.y;
}

KElem l_trace(const QuadAlgebra& S, const LElem& a) { return QQ(2) * a.x + S.t * a.y; }

LElem l_inv(const QuadAlgebra& S, const LElem& a) {
    KElem n = l_norm(S, a);
    if (n.is_zero()) throw std::domain_error("l_inv: zero or zero divisor");
    return l_scale(k_inv(n), l_conj(S, a));
}

LElem l_div(const QuadAlgebra& S, const LElem& a, const LElem& b) {
    return l_mul(S, a, l_inv(S, b));
}

LElem l_pow(const QuadAlgebra& S, const LElem& a, int e) {
    if (e < 0) return l_pow(S, l_inv(S, a), -e);
    LElem acc{KElem(S.base_d, 1, 0), KElem(S.base_d, 0, 0)};
    LElem base = a;
    while (e > 0) {
        if (e & 1) acc = l_mul(S, acc, base);
        base = l_mul(S, base, base);
        e >>= 1;
    }
    return acc;
}

QuadAlgebra make_quad_algebra_shift(const BaseField& F, const FracIdealR& a, const KElem& t,
                                    const KElem& u, KElem* shift_out) {
    FracIdealR ainv = ideal_inverse(a);
    FracIdealR ainv2 = ideal_mul(ainv, ainv);
    if (!ainv.contains(t)) throw std::invalid_argument("make_quad_algebra: t not in a^-1");
    if (!ainv2.contains(u)) throw std::invalid_argument("make_quad_algebra: u not in a^-2");
    KElem disc = t * t - QQ(4) * u;
    if (disc.is_zero()) throw std::invalid_argument("make_quad_algebra: degenerate discriminant");
    // canonical generator: translate xi by c in a^-1 so that t lands in the
    // canonical fundamental domain modulo 2a^-1
    QLattice two_ainv = ainv.lat.scaled(2);
    std::vector<QQ> tv = F.degree() == 2 ? std::vector<QQ>{t.x, t.y} : std::vector<QQ>{t.x};
    std::vector<QQ> red = two_ainv.reduce_mod(tv);
    KElem tc = F.degree() == 2 ? F.elem(red[0], red[1]) : F.elem(red[0]);
    KElem c = (tc - t) / F.elem(2);
    KElem uc = u + t * c + c * c;
    if (shift_out) *shift_out = c;
    QuadAlgebra S;
    S.base_d = F.d;
    S.steinitz = a;
    S.t = tc;
    S.u = uc;
    return S;
}

QuadAlgebra make_quad_algebra(const BaseField& F, const FracIdealR& a, const KElem& t,
                              const KElem& u) {
    return make_quad_algebra_shift(F, a, t, u, nullptr);
}

bool l_integral(const QuadAlgebra& S, const LElem& e) {
    BaseField F = make_base_field(S.base_d);
    return ring_of_integers(F).contains(e.x) && S.steinitz.contains(e.y);
}

std::vector<QQ> l_to_vec(const QuadAlgebra& S, const LElem& e) {
    if (field_degree(S.base_d) == 1) return {e.x.x, e.y.x};
    return {e.x.x, e.x.y, e.y.x, e.y.y};
}

LElem l_from_vec(const QuadAlgebra& S, const std::vector<QQ>& v) {
    long d = S.base_d;
    if (field_degree(d) == 1) return {KElem(d, v[0], 0), KElem(d, v[1], 0)};
    return {KElem(d, v[0], v[1]), KElem(d, v[2], v[3])};
}

namespace {

int l_dim(const QuadAlgebra& S) { return 2 * field_degree(S.base_d); }

// Z-basis of S as elements of L
std::vector<LElem> s_basis_elems(const QuadAlgebra& S) {
    BaseField F = make_base_field(S.base_d);
    std::vector<LElem> out;
    FracIdealR R = ring_of_integers(F);
    for (int i = 0; i < F.degree(); ++i) out.push_back({R.basis_elem(i), F.elem(0)});
    for (int i = 0; i < F.degree(); ++i) out.push_back({F.elem(0), S.steinitz.basis_elem(i)});
    return out;
}

// Q-basis of L: (1, w, xi, w xi)
std::vector<LElem> l_q_basis(const QuadAlgebra& S) {
    BaseField F = make_base_field(S.base_d);
    std::vector<LElem> out;
    out.push_back({F.elem(1), F.elem(0)});
    if (F.degree() == 2) out.push_back({F.omega(), F.elem(0)});
    out.push_back({F.elem(0), F.elem(1)});
    if (F.degree() == 2) out.push_back({F.elem(0), F.omega()});
    return out;
}

// matrix of right multiplication by g on coordinate row vectors
QMat mul_matrix(const QuadAlgebra& S, const LElem& g) {
    int n = l_dim(S);
    QMat T(n, n);
    auto basis = l_q_basis(S);
    for (int i = 0; i < n; ++i) {
        std::vector<QQ> row = l_to_vec(S, l_mul(S, basis[i], g));
        for (int j = 0; j < n; ++j) T.at(i, j) = row[j];
    }
    return T;
}

LElem lat_row_elem(const SIdeal& I, int i) {
    std::vector<QQ> v(I.lat.dim());
    for (int j = 0; j < I.lat.dim(); ++j) v[j] = I.lat.at(i, j);
    return l_from_vec(I.S, v);
}

}  // namespace

SIdeal s_unit_ideal(const QuadAlgebra& S) {
    std::vector<std::vector<QQ>> rows;
    for (const LElem& e : s_basis_elems(S)) rows.push_back(l_to_vec(S, e));
    SIdeal I;
    I.S = S;
    I.lat = QLattice::from_generators(l_dim(S), rows);
    return I;
}

SIdeal s_ideal_from_gens(const QuadAlgebra& S, const std::vector<LElem>& gens) {
    std::vector<std::vector<QQ>> rows;
    auto sb = s_basis_elems(S);
    bool any = false;
    for (const LElem& g : gens) {
        if (g.is_zero()) continue;
        any = true;
        for (const LElem& b : sb) rows.push_back(l_to_vec(S, l_mul(S, g, b)));
    }
    if (!any) throw std::invalid_argument("s_ideal_from_gens: all generators zero");
    SIdeal I;
    I.S = S;
    I.lat = QLattice::from_generators(l_dim(S), rows);
    return I;
}

SIdeal s_ideal_from_pair(const QuadAlgebra& S, const LElem& alpha, const LElem& beta) {
    BaseField F = make_base_field(S.base_d);
    FracIdealR R = ring_of_integers(F);
    std::vector<std::vector<QQ>> rows;
    for (int i = 0; i < F.degree(); ++i)
        rows.push_back(l_to_vec(S, l_scale(R.basis_elem(i), alpha)));
    for (int i = 0; i < F.degree(); ++i)
        rows.push_back(l_to_vec(S, l_scale(S.steinitz.basis_elem(i), beta)));
    SIdeal I;
    I.S = S;
    I.lat = QLattice::from_generators(l_dim(S), rows);
    // S-module check: a*xi stability suffices together with R-stability
    for (int i = 0; i < I.lat.dim(); ++i) {
        LElem v = lat_row_elem(I, i);
        for (const LElem& b : s_basis_elems(S))
            if (!I.lat.contains(l_to_vec(S, l_mul(S, v, b))))
                throw std::invalid_argument("s_ideal_from_pair: not an S-module");
    }
    return I;
}

SIdeal s_ideal_mul(const SIdeal& I, const SIdeal& J) {
    if (I.S != J.S) throw std::invalid_argument("s_ideal_mul: parent mismatch");
    int n = I.lat.dim();
    std::vector<std::vector<QQ>> rows;
    for (int i = 0; i < n; ++i) {
        LElem a = lat_row_elem(I, i);
        for (int j = 0; j < n; ++j) rows.push_back(l_to_vec(I.S, l_mul(I.S, a, lat_row_elem(J, j))));
    }
    SIdeal P;
    P.S = I.S;
    P.lat = QLattice::from_generators(n, rows);
    return P;
}

SIdeal s_ideal_scale(const LElem& g, const SIdeal& I) {
    if (l_norm(I.S, g).is_zero()) throw std::invalid_argument("s_ideal_scale: non-unit scalar");
    int n = I.lat.dim();
    std::vector<std::vector<QQ>> rows;
    for (int i = 0; i < n; ++i) rows.push_back(l_to_vec(I.S, l_mul(I.S, g, lat_row_elem(I, i))));
    SIdeal P;
    P.S = I.S;
    P.lat = QLattice::from_generators(n, rows);
    return P;
}

SIdeal s_ideal_pow(const SIdeal& I, int e) {
    if (e < 0) throw std::invalid_argument("s_ideal_pow: negative exponent");
    SIdeal acc = s_unit_ideal(I.S);
    for (int i = 0; i < e; ++i) acc = s_ideal_mul(acc, I);
    return acc;
}

bool s_ideal_contains(const SIdeal& I, const LElem& e) {
    return I.lat.contains(l_to_vec(I.S, e));
}

SIdeal s_colon(const SIdeal& A, const SIdeal& B) {
    if (A.S != B.S) throw std::invalid_argument("s_colon: parent mismatch");
    const QuadAlgebra& S = A.S;
    int n = A.lat.dim();
    // seed with the preimage under a non-zero-divisor of B
    int seed = -1;
    for (int i = 0; i < n; ++i)
        if (!l_norm(S, lat_row_elem(B, i)).is_zero()) {
            seed = i;
            break;
        }
    LElem g = seed >= 0 ? lat_row_elem(B, seed) : LElem{};
    if (seed < 0) {
        // fall back to a short combination
        for (int c0 = 0; c0 <= 2 && seed < 0; ++c0)
            for (int c1 = -2; c1 <= 2 && seed < 0; ++c1) {
                LElem cand = l_add(l_scale(KElem(S.base_d, c0, 0), lat_row_elem(B, 0)),
                                   l_scale(KElem(S.base_d, c1, 0), lat_row_elem(B, 1)));
                if (!l_norm(S, cand).is_zero()) {
                    g = cand;
                    seed = 0;
                }
            }
        if (seed < 0) throw std::invalid_argument("s_colon: B has no non-zero-divisor");
    }
    QLattice X = A.lat.apply(qmat_inverse(mul_matrix(S, g)));
    for (int i = 0; i < n; ++i) {
        LElem h = lat_row_elem(B, i);
        if (h.is_zero()) continue;
        X = QLattice::constrained(X, mul_matrix(S, h), A.lat);
    }
    SIdeal C;
    C.S = S;
    C.lat = X;
    return C;
}

bool is_invertible(const SIdeal& I) {
    SIdeal J = s_colon(s_unit_ideal(I.S), I);
    return s_ideal_mul(I, J) == s_unit_ideal(I.S);
}

PseudoBasis s_ideal_pseudo_basis(const SIdeal& I) {
    BaseField F = make_base_field(I.S.base_d);
    std::vector<std::pair<FracIdealR, std::vector<KElem>>> gens;
    FracIdealR R = ring_of_integers(F);
    for (int i = 0; i < I.lat.dim(); ++i) {
        LElem e = lat_row_elem(I, i);
        gens.push_back({R, {e.x, e.y}});
    }
    return pseudo_hnf(make_pseudo(F, 2, gens));
}

KElem wedge(const LElem& a, const LElem& b) { return a.x * b.y - a.y * b.x; }

FracIdealR s_ideal_norm(const SIdeal& I) {
    BaseField F = make_base_field(I.S.base_d);
    PseudoBasis pb = s_ideal_pseudo_basis(I);
    LElem eta1{pb.items[0].v[0], pb.items[0].v[1]};
    LElem eta2{pb.items[1].v[0], pb.items[1].v[1]};
    KElem det = wedge(eta1, eta2);
    FracIdealR out = principal_ideal(F, det);
    out = ideal_mul(out, pb.items[0].coeff);
    out = ideal_mul(out, pb.items[1].coeff);
    out = ideal_mul(out, ideal_inverse(I.S.steinitz));
    return out;
}

std::pair<LElem, LElem> decompose_r_a(const SIdeal& I, const KElem& s_target) {
    BaseField F = make_base_field(I.S.base_d);
    PseudoBasis pb = s_ideal_pseudo_basis(I);
    SteinitzResult st = steinitz_normalize(pb);
    FracIdealR prod = st.basis.items[1].coeff;  // b1*b2
    auto kappa0 = is_principal(F, ideal_mul(prod, ideal_inverse(I.S.steinitz)));
    if (!kappa0)
        throw std::invalid_argument("decompose_r_a: Steinitz class of I differs from [a]");
    LElem alpha{st.basis.items[0].v[0], st.basis.items[0].v[1]};
    LElem beta{*kappa0 * st.basis.items[1].v[0], *kappa0 * st.basis.items[1].v[1]};
    KElem s0 = wedge(alpha, beta);
    if (s0.is_zero()) throw std::logic_error("decompose_r_a: degenerate decomposition");
    KElem unit = s_target / s0;
    if (!is_unit_in_R(F, unit))
        throw std::invalid_argument("decompose_r_a: s_target does not generate [S:I]_R");
    alpha = l_scale(unit, alpha);
    if (s_ideal_from_pair(I.S, alpha, beta) != I)
        throw std::logic_error("decompose_r_a: decomposition does not span I");
    return {alpha, beta};
}

KElem based_ideal_norm(const SIdeal& I, const LElem& alpha, const LElem& beta) {
    if (s_ideal_from_pair(I.S, alpha, beta) != I)
        throw std::invalid_argument("based_ideal_norm: pair does not decompose I");
    return wedge(alpha, beta);
}

BalanceReport verify_balanced(const BalancedQuadruple& q) {
    BalanceReport rep;
    BaseField F = make_base_field(q.S.base_d);
    if (q.s.is_zero() || l_norm(q.S, q.delta).is_zero()) return rep;
    SIdeal I3 = s_ideal_pow(q.I, 3);
    SIdeal deltaS = s_ideal_scale(q.delta, s_unit_ideal(q.S));
    rep.cube_contained = deltaS.lat.contains(I3.lat);
    rep.norm_matches = (s_ideal_norm(q.I) == principal_ideal(F, q.s));
    rep.s_cubed_matches = (q.s * q.s * q.s == l_norm(q.S, q.delta));
    rep.decomposition_ok = false;
    try {
        rep.decomposition_ok =
            (s_ideal_from_pair(q.S, q.alpha, q.beta) == q.I) && (wedge(q.alpha, q.beta) == q.s);
    } catch (const std::invalid_argument&) {
        rep.decomposition_ok = false;
    }
    return rep;
}

BalancedQuadruple twist_quadruple(const BalancedQuadruple& q, const LElem& kappa) {
    if (kappa.is_zero() || l_norm(q.S, kappa).is_zero())
        throw std::invalid_argument("twist_quadruple: kappa not invertible");
    BalancedQuadruple out;
    out.S = q.S;
    out.alpha = l_mul(q.S, kappa, q.alpha);
    out.beta = l_mul(q.S, kappa, q.beta);
    out.I = s_ideal_scale(kappa, q.I);
    out.delta = l_mul(q.S, l_pow(q.S, kappa, 3), q.delta);
    out.s = l_norm(q.S, kappa) * q.s;
    return out;
}

Specification specification(const BaseField& F, const KElem& Delta) {
    if (Delta.is_zero()) throw std::invalid_argument("specification: Delta = 0");
    Specification spec;
    for (int emb = 0; emb < F.r1; ++emb) {
        int s = (F.d == 0) ? sgn(Delta.x) : real_sign(Delta, emb);
        spec.sigma.push_back(s);
        if (s > 0)
            ++spec.s1;
        else
            ++spec.s2;
    }
    return spec;
}

bool has_cube_roots_of_unity(const BaseField& F, const QuadAlgebra& S) {
    // z^2 + z + 1 = 0 with z = a + b*xi in S.
    // b = 0: a^2 + a + 1 = 0 in K, a in R.
    KPoly p{F.elem(1), F.elem(1), F.elem(1)};
    FracIdealR R = ring_of_integers(F);
    for (const KElem& a : roots_in_K(F.d, p))
        if (R.contains(a)) return true;
    // b != 0: forces b^2 = -3/disc and a = -(t b + 1)/2
    KElem disc = S.disc();
    KElem target = F.elem(-3) / disc;
    for (const KElem& b : k_sqrt(target)) {
        if (b.is_zero()) continue;
        KElem a = -(S.t * b + F.elem(1)) / F.elem(2);
        if (R.contains(a) && S.steinitz.contains(b)) return true;
    }
    return false;
}

UnitCubeProfile unit_cube_profile(const BaseField& F, const QuadAlgebra& S) {
    UnitCubeProfile P;
    P.domain = k_sqrt(S.disc()).empty();
    P.spec = specification(F, S.disc());
    if (!P.domain) return P;
    bool base_has_mu3 = (F.d == -3);
    P.epsilon = (has_cube_roots_of_unity(F, S) && !base_has_mu3) ? 1 : 0;
    long norm_one = 1;
    for (int i = 0; i < P.epsilon + P.spec.s1; ++i) norm_one *= 3;
    P.norm_one_units_mod_cubes = norm_one;
    long base_units_mod_cubes = 1;
    for (int i = 0; i < F.r1 + F.r2 - 1; ++i) base_units_mod_cubes *= 3;
    if (base_has_mu3) base_units_mod_cubes *= 3;
    P.units_mod_cubes = norm_one * base_units_mod_cubes;
    return P;
}

std::vector<LElem> l_sqrt(const QuadAlgebra& S, const LElem& e) {
    long d = S.base_d;
    std::vector<LElem> out;
    auto push = [&](const LElem& g) {
        if (l_mul(S, g, g) == e && std::find(out.begin(), out.end(), g) == out.end())
            out.push_back(g);
    };
    if (e.y.is_zero())
        for (const KElem& x : k_sqrt(e.x)) push({x, KElem(d, 0, 0)});
    // y != 0: (t^2-4u) y^4 - (2 e.y t + 4 e.x) y^2 + e.y^2 = 0
    KElem A = S.disc();
    KElem B = -(QQ(2) * e.y * S.t + QQ(4) * e.x);
    KElem C = e.y * e.y;
    KElem qd = B * B - QQ(4) * A * C;
    for (const KElem& sq : k_sqrt(qd)) {
        KElem t2 = (sq - B) / (QQ(2) * A);
        for (const KElem& y : k_sqrt(t2)) {
            if (y.is_zero()) continue;
            KElem x = (e.y - S.t * y * y) / (QQ(2) * y);
            push({x, y});
        }
    }
    return out;
}

std::vector<LElem> l_cbrt(const QuadAlgebra& S, const LElem& e) {
    long d = S.base_d;
    std::vector<LElem> out;
    auto push = [&](const LElem& g) {
        if (l_mul(S, l_mul(S, g, g), g) == e && std::find(out.begin(), out.end(), g) == out.end())
            out.push_back(g);
    };
    if (e.is_zero()) {
        push({KElem(d, 0, 0), KElem(d, 0, 0)});
        return out;
    }
    // g in K: g^3 = e.x, e.y = 0
    if (e.y.is_zero())
        for (const KElem& r : k_cbrt(e.x)) push({r, KElem(d, 0, 0)});
    // g with trace tau and norm nu: nu^3 = N(e), tau^3 - 3 nu tau = Tr(e)
    KElem Ne = l_norm(S, e), Te = l_trace(S, e);
    for (const KElem& nu : k_cbrt(Ne)) {
        KPoly taupoly{-Te, QQ(-3) * nu, KElem(d, 0, 0), KElem(d, 1, 0)};
        for (const KElem& tau : roots_in_K(d, taupoly)) {
            KElem dd = tau * tau - nu;
            if (!dd.is_zero()) {
                LElem g = l_scale(k_inv(dd), l_add(e, LElem{tau * nu, KElem(d, 0, 0)}));
                push(g);
            } else {
                // g is a root of z^2 - tau z + nu
                KElem qd = tau * tau - QQ(4) * nu;
                for (const LElem& sq : l_sqrt(S, LElem{qd, KElem(d, 0, 0)})) {
                    LElem g = l_scale(k_inv(KElem(d, 2, 0)), l_add(LElem{tau, KElem(d, 0, 0)}, sq));
                    push(g);
                }
            }
        }
    }
    return out;
}

std::optional<LElem> s_is_principal(const SIdeal& I) {
    const QuadAlgebra& S = I.S;
    if (S.base_d != 0)
        throw std::invalid_argument("s_is_principal: implemented over the rational base only");
    BaseField F = make_base_field(0);
    FracIdealR nrm = s_ideal_norm(I);
    QQ n0 = abs(nrm.lat.at(0, 0));
    LElem w0 = lat_row_elem(I, 0), w1 = lat_row_elem(I, 1);
    auto check = [&](const LElem& g) -> bool {
        if (g.is_zero() || l_norm(S, g).is_zero()) return false;
        QQ n = l_norm(S, g).x;
        if (n != n0 && n != -n0) return false;
        return s_ideal_scale(g, s_unit_ideal(S)) == I;
    };
    QQ discq = S.disc().x;
    if (discq < 0) {
        QQ A = l_norm(S, w0).x, C = l_norm(S, w1).x;
        QQ B = l_norm(S, l_add(w0, w1)).x - A - C;
        QQ det4 = 4 * A * C - B * B;
        auto bound = [&](const QQ& t) {
            QQ box = 4 * t * n0 / det4;
            double v = std::sqrt(std::max(0.0, box.get_d()));
            return static_cast<int>(std::floor(v + 1.0));
        };
        int B0 = bound(C), B1 = bound(A);
        for (int c0 = 0; c0 <= B0; ++c0)
            for (int c1 = -B1; c1 <= B1; ++c1) {
                if (c0 == 0 && c1 <= 0) continue;
                LElem g = l_add(l_scale(F.elem(c0), w0), l_scale(F.elem(c1), w1));
                if (check(g)) return g;
            }
        return std::nullopt;
    }
    // indefinite: scale candidates into a window fixed by the fundamental
    // automorph of the order, then box the embeddings
    ZZ Tz, Uz;
    {
        QQ Dq = discq;
        ZZ D = Dq.get_num();  // disc of the order, integral
        bool found = false;
        for (ZZ Uu = 1; Uu <= 2000000 && !found; ++Uu)
            for (int sgn4 : {4, -4}) {
                ZZ t2 = D * Uu * Uu + sgn4;
                if (t2 < 0) continue;
                if (is_perfect_square(t2)) {
                    Tz = isqrt_floor(t2);
                    Uz = Uu;
                    found = true;
                    break;
                }
            }
        if (!found) throw std::logic_error("s_is_principal: no fundamental automorph found");
    }
    double sD = std::sqrt(discq.get_d());
    double xi1 = (S.t.x.get_d() + sD) / 2, xi2 = (S.t.x.get_d() - sD) / 2;
    double eps1 = (Tz.get_d() + Uz.get_d() * sD) / 2;
    double sqN = std::sqrt(n0.get_d());
    double bound_emb = sqN * eps1 * 1.0000001 + 1.0;
    auto emb = [&](const LElem& g, double xiv) { return g.x.x.get_d() + g.y.x.get_d() * xiv; };
    double w0e1 = emb(w0, xi1), w0e2 = emb(w0, xi2), w1e1 = emb(w1, xi1), w1e2 = emb(w1, xi2);
    double det = w0e1 * w1e2 - w0e2 * w1e1;
    int B0 = static_cast<int>(bound_emb * (std::abs(w1e2) + std::abs(w1e1)) / std::abs(det)) + 2;
    int B1 = static_cast<int>(bound_emb * (std::abs(w0e2) + std::abs(w0e1)) / std::abs(det)) + 2;
    for (int c0 = 0; c0 <= B0; ++c0)
        for (int c1 = -B1; c1 <= B1; ++c1) {
            if (c0 == 0 && c1 <= 0) continue;
            LElem g = l_add(l_scale(F.elem(c0), w0), l_scale(F.elem(c1), w1));
            if (check(g)) return g;
        }
    return std::nullopt;
}

std::optional<QuadrupleWitness> quadruples_equivalent(const BalancedQuadruple& q1,
                                                      const BalancedQuadruple& q2,
                                                      bool allow_reorientation) {
    BaseField F = make_base_field(q1.S.base_d);
    if (q1.S.base_d != q2.S.base_d || q1.S.steinitz != q2.S.steinitz) return std::nullopt;
    FracIdealR ainv = ideal_inverse(q1.S.steinitz);
    std::vector<KElem> nus =
        allow_reorientation ? unit_candidates(F, 2) : std::vector<KElem>{F.elem(1)};
    for (const KElem& nu : nus) {
        // phi: S1 -> S2, xi1 -> mu + nu*xi2
        KElem mu = (q1.S.t - nu * q2.S.t) / F.elem(2);
        if (!ainv.contains(mu)) continue;
        if (!(mu * mu - nu * nu * q2.S.u == q1.S.t * mu - q1.S.u)) continue;
        auto phi = [&](const LElem& e) -> LElem { return {e.x + e.y * mu, e.y * nu}; };
        LElem phidelta = phi(q1.delta);
        if (l_norm(q2.S, phidelta).is_zero()) continue;
        LElem ratio = l_div(q2.S, q2.delta, phidelta);
        for (const LElem& kappa : l_cbrt(q2.S, ratio)) {
            if (l_norm(q2.S, kappa).is_zero()) continue;
            if (!(l_norm(q2.S, kappa) * q1.s == q2.s)) continue;
            // I2 == kappa * phi(I1)
            std::vector<LElem> gens;
            for (int i = 0; i < q1.I.lat.dim(); ++i)
                gens.push_back(l_mul(q2.S, kappa, phi(lat_row_elem(q1.I, i))));
            std::vector<std::vector<QQ>> rows;
            for (const LElem& g : gens) rows.push_back(l_to_vec(q2.S, g));
            QLattice img = QLattice::from_generators(q2.I.lat.dim(), rows);
            if (img == q2.I.lat) return QuadrupleWitness{nu, mu, kappa};
        }
    }
    return std::nullopt;
}

}  // namespace trisym
