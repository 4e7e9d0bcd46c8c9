#include "trisym/polyk.hpp"

#include <algorithm>
#include <stdexcept>

namespace trisym {

namespace {

void kpoly_trim(KPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

KPoly kpoly_mul(long d, const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly c(a.size() + b.size() - 1, KElem(d, 0, 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}

// deflate p by a known root: p = (z - r) * q
KPoly deflate(long d, const KPoly& p, const KElem& r) {
    int n = kpoly_degree(p);
    KPoly q(n, KElem(d, 0, 0));
    KElem carry = p[n];
    for (int i = n - 1; i >= 0; --i) {
        q[i] = carry;
        carry = p[i] + carry * r;
    }
    return q;
}

std::vector<QQ> rational_roots_q(const std::vector<QQ>& coeffs) {
    // clear denominators, strip content, apply the rational root theorem
    ZZ den = 1;
    for (const QQ& c : coeffs) den = zz_lcm(den, c.get_den());
    std::vector<ZZ> ic;
    for (const QQ& c : coeffs) {
        QQ s = c * QQ(den);
        ic.push_back(s.get_num());
    }
    return rational_roots(ic);
}

std::vector<KElem> quadratic_roots(long d, const KElem& c0, const KElem& c1, const KElem& c2) {
    // c2 z^2 + c1 z + c0, c2 != 0
    std::vector<KElem> out;
    KElem disc = c1 * c1 - QQ(4) * (c2 * c0);
    for (const KElem& s : k_sqrt(disc)) {
        KElem z = (s - c1) / (QQ(2) * c2);
        if (out.empty() || !(out[0] == z)) out.push_back(z);
    }
    return out;
}

// degree-6 (or lower) primitive integer polynomial: all monic rational
// quadratic factors' roots that lie in K.  Used by the norm method.
std::vector<KElem> roots_from_quadratic_factors(long d, const std::vector<ZZ>& P) {
    std::vector<KElem> out;
    int n = static_cast<int>(P.size()) - 1;
    if (n < 2) return out;
    const ZZ& lead = P[n];
    const ZZ& cst = P[0];
    if (cst == 0) return out;  // z-powers are stripped by the caller
    // root bound: |z0| <= 1 + max |P_i / P_n|
    QQ rho = 0;
    for (int i = 0; i < n; ++i) rho = std::max(rho, QQ(abs(P[i]), abs(lead)));
    rho += 1;
    auto divs_lead = positive_divisors(lead);
    auto divs_cst = positive_divisors(cst);
    long long budget = 2000000;
    for (const ZZ& e : divs_lead) {
        ZZ fmaxz = qq_floor(2 * rho * QQ(e)) + 1;
        for (const ZZ& gabs : divs_cst)
            for (int gs : {1, -1}) {
                ZZ g = gs * gabs;
                for (ZZ f = -fmaxz; f <= fmaxz; ++f) {
                    if (--budget < 0) throw std::runtime_error("quadratic factor search budget");
                    // trial divide P by e z^2 + f z + g over Q
                    std::vector<QQ> rem(P.size());
                    for (size_t i = 0; i < P.size(); ++i) rem[i] = QQ(P[i]);
                    bool ok = true;
                    for (int i = n; i >= 2; --i) {
                        QQ q = rem[i] / QQ(e);
                        rem[i] = 0;
                        rem[i - 1] -= q * QQ(f);
                        rem[i - 2] -= q * QQ(g);
                    }
                    if (rem[0] != 0 || rem[1] != 0) ok = false;
                    if (!ok) continue;
                    for (const KElem& z : quadratic_roots(
                             d, KElem(d, QQ(g, e), 0), KElem(d, QQ(f, e), 0), KElem(d, 1, 0)))
                        out.push_back(z);
                }
            }
    }
    return out;
}

}  // namespace

int kpoly_degree(const KPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

KElem kpoly_eval(const KPoly& p, const KElem& z) {
    KElem acc(z.d, 0, 0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * z + p[i];
    return acc;
}

std::vector<QQ> rational_roots(const std::vector<ZZ>& coeffs_in) {
    std::vector<ZZ> c = coeffs_in;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<QQ> out;
    // strip z | p
    size_t shift = 0;
    while (shift < c.size() && c[shift] == 0) ++shift;
    if (shift > 0) {
        out.emplace_back(0);
        c.erase(c.begin(), c.begin() + shift);
    }
    if (c.size() <= 1) return out;
    ZZ content = 0;
    for (const ZZ& z : c) content = zz_gcd(content, z);
    for (ZZ& z : c) z /= content;
    auto eval = [&](const QQ& q) {
        QQ acc = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * q + QQ(c[i]);
        return acc;
    };
    for (const ZZ& pnum : positive_divisors(c.front()))
        for (const ZZ& qden : positive_divisors(c.back()))
            for (int s : {1, -1}) {
                QQ cand(s * pnum, qden);
                cand.canonicalize();
                if (eval(cand) == 0 &&
                    std::find(out.begin(), out.end(), cand) == out.end())
                    out.push_back(cand);
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<KElem> roots_in_K(long d, const KPoly& p_in) {
    KPoly p = p_in;
    kpoly_trim(p);
    int deg = kpoly_degree(p);
    if (deg < 0) throw std::invalid_argument("roots_in_K: zero polynomial");
    if (deg > 3) throw std::invalid_argument("roots_in_K: degree > 3");
    std::vector<KElem> out;
    auto push_unique = [&](const KElem& z) {
        if (std::find(out.begin(), out.end(), z) == out.end() &&
            kpoly_eval(p, z).is_zero())
            out.push_back(z);
    };
    if (deg == 0) return out;
    // strip a root at zero
    if (p[0].is_zero()) {
        push_unique(KElem(d, 0, 0));
        KPoly q(p.begin() + 1, p.end());
        for (const KElem& z : roots_in_K(d, q)) push_unique(z);
        return out;
    }
    if (deg == 1) {
        push_unique(-p[0] / p[1]);
        return out;
    }
    if (deg == 2) {
        for (const KElem& z : quadratic_roots(d, p[0], p[1], p[2])) push_unique(z);
        return out;
    }
    // cubic
    bool rational_coeffs = true;
    for (const KElem& c : p)
        if (!c.is_rational()) rational_coeffs = false;
    if (d == 0 || rational_coeffs) {
        std::vector<QQ> qc;
        for (const KElem& c : p) qc.push_back(c.x);
        for (const QQ& r : rational_roots_q(qc)) push_unique(KElem(d, r, 0));
        if (d != 0) {
            // a rational linear factor may hide quadratic roots in K
            if (!out.empty()) {
                KPoly q = deflate(d, p, out[0]);
                for (const KElem& z : roots_in_K(d, q)) push_unique(z);
            }
        }
        return out;
    }
    // genuine K-coefficients: norm down to Q[z] of degree 6 and lift factors
    KPoly pbar;
    for (const KElem& c : p) pbar.push_back(k_conj(c));
    KPoly N = kpoly_mul(d, p, pbar);
    std::vector<QQ> nq;
    for (const KElem& c : N) {
        if (!c.is_rational()) throw std::logic_error("roots_in_K: norm polynomial not rational");
        nq.push_back(c.x);
    }
    for (const QQ& r : rational_roots_q(nq)) push_unique(KElem(d, r, 0));
    // integer-clear for the quadratic factor scan
    ZZ den = 1;
    for (const QQ& c : nq) den = zz_lcm(den, c.get_den());
    std::vector<ZZ> ic;
    for (const QQ& c : nq) ic.push_back(QQ(c * QQ(den)).get_num());
    ZZ content = 0;
    for (const ZZ& z : ic) content = zz_gcd(content, z);
    if (content != 0)
        for (ZZ& z : ic) z /= content;
    for (const KElem& z : roots_from_quadratic_factors(d, ic)) push_unique(z);
    return out;
}

std::vector<KElem> k_cbrt(const KElem& c) {
    long d = c.d;
    KPoly p{-c, KElem(d, 0, 0), KElem(d, 0, 0), KElem(d, 1, 0)};
    return roots_in_K(d, p);
}

}  // namespace trisym
