#include "trisym/base_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trisym {

namespace {

long mod4(long d) { return ((d % 4) + 4) % 4; }

void check_same_field(long a, long b) {
    if (a != b) throw std::logic_error("mixed base fields");
}

}  // namespace

int field_degree(long d) { return d == 0 ? 1 : 2; }

QQ omega_c0(long d) {
    if (d == 0) return QQ(0);
    if (mod4(d) == 1) return QQ(d - 1, 4);
    return QQ(d);
}

QQ omega_c1(long d) { return (d != 0 && mod4(d) == 1) ? QQ(1) : QQ(0); }

KElem operator+(const KElem& a, const KElem& b) {
    check_same_field(a.d, b.d);
    return KElem(a.d, a.x + b.x, a.y + b.y);
}

KElem operator-(const KElem& a, const KElem& b) {
    check_same_field(a.d, b.d);
    return KElem(a.d, a.x - b.x, a.y - b.y);
}

KElem operator-(const KElem& a) { return KElem(a.d, -a.x, -a.y); }

KElem operator*(const KElem& a, const KElem& b) {
    check_same_field(a.d, b.d);
    // (x1 + y1 w)(x2 + y2 w) with w^2 = c0 + c1 w
    QQ yy = a.y * b.y;
    return KElem(a.d, a.x * b.x + omega_c0(a.d) * yy,
                 a.x * b.y + a.y * b.x + omega_c1(a.d) * yy);
}

KElem operator*(const QQ& c, const KElem& a) { return KElem(a.d, c * a.x, c * a.y); }

KElem k_conj(const KElem& a) {
    // conjugate root of w: wbar = c1 - w
    return KElem(a.d, a.x + omega_c1(a.d) * a.y, -a.y);
}

QQ elem_norm(const KElem& a) {
    if (a.d == 0) return a.x;
    // x^2 + c1 x y - c0 y^2
    return a.x * a.x + omega_c1(a.d) * a.x * a.y - omega_c0(a.d) * a.y * a.y;
}

QQ elem_trace(const KElem& a) {
    if (a.d == 0) return a.x;
    return 2 * a.x + omega_c1(a.d) * a.y;
}

KElem k_inv(const KElem& a) {
    if (a.is_zero()) throw std::domain_error("k_inv: zero");
    if (a.d == 0) return KElem(0, 1 / a.x, 0);
    QQ n = elem_norm(a);
    if (n == 0) throw std::domain_error("k_inv: zero norm");
    return (1 / n) * k_conj(a);
}

KElem operator/(const KElem& a, const KElem& b) { return a * k_inv(b); }

int real_sign(const KElem& a, int emb) {
    if (a.d < 0) throw std::domain_error("real_sign: complex place");
    if (a.is_zero()) return 0;
    if (a.d == 0 || a.y == 0) return sgn(a.x);
    // w -> (c1 + s*sqrt(c1^2 + 4 c0))/2 with s = +1 (emb 0) or -1 (emb 1);
    // sign of x + y*w decided by comparing squares exactly
    int s = emb == 0 ? 1 : -1;
    QQ c0 = omega_c0(a.d), c1 = omega_c1(a.d);
    // value = x + y*c1/2 + (s*y/2)*sqrt(D), D = c1^2 + 4c0 > 0
    QQ u = a.x + a.y * c1 / 2;
    QQ v = QQ(s) * a.y / 2;
    QQ D = c1 * c1 + 4 * c0;
    if (v == 0) return sgn(u);
    if (u == 0) return sgn(v);
    if (u > 0 && v > 0) return 1;
    if (u < 0 && v < 0) return -1;
    // opposite signs: compare u^2 with v^2 D
    int cmpv = cmp(u * u, v * v * D);
    if (cmpv == 0) return 0;
    return (cmpv > 0) ? sgn(u) : sgn(v);
}

std::vector<KElem> k_sqrt(const KElem& a) {
    std::vector<KElem> out;
    long d = a.d;
    if (a.is_zero()) {
        out.push_back(a);
        return out;
    }
    if (d == 0) {
        auto r = exact_sqrt(a.x);
        if (r) {
            out.emplace_back(0L, *r, QQ(0));
            if (*r != 0) out.emplace_back(0L, -*r, QQ(0));
        }
        return out;
    }
    QQ c0 = omega_c0(d), c1 = omega_c1(d);
    // (x + y w)^2 = (x^2 + c0 y^2) + (2xy + c1 y^2) w = a
    // y == 0 branch:
    if (a.y == 0) {
        auto r = exact_sqrt(a.x);
        if (r) {
            out.emplace_back(d, *r, QQ(0));
            if (*r != 0) out.emplace_back(d, -*r, QQ(0));
        }
    }
    // y != 0 branch: x = (a.y - c1 y^2)/(2y); substitute into the x-equation:
    // (a.y - c1 y^2)^2 + 4 c0 y^4 = 4 a.x y^2, a biquadratic in y over Q:
    // (c1^2 + 4c0) t^2 - (2 a.y c1 + 4 a.x) t + a.y^2 = 0 with t = y^2
    QQ A = c1 * c1 + 4 * c0;
    QQ B = -(2 * a.y * c1 + 4 * a.x);
    QQ C = a.y * a.y;
    QQ discq = B * B - 4 * A * C;
    auto sq = exact_sqrt(discq);
    if (sq) {
        for (int s : {1, -1}) {
            QQ t = (-B + QQ(s) * (*sq)) / (2 * A);
            if (t <= 0) continue;
            auto yy = exact_sqrt(t);
            if (!yy || *yy == 0) continue;
            for (int s2 : {1, -1}) {
                QQ y = QQ(s2) * (*yy);
                QQ x = (a.y - c1 * y * y) / (2 * y);
                KElem cand(d, x, y);
                if (cand * cand == a) out.push_back(cand);
            }
        }
    }
    // dedupe
    std::sort(out.begin(), out.end(), [](const KElem& l, const KElem& r) {
        return std::tie(l.x, l.y) < std::tie(r.x, r.y);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string k_to_string(const KElem& a) {
    std::ostringstream os;
    if (a.y == 0) {
        os << a.x.get_str();
        return os.str();
    }
    os << a.x.get_str();
    QQ ay = abs(a.y);
    os << (a.y < 0 ? "-" : "+") << ay.get_str() << "*w";
    return os.str();
}

KElem k_parse(long d, const std::string& s) {
    // grammar: rat | rat ('+'|'-') rat '*w' | rat '*w' | 'w' | '-w' | rat('+'|'-')'w'
    auto fail = [&]() { throw std::invalid_argument("k_parse: bad element '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) fail();
    // split at the last '+'/'-' that is not part of a leading sign or exponent-free rational
    auto parse_q = [&](const std::string& u) -> QQ {
        if (u.empty()) fail();
        try {
            QQ q(u);
            q.canonicalize();
            return q;
        } catch (...) {
            fail();
        }
        return QQ(0);
    };
    auto strip_w = [&](std::string u, QQ& coef) -> bool {
        // returns true when u denotes coef*w
        if (u.size() >= 1 && u.back() == 'w') {
            u.pop_back();
            if (!u.empty() && u.back() == '*') u.pop_back();
            if (u.empty() || u == "+")
                coef = 1;
            else if (u == "-")
                coef = -1;
            else
                coef = parse_q(u);
            return true;
        }
        return false;
    };
    // find split point
    size_t split = std::string::npos;
    for (size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '+' && t[i - 1] != '-' &&
            t[i - 1] != '*') {
            split = i;
            break;
        }
    }
    QQ x(0), y(0);
    if (split == std::string::npos) {
        QQ coef;
        if (strip_w(t, coef))
            y = coef;
        else
            x = parse_q(t);
    } else {
        std::string left = t.substr(0, split), right = t.substr(split);
        QQ coef;
        if (strip_w(right, coef)) {
            y = coef;
            x = parse_q(left);
        } else {
            // maybe the w-part came first
            std::string rhs = right;
            x = parse_q(rhs);
            if (!strip_w(left, coef)) fail();
            y = coef;
        }
    }
    if (d == 0 && y != 0) throw std::invalid_argument("k_parse: w used over Q");
    return KElem(d, x, y);
}

BaseField make_base_field(long d) {
    if (d == 0) return BaseField{0, 1, 1, 0};
    if (d == 1) throw std::invalid_argument("make_base_field: d must not be 1");
    long ad = std::labs(d);
    for (long f = 2; f * f <= ad; ++f)
        if (d % (f * f) == 0) throw std::invalid_argument("make_base_field: d not squarefree");
    BaseField F;
    F.d = d;
    F.disc_K = (mod4(d) == 1) ? d : 4 * d;
    if (d > 0) {
        F.r1 = 2;
        F.r2 = 0;
    } else {
        F.r1 = 0;
        F.r2 = 1;
    }
    return F;
}

bool FracIdealR::contains(const KElem& a) const {
    if (field_degree(d) == 1) return lat.contains({a.x});
    return lat.contains({a.x, a.y});
}

bool FracIdealR::is_integral() const {
    for (int i = 0; i < lat.dim(); ++i)
        for (int j = 0; j < lat.dim(); ++j)
            if (lat.at(i, j).get_den() != 1) return false;
    return true;
}

KElem FracIdealR::basis_elem(int i) const {
    if (field_degree(d) == 1) return KElem(d, lat.at(0, 0), 0);
    return KElem(d, lat.at(i, 0), lat.at(i, 1));
}

std::vector<KElem> FracIdealR::shell(int radius) const {
    std::vector<KElem> out;
    int n = lat.dim();
    if (n == 1) {
        if (radius == 0) return out;
        out.push_back(QQ(radius) * basis_elem(0));
        out.push_back(QQ(-radius) * basis_elem(0));
        return out;
    }
    for (int c0 = -radius; c0 <= radius; ++c0)
        for (int c1 = -radius; c1 <= radius; ++c1) {
            if (std::max(std::abs(c0), std::abs(c1)) != radius) continue;
            out.push_back(QQ(c0) * basis_elem(0) + QQ(c1) * basis_elem(1));
        }
    return out;
}

FracIdealR ring_of_integers(const BaseField& F) {
    FracIdealR r;
    r.d = F.d;
    r.lat = QLattice::standard(F.degree());
    return r;
}

namespace {

std::vector<QQ> k_vec(const KElem& a) {
    if (field_degree(a.d) == 1) return {a.x};
    return {a.x, a.y};
}

}  // namespace

FracIdealR ideal_from_generators(const BaseField& F, const std::vector<KElem>& gens) {
    bool any = false;
    std::vector<std::vector<QQ>> rows;
    KElem w = F.omega();
    for (const KElem& g : gens) {
        if (g.is_zero()) continue;
        any = true;
        rows.push_back(k_vec(g));
        if (F.degree() == 2) rows.push_back(k_vec(g * w));
    }
    if (!any) throw std::invalid_argument("ideal_from_generators: all generators zero");
    FracIdealR r;
    r.d = F.d;
    r.lat = QLattice::from_generators(F.degree(), rows);
    return r;
}

FracIdealR principal_ideal(const BaseField& F, const KElem& g) {
    return ideal_from_generators(F, {g});
}

FracIdealR ideal_mul(const FracIdealR& a, const FracIdealR& b) {
    check_same_field(a.d, b.d);
    int n = a.lat.dim();
    std::vector<std::vector<QQ>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows.push_back(k_vec(a.basis_elem(i) * b.basis_elem(j)));
    FracIdealR r;
    r.d = a.d;
    r.lat = QLattice::from_generators(n, rows);
    return r;
}

FracIdealR ideal_mul(const KElem& c, const FracIdealR& a) {
    if (c.is_zero()) throw std::invalid_argument("ideal_mul: zero scalar");
    int n = a.lat.dim();
    std::vector<std::vector<QQ>> rows;
    for (int i = 0; i < n; ++i) rows.push_back(k_vec(c * a.basis_elem(i)));
    FracIdealR r;
    r.d = a.d;
    r.lat = QLattice::from_generators(n, rows);
    return r;
}

FracIdealR ideal_inverse(const FracIdealR& a) {
    // R maximal: a * conj(a) = N(a) R, so a^-1 = conj(a)/N(a)
    if (field_degree(a.d) == 1) {
        FracIdealR r;
        r.d = a.d;
        r.lat = QLattice::from_generators(1, {{1 / a.lat.at(0, 0)}});
        return r;
    }
    std::vector<std::vector<QQ>> rows;
    for (int i = 0; i < 2; ++i) rows.push_back(k_vec(k_conj(a.basis_elem(i))));
    FracIdealR conj;
    conj.d = a.d;
    conj.lat = QLattice::from_generators(2, rows);
    QQ n = ideal_norm(a);
    FracIdealR r;
    r.d = a.d;
    r.lat = conj.lat.scaled(1 / n);
    return r;
}

FracIdealR ideal_pow(const FracIdealR& a, int e) {
    BaseField F = make_base_field(a.d);
    FracIdealR acc = ring_of_integers(F);
    FracIdealR base = e >= 0 ? a : ideal_inverse(a);
    int k = std::abs(e);
    for (int i = 0; i < k; ++i) acc = ideal_mul(acc, base);
    return acc;
}

FracIdealR ideal_sum(const FracIdealR& a, const FracIdealR& b) {
    check_same_field(a.d, b.d);
    FracIdealR r;
    r.d = a.d;
    r.lat = a.lat.sum(b.lat);
    return r;
}

QQ ideal_norm(const FracIdealR& a) { return a.lat.det_abs(); }

std::vector<PrimeIdealR> primes_above(const BaseField& F, const ZZ& p) {
    std::vector<PrimeIdealR> out;
    if (F.degree() == 1) {
        PrimeIdealR P;
        P.ideal = principal_ideal(F, F.elem(QQ(p)));
        P.p = p;
        P.f = 1;
        P.e = 1;
        out.push_back(P);
        return out;
    }
    // factor x^2 - c1 x - c0 mod p
    ZZ c0num = omega_c0(F.d).get_num();  // integral for the maximal order
    ZZ c1num = omega_c1(F.d).get_num();
    auto mod = [&](ZZ v) {
        ZZ r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    std::vector<ZZ> roots;
    for (ZZ r = 0; r < p; ++r) {
        if (mod(r * r - c1num * r - c0num) == 0) roots.push_back(r);
    }
    if (roots.empty()) {
        PrimeIdealR P;
        P.ideal = principal_ideal(F, F.elem(QQ(p)));
        P.p = p;
        P.f = 2;
        P.e = 1;
        out.push_back(P);
    } else if (roots.size() == 1) {
        PrimeIdealR P;
        P.ideal = ideal_from_generators(F, {F.elem(QQ(p)), F.omega() - F.elem(QQ(roots[0]))});
        P.p = p;
        P.f = 1;
        P.e = 2;
        out.push_back(P);
    } else {
        for (const ZZ& r : roots) {
            PrimeIdealR P;
            P.ideal = ideal_from_generators(F, {F.elem(QQ(p)), F.omega() - F.elem(QQ(r))});
            P.p = p;
            P.f = 1;
            P.e = 1;
            out.push_back(P);
        }
    }
    return out;
}

int valuation(const FracIdealR& a, const PrimeIdealR& P) {
    BaseField F = make_base_field(a.d);
    FracIdealR R = ring_of_integers(F);
    FracIdealR pinv = ideal_inverse(P.ideal);
    // shift until integral, then count divisions
    FracIdealR cur = a;
    int v = 0;
    while (!R.lat.contains(cur.lat)) {
        cur = ideal_mul(cur, P.ideal);
        --v;
        if (v < -4096) throw std::logic_error("valuation: runaway");
    }
    while (true) {
        FracIdealR nxt = ideal_mul(cur, pinv);
        if (!R.lat.contains(nxt.lat)) break;
        cur = nxt;
        ++v;
        if (v > 4096) throw std::logic_error("valuation: runaway");
    }
    return v;
}

std::vector<std::pair<PrimeIdealR, int>> factor_ideal(const BaseField& F, const FracIdealR& a) {
    QQ n = ideal_norm(a);
    ZZ num = n.get_num(), den = n.get_den();
    std::vector<ZZ> ps;
    if (num != 1)
        for (auto& [p, e] : factor_integer(num)) ps.push_back(p);
    if (den != 1)
        for (auto& [p, e] : factor_integer(den)) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<std::pair<PrimeIdealR, int>> out;
    FracIdealR recomposed = ring_of_integers(F);
    for (const ZZ& p : ps) {
        for (const PrimeIdealR& P : primes_above(F, p)) {
            int v = valuation(a, P);
            if (v != 0) {
                out.emplace_back(P, v);
                recomposed = ideal_mul(recomposed, ideal_pow(P.ideal, v));
            }
        }
    }
    if (recomposed != a) throw std::logic_error("factor_ideal: recomposition mismatch");
    return out;
}

namespace {

// positive-embedding value > 1 test for a real quadratic unit
bool embeds_above_one(const KElem& u) {
    KElem shifted = u - KElem(u.d, 1, 0);
    return real_sign(shifted, 0) > 0;
}

std::optional<KElem> smallest_unit_bruteforce(const BaseField& F, long ymax) {
    // y = 1, 2, ...: solve |x^2 + c1 x y - c0 y^2| = 1 for integer x; the
    // first hit (smallest y, then smallest |x|) is the fundamental unit
    QQ c0 = omega_c0(F.d), c1 = omega_c1(F.d);
    for (long y = 1; y <= ymax; ++y) {
        for (int target : {1, -1}) {
            // x^2 + (c1 y) x - (c0 y^2 + target) = 0
            QQ B = c1 * y, C = -(c0 * y * y + target);
            QQ disc = B * B - 4 * C;
            auto r = exact_sqrt(disc);
            if (!r) continue;
            for (int s : {1, -1}) {
                QQ x = (-B + QQ(s) * (*r)) / 2;
                if (x.get_den() != 1) continue;
                KElem cand = F.elem(x, y);
                if (std::abs(elem_norm(cand).get_num().get_si()) == 1 && embeds_above_one(cand))
                    return cand;
            }
        }
    }
    return std::nullopt;
}

std::optional<KElem> unit_root(const BaseField& F, const KElem& u, int k);

// continued fraction of w gives some power of the fundamental unit; descend
// through square and cube roots until neither exists
KElem pell_via_cf(const BaseField& F) {
    ZZ D(F.d);
    bool half = (omega_c1(F.d) == 1);
    ZZ P(half ? 1 : 0), Q(half ? 2 : 1);
    ZZ s = isqrt_floor(D);
    ZZ h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    std::optional<KElem> found;
    for (int iter = 0; iter < 100000 && !found; ++iter) {
        ZZ num = P + s, ai;
        mpz_fdiv_q(ai.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        ZZ h = ai * h0 + h1, k = ai * k0 + k1;
        h1 = h0;
        h0 = h;
        k1 = k0;
        k0 = k;
        KElem cand = KElem(F.d, QQ(h), QQ(k));
        QQ n = elem_norm(cand);
        if ((n == 1 || n == -1) && k != 0) found = cand;
        P = ai * Q - P;
        Q = (D - P * P) / Q;
        if (Q == 0) throw std::logic_error("pell_via_cf: degenerate state");
    }
    if (!found) throw std::logic_error("pell_via_cf: no unit found");
    KElem u = *found;
    if (!embeds_above_one(u)) u = k_inv(u);
    bool descended = true;
    while (descended) {
        descended = false;
        for (int k : {2, 3}) {
            auto r = unit_root(F, u, k);
            if (r) {
                u = *r;
                descended = true;
                break;
            }
        }
    }
    return u;
}

std::optional<KElem> unit_root(const BaseField& F, const KElem& u, int k) {
    std::vector<KElem> roots;
    if (k == 2) {
        roots = k_sqrt(u);
    } else {
        // v^3 = u in K: N(v) is a rational cube root of N(u); Tr(v) is a
        // rational root of tau^3 - 3 N(v) tau - Tr(u)
        auto nu = exact_cbrt(elem_norm(u));
        if (!nu) return std::nullopt;
        QQ tru = elem_trace(u);
        // rational roots of tau^3 - 3 nu tau - tru: scan divisors of the
        // integer-cleared constant term
        QQ nu3 = 3 * (*nu);
        ZZ den = zz_lcm(nu3.get_den(), tru.get_den());
        ZZ scale = den;  // tau = z / scale with z | ...
        // crude scan: z over divisors of |tru * scale^3| when nonzero
        QQ c = tru * QQ(scale) * QQ(scale) * QQ(scale);
        std::vector<QQ> cands;
        if (c == 0)
            cands.push_back(QQ(0));
        else
            for (const ZZ& dv : positive_divisors(c.get_num()))
                for (int sg : {1, -1}) cands.emplace_back(QQ(sg * dv, scale));
        for (QQ tau : cands) {
            tau.canonicalize();
            if (tau * tau * tau - nu3 * tau - tru != 0) continue;
            QQ dd = tau * tau - *nu;
            if (dd == 0) continue;
            KElem v = (QQ(1) / dd) * (u + F.elem(tau * (*nu)));
            if (v * v * v == u) roots.push_back(v);
        }
    }
    for (const KElem& v : roots)
        if (is_unit_in_R(F, v)) return embeds_above_one(v) ? v : k_inv(v);
    return std::nullopt;
}

}  // namespace

UnitGroup unit_group(const BaseField& F) {
    UnitGroup U;
    if (F.d == 0) {
        U.torsion_order = 2;
        return U;
    }
    if (F.d < 0) {
        U.torsion_order = (F.d == -1) ? 4 : (F.d == -3) ? 6 : 2;
        return U;
    }
    U.torsion_order = 2;
    auto quick = smallest_unit_bruteforce(F, 400);
    U.fundamental = quick ? *quick : pell_via_cf(F);
    return U;
}

bool is_unit_in_R(const BaseField& F, const KElem& u) {
    if (!ring_of_integers(F).contains(u)) return false;
    QQ n = elem_norm(u);
    return n == 1 || n == -1;
}

std::vector<KElem> unit_candidates(const BaseField& F, int power_bound) {
    std::vector<KElem> out;
    KElem one = F.elem(1);
    if (F.d == 0) {
        out = {one, -one};
        return out;
    }
    if (F.d < 0) {
        int w = unit_group(F).torsion_order;
        KElem zeta = (F.d == -1) ? F.omega()
                     : (F.d == -3) ? F.omega()  // (1+sqrt(-3))/2 = zeta_6
                                   : -one;
        KElem acc = one;
        for (int i = 0; i < w; ++i) {
            out.push_back(acc);
            acc = acc * zeta;
        }
        return out;
    }
    KElem eps = *unit_group(F).fundamental;
    KElem pos = one;
    out.push_back(one);
    out.push_back(-one);
    for (int k = 1; k <= power_bound; ++k) {
        pos = pos * eps;
        KElem neg = k_inv(pos);
        for (const KElem& u : {pos, neg}) {
            out.push_back(u);
            out.push_back(-u);
        }
    }
    return out;
}

std::optional<KElem> is_principal(const BaseField& F, const FracIdealR& a) {
    if (F.degree() == 1) {
        QQ g = a.lat.at(0, 0);
        return F.elem(g);
    }
    QQ N = ideal_norm(a);
    // search elements of a with |norm| == N(a), then confirm by lattice equality
    auto check = [&](const KElem& g) -> bool {
        if (g.is_zero()) return false;
        QQ n = elem_norm(g);
        if (n != N && n != -N) return false;
        return principal_ideal(F, g) == a;
    };
    KElem b0 = a.basis_elem(0), b1 = a.basis_elem(1);
    if (F.d < 0) {
        // positive definite norm form in the basis coordinates: bound the box
        QQ A = elem_norm(b0), B = elem_trace(b0 * k_conj(b1)), C = elem_norm(b1);
        // N(c0 b0 + c1 b1) = A c0^2 + B c0 c1 + C c1^2
        QQ det4 = 4 * A * C - B * B;  // > 0
        // |c0| <= sqrt(4 C N / det4), |c1| <= sqrt(4 A N / det4)
        auto bound = [&](const QQ& t) {
            QQ v = 4 * t * N / det4;
            double dv = std::sqrt(std::max(0.0, v.get_d()));
            return static_cast<int>(std::floor(dv + 1.0));
        };
        int B0 = bound(C), B1 = bound(A);
        for (int c0 = 0; c0 <= B0; ++c0)
            for (int c1 = -B1; c1 <= B1; ++c1) {
                if (c0 == 0 && c1 <= 0) continue;
                KElem g = QQ(c0) * b0 + QQ(c1) * b1;
                if (check(g)) return g;
            }
        return std::nullopt;
    }
    // real quadratic: normalize by the fundamental unit; a generator can be
    // scaled so that both embeddings lie in [sqrt(N), sqrt(N)*eps] up to sign
    KElem eps = *unit_group(F).fundamental;
    double e1 = eps.x.get_d() + eps.y.get_d() * ((omega_c1(F.d) == 1)
                       ? (1.0 + std::sqrt(static_cast<double>(F.d))) / 2.0
                       : std::sqrt(static_cast<double>(F.d)));
    e1 = std::abs(e1);
    if (e1 < 1.0) e1 = 1.0 / e1;
    double sqN = std::sqrt(N.get_d());
    double bound_emb = sqN * e1 * 1.0000001 + 1.0;
    // solve |x + y w_i| <= bound_emb at both embeddings for box on (c0, c1)
    double w1 = (omega_c1(F.d) == 1) ? (1.0 + std::sqrt(static_cast<double>(F.d))) / 2.0
                                     : std::sqrt(static_cast<double>(F.d));
    double w2 = (omega_c1(F.d) == 1) ? (1.0 - std::sqrt(static_cast<double>(F.d))) / 2.0
                                     : -std::sqrt(static_cast<double>(F.d));
    double b0e1 = b0.x.get_d() + b0.y.get_d() * w1, b0e2 = b0.x.get_d() + b0.y.get_d() * w2;
    double b1e1 = b1.x.get_d() + b1.y.get_d() * w1, b1e2 = b1.x.get_d() + b1.y.get_d() * w2;
    double det = b0e1 * b1e2 - b0e2 * b1e1;
    // |c0| = |(v1 b1e2 - v2 b1e1)/det| <= bound_emb*(|b1e2|+|b1e1|)/|det|
    int B0 = static_cast<int>(bound_emb * (std::abs(b1e2) + std::abs(b1e1)) / std::abs(det)) + 2;
    int B1 = static_cast<int>(bound_emb * (std::abs(b0e2) + std::abs(b0e1)) / std::abs(det)) + 2;
    for (int c0 = 0; c0 <= B0; ++c0)
        for (int c1 = -B1; c1 <= B1; ++c1) {
            if (c0 == 0 && c1 <= 0) continue;
            KElem g = QQ(c0) * b0 + QQ(c1) * b1;
            if (check(g)) return g;
        }
    return std::nullopt;
}

IdealClassGroupR class_group(const BaseField& F) {
    IdealClassGroupR G;
    G.representatives.push_back(ring_of_integers(F));
    if (F.degree() == 1) {
        G.table = {{0}};
        G.h = 1;
        return G;
    }
    // Minkowski bound
    double mb = (F.d < 0) ? (2.0 / M_PI) * std::sqrt(std::abs(static_cast<double>(F.disc_K)))
                          : 0.5 * std::sqrt(static_cast<double>(F.disc_K));
    std::vector<FracIdealR> small_primes;
    for (ZZ p = 2; p.get_d() <= mb; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        for (const PrimeIdealR& P : primes_above(F, p))
            if (P.f == 1) small_primes.push_back(P.ideal);
    }
    auto find_class = [&](const FracIdealR& a) -> int {
        for (size_t i = 0; i < G.representatives.size(); ++i) {
            FracIdealR q = ideal_mul(a, ideal_inverse(G.representatives[i]));
            if (is_principal(F, q)) return static_cast<int>(i);
        }
        return -1;
    };
    // close the representative list under multiplication by the small primes
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < G.representatives.size(); ++i)
            for (const FracIdealR& P : small_primes) {
                FracIdealR prod = ideal_mul(G.representatives[i], P);
                if (find_class(prod) < 0) {
                    G.representatives.push_back(prod);
                    grew = true;
                }
            }
    }
    G.h = static_cast<int>(G.representatives.size());
    G.table.assign(G.h, std::vector<int>(G.h, 0));
    for (int i = 0; i < G.h; ++i)
        for (int j = 0; j < G.h; ++j) {
            int k = find_class(ideal_mul(G.representatives[i], G.representatives[j]));
            if (k < 0) throw std::logic_error("class_group: table not closed");
            G.table[i][j] = k;
        }
    return G;
}

int class_index(const BaseField& F, const IdealClassGroupR& G, const FracIdealR& a) {
    for (size_t i = 0; i < G.representatives.size(); ++i) {
        FracIdealR q = ideal_mul(a, ideal_inverse(G.representatives[i]));
        if (is_principal(F, q)) return static_cast<int>(i);
    }
    throw std::logic_error("class_index: no class found");
}

}  // namespace trisym
