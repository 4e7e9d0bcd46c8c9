#include "trisym/counting_local.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace trisym {

namespace {

// ---------------------------------------------------------------------------
// integer models over the rational base
// ---------------------------------------------------------------------------

struct IForm {
    long long a, b, c, d;

    bool operator==(const IForm& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator<(const IForm& o) const {
        return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
    }
};

long long iform_disc(const IForm& f) {
    long long a = f.a, b = f.b, c = f.c, d = f.d;
    return -3 * b * b * c * c + 4 * a * c * c * c + 4 * b * b * b * d + a * a * d * d -
           6 * a * b * c * d;
}

struct IMat {
    long long p, q, r, s;  // rows (p q), (r s)

    long long det() const { return p * s - q * r; }
};

const IMat IDENT{1, 0, 0, 1};

IMat imat_mul(const IMat& g, const IMat& h) {
    return {g.p * h.p + g.q * h.r, g.p * h.q + g.q * h.s, g.r * h.p + g.s * h.r,
            g.r * h.q + g.s * h.s};
}

// det(g)^-1 f((x,y)g), det = +-1; throws on value overflow
IForm iact(const IMat& g, const IForm& f) {
    using W = __int128;
    W p = g.p, q = g.q, r = g.r, s = g.s;
    W a = f.a, b = f.b, c = f.c, d = f.d;
    W det = p * s - q * r;
    W A = a * p * p * p + 3 * b * p * p * q + 3 * c * p * q * q + d * q * q * q;
    W B = a * p * p * r + b * (p * p * s + 2 * p * q * r) + c * (q * q * r + 2 * p * q * s) +
          d * q * q * s;
    W C = a * p * r * r + b * (2 * p * r * s + q * r * r) + c * (p * s * s + 2 * q * r * s) +
          d * q * s * s;
    W D = a * r * r * r + 3 * b * r * r * s + 3 * c * r * s * s + d * s * s * s;
    A /= det;
    B /= det;
    C /= det;
    D /= det;
    const W lim = W(1) << 62;
    if (A > lim || A < -lim || B > lim || B < -lim || C > lim || C < -lim || D > lim || D < -lim)
        throw std::overflow_error("iact: coefficient overflow");
    return {(long long)A, (long long)B, (long long)C, (long long)D};
}

struct IBqf {
    long long a, b, c;

    long long disc() const { return b * b - 4 * a * c; }
    long long eval(long long x, long long y) const { return a * x * x + b * x * y + c * y * y; }
    bool operator<(const IBqf& o) const {
        return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
    }
    bool operator==(const IBqf& o) const { return a == o.a && b == o.b && c == o.c; }
};

// equivariant covariant of the cubic (middle slot bc - ad)
IBqf icovariant(const IForm& f) {
    return {f.b * f.b - f.a * f.c, f.b * f.c - f.a * f.d, f.c * f.c - f.b * f.d};
}

// H((x,y)g)
IBqf ibqf_sub(const IBqf& H, const IMat& g) {
    long long P = H.a * g.p * g.p + H.b * g.p * g.q + H.c * g.q * g.q;
    long long Q = 2 * H.a * g.p * g.r + H.b * (g.p * g.s + g.q * g.r) + 2 * H.c * g.q * g.s;
    long long R = H.a * g.r * g.r + H.b * g.r * g.s + H.c * g.s * g.s;
    return {P, Q, R};
}

long long floordiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// canonical reduction of a positive definite form; applying moves M1..Mk in
// order realizes H_red = H((x,y) Mk...M1), so the transform accumulates on
// the left
IBqf reduce_definite(IBqf H, IMat& U) {
    if (H.a <= 0) throw std::logic_error("reduce_definite: form not positive definite");
    U = IDENT;
    for (int guard = 0; guard < 4096; ++guard) {
        // translate b into (-a, a]
        long long k = floordiv(H.a - H.b, 2 * H.a);
        if (k != 0) {
            IMat L{1, 0, k, 1};
            H = ibqf_sub(H, L);
            U = imat_mul(L, U);
        }
        if (H.a > H.c) {
            IMat S{0, 1, -1, 0};
            H = ibqf_sub(H, S);
            U = imat_mul(S, U);
            continue;
        }
        if (H.a == H.c && H.b < 0) {
            IMat S{0, 1, -1, 0};
            H = ibqf_sub(H, S);
            U = imat_mul(S, U);
        }
        return H;
    }
    throw std::logic_error("reduce_definite: no convergence");
}

// all (x, y) with H(x,y) = n for positive definite H
std::vector<std::pair<long long, long long>> definite_repr(const IBqf& H, long long n) {
    std::vector<std::pair<long long, long long>> out;
    if (n <= 0) return out;
    long long absD = -H.disc();
    double xb = std::sqrt(4.0 * H.c * n / absD), yb = std::sqrt(4.0 * H.a * n / absD);
    for (long long x = -(long long)(xb + 1); x <= (long long)(xb + 1); ++x)
        for (long long y = -(long long)(yb + 1); y <= (long long)(yb + 1); ++y)
            if (H.eval(x, y) == n) out.push_back({x, y});
    return out;
}

std::vector<IMat> definite_automorphs(const IBqf& H, bool allow_improper) {
    std::vector<IMat> out;
    auto r1 = definite_repr(H, H.a);
    auto r2 = definite_repr(H, H.c);
    for (auto& [p, q] : r1)
        for (auto& [r, s] : r2) {
            IMat g{p, q, r, s};
            long long det = g.det();
            if (det != 1 && det != -1) continue;
            if (det == -1 && !allow_improper) continue;
            IBqf Hg = ibqf_sub(H, g);
            if (Hg == H) out.push_back(g);
        }
    return out;
}

std::string iform_str(const IForm& f) {
    std::ostringstream os;
    os << f.a << "," << f.b << "," << f.c << "," << f.d;
    return os.str();
}

// canonical SL2(Z)-orbit label for a form with negative discriminant
std::string sl_key_definite(const IForm& f) {
    IBqf H = icovariant(f);
    IMat U;
    IBqf Hred = reduce_definite(H, U);
    IForm fred = iact(U, f);
    if (!(ibqf_sub(H, U) == Hred)) throw std::logic_error("sl_key: covariance failed");
    IForm best = fred;
    for (const IMat& g : definite_automorphs(Hred, false)) {
        IForm cand = iact(g, fred);
        if (cand < best) best = cand;
    }
    std::ostringstream os;
    os << Hred.a << "," << Hred.b << "," << Hred.c << "|" << iform_str(best);
    return os.str();
}

// --- indefinite (positive discriminant) machinery ------------------------

bool indef_reduced(const IBqf& f, long long s) {
    // |sqrt(D) - 2|a|| < b < sqrt(D), exact
    if (f.b <= 0 || f.b > s) return false;
    long long twoa = 2 * std::llabs(f.a);
    long long D = f.disc();
    if ((f.b + twoa) * (f.b + twoa) <= D) return false;     // sqrt(D) < b + 2|a|
    if (twoa > f.b && (twoa - f.b) * (twoa - f.b) >= D) return false;  // 2|a| - b < sqrt(D)
    return true;
}

IBqf indef_rho(const IBqf& f, long long s, IMat* step) {
    long long a2 = f.c;
    long long m = std::llabs(a2);
    // b' = -b (mod 2m) placed in the standard window
    long long lo = (m > s) ? (-m + 1) : (s - 2 * m + 1);
    long long r = ((-f.b - lo) % (2 * m) + 2 * m) % (2 * m);
    long long bp = lo + r;
    long long k = (bp + f.b) / (2 * a2);
    if (bp + f.b != 2 * a2 * k) throw std::logic_error("indef_rho: window selection failed");
    long long cp = (bp * bp - f.disc()) / (4 * a2);
    if (step) *step = IMat{0, 1, -1, k};
    return {a2, bp, cp};
}

struct IndefCycle {
    std::vector<IBqf> forms;    // the reduced cycle, starting at its minimum
    std::vector<IMat> to_form;  // transform from the entry form to each position
};

IndefCycle indef_cycle(IBqf f, long long s, IMat& to_reduced) {
    to_reduced = IDENT;
    int guard = 0;
    while (!indef_reduced(f, s)) {
        IMat step;
        f = indef_rho(f, s, &step);
        to_reduced = imat_mul(step, to_reduced);
        if (++guard > 10000) throw std::logic_error("indef_cycle: reduction diverged");
    }
    IndefCycle cyc;
    IBqf start = f;
    IMat acc = IDENT;
    do {
        cyc.forms.push_back(f);
        cyc.to_form.push_back(acc);
        IMat step;
        f = indef_rho(f, s, &step);
        acc = imat_mul(step, acc);
        if (cyc.forms.size() > 20000) throw std::logic_error("indef_cycle: runaway cycle");
    } while (!(f == start));
    return cyc;
}

IBqf indef_canonical(const IBqf& f, long long s) {
    IMat dummy;
    IndefCycle cyc = indef_cycle(f, s, dummy);
    return *std::min_element(cyc.forms.begin(), cyc.forms.end());
}

long long iform_height(const IForm& f) {
    return std::max(std::max(std::llabs(f.a), std::llabs(f.b)),
                    std::max(std::llabs(f.c), std::llabs(f.d)));
}

std::string sl_key_indefinite(const IForm& f) {
    IBqf H = icovariant(f);
    long long D = H.disc();
    long long s = (long long)std::sqrt((double)D);
    while ((s + 1) * (s + 1) <= D) ++s;
    while (s * s > D) --s;
    IMat toRed;
    IndefCycle cyc = indef_cycle(H, s, toRed);
    IBqf canon = *std::min_element(cyc.forms.begin(), cyc.forms.end());
    // full-cycle automorph
    IMat full = IDENT;
    {
        IBqf g = cyc.forms[0];
        IMat step;
        for (size_t i = 0; i < cyc.forms.size(); ++i) {
            g = indef_rho(g, s, &step);
            full = imat_mul(step, full);
        }
        if (!(g == cyc.forms[0])) throw std::logic_error("sl_key_indefinite: cycle did not close");
    }
    IForm fred = iact(toRed, f);
    IForm best{LLONG_MAX, 0, 0, 0};
    auto consider = [&](const IForm& h) {
        IForm neg{-h.a, -h.b, -h.c, -h.d};
        if (h < best) best = h;
        if (neg < best) best = neg;
    };
    IMat inv_full = {full.s, -full.q, -full.r, full.p};  // det 1 inverse
    if (full.det() != 1) throw std::logic_error("sl_key_indefinite: automorph determinant");
    // walk automorph periods in each direction until the minimal coefficient
    // size has clearly passed (coefficients grow like a power of the
    // fundamental automorph away from the minimum)
    auto mat_height = [](const IMat& m) {
        return std::max(std::max(std::llabs(m.p), std::llabs(m.q)),
                        std::max(std::llabs(m.r), std::llabs(m.s)));
    };
    for (int dir : {1, -1}) {
        IMat base = IDENT;
        const IMat& step = dir > 0 ? full : inv_full;
        long long best_height = LLONG_MAX;
        int stale = 0;
        for (int loop = 0; loop < 512 && stale < 4; ++loop) {
            long long round_best = LLONG_MAX;
            bool blown = false;
            for (size_t pos = 0; pos < cyc.forms.size(); ++pos) {
                if (!(cyc.forms[pos] == canon)) continue;
                IMat tot = imat_mul(cyc.to_form[pos], base);
                try {
                    IForm cand = iact(tot, fred);
                    consider(cand);
                    round_best = std::min(round_best, iform_height(cand));
                } catch (const std::overflow_error&) {
                    blown = true;
                }
            }
            if (round_best < best_height) {
                best_height = round_best;
                stale = 0;
            } else {
                ++stale;
            }
            base = imat_mul(base, step);
            if (blown || mat_height(base) > 1000000) break;
        }
    }
    std::ostringstream os;
    os << canon.a << "," << canon.b << "," << canon.c << "|" << iform_str(best);
    return os.str();
}

std::string sl_key_int(const IForm& f) {
    long long D = iform_disc(f);
    if (D == 0) throw std::invalid_argument("orbit key: degenerate form");
    return D < 0 ? sl_key_definite(f) : sl_key_indefinite(f);
}

std::string gl_key_int(const IForm& f) {
    // GL2(Z) = SL2(Z) together with the reflection diag(1, -1)
    IForm flip{-f.a, f.b, -f.c, f.d};
    return std::min(sl_key_int(f), sl_key_int(flip));
}

IForm key_to_form(const std::string& key) {
    auto bar = key.find('|');
    std::istringstream is(key.substr(bar + 1));
    IForm f;
    char comma;
    is >> f.a >> comma >> f.b >> comma >> f.c >> comma >> f.d;
    return f;
}

// ---------------------------------------------------------------------------
// classical reduced-form oracle (independent of the parametrization path)
// ---------------------------------------------------------------------------

long long gcd3(long long a, long long b, long long c) {
    return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
}

IBqf oracle_reduce_definite(IBqf f) {
    IMat dummy;
    return reduce_definite(f, dummy);
}

long long mod_inverse(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    long long g1 = a1;
    while (g1) {
        long long q = g / g1;
        std::tie(g, g1) = std::make_pair(g1, g - q * g1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::logic_error("mod_inverse: not coprime");
    return ((x % m) + m) % m;
}

IBqf compose_bqf(const IBqf& f1, const IBqf& f2, long long D) {
    // find a primitive representation of a value coprime to a1
    long long a1 = f1.a;
    IBqf f2t{0, 0, 0};
    bool found = false;
    for (int radius = 1; radius <= 80 && !found; ++radius)
        for (long long x0 = -radius; x0 <= radius && !found; ++x0)
            for (long long y0 = -radius; y0 <= radius && !found; ++y0) {
                if (std::max(std::llabs(x0), std::llabs(y0)) != radius) continue;
                if (std::gcd(std::llabs(x0), std::llabs(y0)) != 1) continue;
                long long v = f2.eval(x0, y0);
                if (v == 0 || std::gcd(std::llabs(v), std::llabs(a1)) != 1) continue;
                // complete (x0, y0) to an SL2(Z) row pair
                long long g = 0, u = 0, w = 0;
                // u*x0 + w*y0 = 1
                {
                    long long r0 = x0, r1 = y0, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
                    while (r1) {
                        long long q = r0 / r1;
                        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
                        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
                        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
                    }
                    g = r0;
                    u = s0;
                    w = t0;
                    if (g == -1) {
                        g = 1;
                        u = -u;
                        w = -w;
                    }
                }
                IMat M{x0, y0, -w, u};  // det = x0*u + y0*w = 1
                if (M.det() != 1) continue;
                IBqf cand = ibqf_sub(f2, M);
                if (cand.a != v) continue;
                f2t = cand;
                found = true;
            }
    if (!found) throw std::logic_error("compose_bqf: no coprime representation found");
    long long a2 = f2t.a;
    long long m = std::llabs(a2);
    long long k = 0;
    if (m > 1) {
        long long rhs = (((f2t.b - f1.b) / 2) % m + m) % m;
        k = (rhs * mod_inverse(((a1 % m) + m) % m, m)) % m;
    }
    long long B = f1.b + 2 * a1 * k;
    long long A = a1 * a2;
    long long C = (B * B - D) / (4 * A);
    IBqf out{A, B, C};
    if (out.disc() != D) throw std::logic_error("compose_bqf: discriminant drift");
    return out;
}

}  // namespace

std::pair<long, long> class_group_oracle_Z(long Delta) {
    long long D = Delta;
    long long res = ((D % 4) + 4) % 4;
    if (res != 0 && res != 1) throw std::invalid_argument("class_group_oracle_Z: not 0,1 mod 4");
    if (D == 0) throw std::invalid_argument("class_group_oracle_Z: zero discriminant");
    if (D < 0) {
        std::vector<IBqf> reduced;
        for (long long a = 1; 3 * a * a <= -D; ++a)
            for (long long b = -a; b <= a; ++b) {
                if (((b - D) % 2) != 0) continue;
                long long num = b * b - D;
                if (num % (4 * a) != 0) continue;
                long long c = num / (4 * a);
                if (c < a) continue;
                if ((b < 0) && (b == -a || a == c)) continue;
                if (gcd3(a, b, c) != 1) continue;
                reduced.push_back({a, b, c});
            }
        std::sort(reduced.begin(), reduced.end());
        IBqf principal = (res == 0) ? IBqf{1, 0, -D / 4} : IBqf{1, 1, (1 - D) / 4};
        principal = oracle_reduce_definite(principal);
        long tors = 0;
        for (const IBqf& f : reduced) {
            IBqf sq = oracle_reduce_definite(compose_bqf(f, f, D));
            IBqf cube = oracle_reduce_definite(compose_bqf(sq, f, D));
            if (cube == principal) ++tors;
        }
        return {static_cast<long>(reduced.size()), tors};
    }
    // positive nonsquare discriminant: cycles of reduced indefinite forms
    long long s = (long long)std::sqrt((double)D);
    while ((s + 1) * (s + 1) <= D) ++s;
    while (s * s > D) --s;
    if (s * s == D) throw std::invalid_argument("class_group_oracle_Z: square discriminant");
    std::set<IBqf> seen;
    std::vector<IBqf> classes;  // canonical cycle representative per class
    for (long long a = -s; a <= s; ++a) {
        if (a == 0) continue;
        for (long long b = 1; b <= s; ++b) {
            long long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            IBqf f{a, b, c};
            if (!indef_reduced(f, s)) continue;
            if (gcd3(a, b, c) != 1) continue;
            if (seen.count(f)) continue;
            // record the whole cycle
            IMat dummy;
            IndefCycle cyc = indef_cycle(f, s, dummy);
            for (const IBqf& g : cyc.forms) seen.insert(g);
            classes.push_back(*std::min_element(cyc.forms.begin(), cyc.forms.end()));
        }
    }
    std::sort(classes.begin(), classes.end());
    long long b0 = (s % 2 == std::llabs(D % 2)) ? s : s - 1;  // b0 == D (mod 2)
    IBqf principal{1, b0, (b0 * b0 - D) / 4};
    IBqf principal_canon = indef_canonical(principal, s);
    long tors = 0;
    for (const IBqf& f : classes) {
        IBqf sq = compose_bqf(f, f, D);
        IBqf cube = compose_bqf(sq, f, D);
        if (indef_canonical(cube, s) == principal_canon) ++tors;
    }
    return {static_cast<long>(classes.size()), tors};
}

// ---------------------------------------------------------------------------
// orbit enumeration
// ---------------------------------------------------------------------------

namespace {

// principal generator of a fractional ideal over Q (positive)
QQ rational_ideal_gen(const FracIdealR& a) {
    if (field_degree(a.d) != 1) throw std::logic_error("rational_ideal_gen: base not Q");
    return a.lat.at(0, 0);
}

struct ZModel {
    QQ g;  // type ideal = gZ; integer model coefficients (a/g, b, c*g, d*g^2)
};

IForm to_int_model(const ZModel& M, const CubicForm& f) {
    auto as_ll = [](const QQ& q) {
        if (q.get_den() != 1) throw std::logic_error("to_int_model: non-integral coefficient");
        return static_cast<long long>(q.get_num().get_si());
    };
    return {as_ll(f.a.x / M.g), as_ll(f.b.x), as_ll(f.c.x * M.g), as_ll(f.d.x * M.g * M.g)};
}

CubicForm from_int_model(const BaseField& F, const FracIdealR& type_ideal, const ZModel& M,
                         const IForm& f) {
    QQ fa(static_cast<long>(f.a)), fb(static_cast<long>(f.b)), fc(static_cast<long>(f.c)), fd(static_cast<long>(f.d));
    return make_cubic_form(F, type_ideal, F.elem(fa * M.g), F.elem(fb), F.elem(fc / M.g),
                           F.elem(fd / (M.g * M.g)));
}

struct IntBox {
    long long Ba, Bb, Bc, Bd;
};

// coefficient bounds for a representative whose covariant is reduced; from
// the pointwise bound |f(x,y)| <= 2 H(x,y)^(3/2) / sqrt(|D|) (syzygy
// G^2 = 36 H^3 + 9 disc f^2, so 9|D| f^2 <= 36 H^3 when disc < 0)
IntBox definite_box(long long D) {
    long long absD = -D;
    long long pmax = 0, rmax = 0, hmax = 0;
    for (long long p = 1; 3 * p * p <= absD; ++p)
        for (long long q = -p; q <= p; ++q) {
            long long num = q * q + absD;
            if (num % (4 * p) != 0) continue;
            long long r = num / (4 * p);
            if (r < p) continue;
            pmax = std::max(pmax, p);
            rmax = std::max(rmax, r);
            hmax = std::max(hmax, p + std::llabs(q) + r);
        }
    if (pmax == 0) return {0, 0, 0, 0};
    auto bound = [&](long long h) {
        return (long long)std::ceil(2.0 * std::pow((double)h, 1.5) / std::sqrt((double)absD)) + 1;
    };
    long long Ba = bound(pmax), Bd = bound(rmax), Bpm = bound(hmax);
    long long Bb = (2 * Bpm + 2 * Bd) / 6 + 1;
    long long Bc = (2 * Bpm + 2 * Ba) / 6 + 1;
    return {Ba, Bb, Bc, Bd};
}

std::vector<IForm> scan_box(long long D, const IntBox& box, int workers) {
    std::vector<std::vector<IForm>> found(std::max(workers, 1));
    auto work = [&](int id) {
        for (long long a = -box.Ba + id; a <= box.Ba; a += workers)
            for (long long b = -box.Bb; b <= box.Bb; ++b)
                for (long long c = -box.Bc; c <= box.Bc; ++c)
                    for (long long d = -box.Bd; d <= box.Bd; ++d) {
                        IForm f{a, b, c, d};
                        if (iform_disc(f) == D) found[id].push_back(f);
                    }
    };
    if (workers <= 1) {
        workers = 1;
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (int i = 0; i < workers; ++i) ts.emplace_back(work, i);
        for (auto& t : ts) t.join();
    }
    std::vector<IForm> all;
    for (auto& v : found) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    return all;
}

// forms whose equivariant covariant is exactly a given reduced form; used to
// seed the indefinite enumeration, where no finite coefficient box is
// complete on its own
std::vector<IForm> covariant_targeted(long long D, const IBqf& H, long long range) {
    std::vector<IForm> out;
    auto push = [&](long long a, long long b, long long c, long long d) {
        IForm f{a, b, c, d};
        if (iform_disc(f) == D) out.push_back(f);
    };
    for (long long b = -range; b <= range; ++b)
        for (long long c = -range; c <= range; ++c) {
            if (c != 0 && (b * b - H.a) % c == 0) {
                long long a = (b * b - H.a) / c;
                if (a != 0 && (b * c - H.b) % a == 0) push(a, b, c, (b * c - H.b) / a);
            }
            if (b != 0 && (c * c - H.c) % b == 0) {
                long long d = (c * c - H.c) / b;
                if (d != 0 && (b * c - H.b) % d == 0) push((b * c - H.b) / d, b, c, d);
            }
            if (b != 0 && b * b == H.a && b * c == H.b && (c * c - H.c) % b == 0)
                push(0, b, c, (c * c - H.c) / b);
            if (c != 0 && c * c == H.c && b * c == H.b && (b * b - H.a) % c == 0)
                push((b * b - H.a) / c, b, c, 0);
        }
    return out;
}

std::vector<IBqf> reduced_indefinite_forms(long long D) {
    long long s = (long long)std::sqrt((double)D);
    while ((s + 1) * (s + 1) <= D) ++s;
    while (s * s > D) --s;
    std::vector<IBqf> out;
    for (long long a = -s; a <= s; ++a) {
        if (a == 0) continue;
        for (long long b = 1; b <= s; ++b) {
            long long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            IBqf f{a, b, num / (4 * a)};
            if (indef_reduced(f, s)) out.push_back(f);
        }
    }
    return out;
}

OrbitTable enumerate_orbits_Z(const BaseField& F, const FracIdealR& type_ideal, const KElem& Delta,
                              int workers) {
    ZModel M{rational_ideal_gen(type_ideal)};
    QQ Dq = Delta.x * M.g * M.g;
    if (Dq.get_den() != 1) throw std::invalid_argument("enumerate_orbits: Delta not in a^-2");
    long long D = Dq.get_num().get_si();
    if (D == 0) throw std::invalid_argument("enumerate_orbits: Delta = 0");
    OrbitTable table;
    table.base_d = 0;
    table.type_ideal = type_ideal;
    table.Delta = Delta;
    table.experimental = (D > 0);
    std::vector<IForm> all;
    IntBox base{0, 0, 0, 0};
    if (D < 0) {
        base = definite_box(D);
        if (base.Ba == 0) return table;
        IntBox margin{2 * base.Ba, 2 * base.Bb, 2 * base.Bc, 2 * base.Bd};
        all = scan_box(D, margin, workers);
    } else {
        // seed with a direct box plus every form carrying a cycle-reduced
        // covariant with moderate middle coefficients
        base = IntBox{14, 14, 14, 14};
        all = scan_box(D, base, workers);
        for (const IBqf& H : reduced_indefinite_forms(D))
            for (const IForm& f : covariant_targeted(D, H, 64)) all.push_back(f);
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
    }
    std::map<std::string, IForm> reps;  // orbit key -> canonical integer form
    std::map<std::string, bool> seen_in_base;
    for (const IForm& f : all) {
        std::string key = sl_key_int(f);
        auto it = reps.find(key);
        if (it == reps.end()) reps.emplace(key, key_to_form(key));
        bool inside = std::llabs(f.a) <= base.Ba && std::llabs(f.b) <= base.Bb &&
                      std::llabs(f.c) <= base.Bc && std::llabs(f.d) <= base.Bd;
        seen_in_base[key] = seen_in_base[key] || inside;
    }
    for (auto& [key, inside] : seen_in_base)
        if (!inside && D < 0)
            throw std::logic_error("enumerate_orbits: orbit appears only in the safety margin");
    for (auto& [key, f] : reps)
        table.representatives.push_back(from_int_model(F, type_ideal, M, f));
    std::sort(table.representatives.begin(), table.representatives.end(),
              [](const CubicForm& x, const CubicForm& y) { return encode(x) < encode(y); });
    for (const CubicForm& f : table.representatives) {
        table.projective.push_back(is_projective(F, f));
        table.reducible.push_back(is_reducible(F, f));
    }
    return table;
}

OrbitTable enumerate_orbits_quadratic(const BaseField& F, const FracIdealR& type_ideal,
                                      const KElem& Delta, int workers) {
    (void)workers;
    // experimental: fixed shell radius, dedup by invariants plus bounded
    // witness search; completeness is not certified over a quadratic base
    OrbitTable table;
    table.base_d = F.d;
    table.type_ideal = type_ideal;
    table.Delta = Delta;
    table.experimental = true;
    FracIdealR R = ring_of_integers(F);
    FracIdealR ainv = ideal_inverse(type_ideal);
    FracIdealR ainv2 = ideal_mul(ainv, ainv);
    auto collect = [&](const FracIdealR& id, int radius) {
        std::vector<KElem> out{F.elem(0)};
        for (int r = 1; r <= radius; ++r)
            for (const KElem& e : id.shell(r)) out.push_back(e);
        return out;
    };
    const int radius = 2;
    auto as = collect(type_ideal, radius), bs = collect(R, radius), cs = collect(ainv, radius),
         ds = collect(ainv2, radius);
    std::vector<CubicForm> found;
    for (const KElem& a : as)
        for (const KElem& b : bs)
            for (const KElem& c : cs)
                for (const KElem& d : ds) {
                    CubicForm f{type_ideal, a, b, c, d};
                    if (disc(f) == Delta) found.push_back(f);
                }
    // dedup
    std::vector<CubicForm> reps;
    for (const CubicForm& f : found) {
        bool matched = false;
        for (const CubicForm& r : reps) {
            EquivResult res = equivalent(F, f, r, Group::SL, 2);
            if (res.kind == EquivResult::Kind::Witness) {
                matched = true;
                break;
            }
        }
        if (!matched) reps.push_back(f);
    }
    std::sort(reps.begin(), reps.end(),
              [](const CubicForm& x, const CubicForm& y) { return encode(x) < encode(y); });
    table.representatives = reps;
    for (const CubicForm& f : reps) {
        table.projective.push_back(is_projective(F, f));
        table.reducible.push_back(is_reducible(F, f));
    }
    return table;
}

}  // namespace

OrbitTable enumerate_orbits(const BaseField& F, const FracIdealR& type_ideal, const KElem& Delta,
                            int workers) {
    if (Delta.is_zero()) throw std::invalid_argument("enumerate_orbits: Delta = 0");
    if (!ideal_mul(ideal_inverse(type_ideal), ideal_inverse(type_ideal)).contains(Delta))
        throw std::invalid_argument("enumerate_orbits: Delta not in a^-2");
    if (F.d == 0) return enumerate_orbits_Z(F, type_ideal, Delta, workers);
    if (F.d < 0) return enumerate_orbits_quadratic(F, type_ideal, Delta, workers);
    throw std::invalid_argument("enumerate_orbits: unsupported base field");
}

long count_cl3(const BaseField& F, const FracIdealR& type_ideal, const KElem& Delta, int workers) {
    if (!k_sqrt(Delta).empty())
        throw std::invalid_argument("count_cl3: square discriminant (not a field order)");
    // build the ring of this discriminant and type
    FracIdealR ainv = ideal_inverse(type_ideal);
    FracIdealR ainv2 = ideal_mul(ainv, ainv);
    std::optional<QuadAlgebra> S;
    std::vector<KElem> ts{F.elem(0)};
    for (int r = 1; r <= 4; ++r)
        for (const KElem& t : ainv.shell(r)) ts.push_back(t);
    for (const KElem& t : ts) {
        KElem u4 = t * t - Delta;
        KElem u = u4 / F.elem(4);
        if (ainv2.contains(u)) {
            S = make_quad_algebra(F, type_ideal, t, u);
            break;
        }
    }
    if (!S) throw std::invalid_argument("count_cl3: Delta is not a discriminant for this type");
    UnitCubeProfile prof = unit_cube_profile(F, *S);
    long divisor = 1;
    for (int i = 0; i < prof.spec.s1 + prof.epsilon; ++i) divisor *= 3;
    OrbitTable table = enumerate_orbits(F, type_ideal, Delta, workers);
    long nproj = 0;
    for (bool b : table.projective) nproj += b ? 1 : 0;
    if (nproj % divisor != 0)
        throw std::logic_error("count_cl3: projective orbit count not divisible by 3^(s+eps)");
    return nproj / divisor;
}

// ---------------------------------------------------------------------------
// local densities
// ---------------------------------------------------------------------------

DensityReport local_density_projective(const BaseField& F, const PrimeIdealR& P,
                                       const FracIdealR& type_ideal, int workers,
                                       long residue_cap) {
    long long p = P.p.get_si();
    int deg = P.f;
    long long q = deg == 1 ? p : p * p;
    if (q > residue_cap) throw std::invalid_argument("local_density_projective: residue field cap");
    DensityReport rep;
    rep.p = P.p;
    rep.residue_degree = deg;
    rep.residue_size = q;
    rep.divides_type_ideal = (valuation(type_ideal, P) != 0);
    // residue field multiplication table
    std::vector<int> mul(static_cast<size_t>(q) * q);
    if (deg == 1) {
        for (long long i = 0; i < q; ++i)
            for (long long j = 0; j < q; ++j) mul[i * q + j] = static_cast<int>((i * j) % p);
    } else {
        long long c0 = ((omega_c0(F.d).get_num().get_si() % p) + p) % p;
        long long c1 = ((omega_c1(F.d).get_num().get_si() % p) + p) % p;
        for (long long i = 0; i < q; ++i)
            for (long long j = 0; j < q; ++j) {
                long long i0 = i % p, i1 = i / p, j0 = j % p, j1 = j / p;
                long long x = (i0 * j0 + c0 * ((i1 * j1) % p)) % p;
                long long y = (i0 * j1 + i1 * j0 + c1 * ((i1 * j1) % p)) % p;
                mul[i * q + j] = static_cast<int>(x + p * y);
            }
    }
    auto sub = [&](int x, int y) {
        if (deg == 1) return static_cast<int>(((x - y) % p + p) % p);
        long long x0 = x % p, x1 = x / p, y0 = y % p, y1 = y / p;
        return static_cast<int>(((x0 - y0 + p) % p) + p * ((x1 - y1 + p) % p));
    };
    int nw = std::max(workers, 1);
    std::vector<long long> counts(nw, 0);
    auto work = [&](int id) {
        long long local = 0;
        for (long long a = id; a < q; a += nw)
            for (long long b = 0; b < q; ++b) {
                int bb = mul[b * q + b];
                for (long long c = 0; c < q; ++c) {
                    int ac = mul[a * q + c];
                    if (sub(bb, ac) != 0) continue;
                    int bc = mul[b * q + c];
                    int cc = mul[c * q + c];
                    for (long long d = 0; d < q; ++d) {
                        int ad = mul[a * q + d];
                        if (sub(ad, bc) != 0) continue;
                        int bd = mul[b * q + d];
                        if (sub(cc, bd) != 0) continue;
                        ++local;
                    }
                }
            }
        counts[id] = local;
    };
    if (nw == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (int i = 0; i < nw; ++i) ts.emplace_back(work, i);
        for (auto& t : ts) t.join();
    }
    long long singular = std::accumulate(counts.begin(), counts.end(), 0LL);
    rep.total_count = q * q * q * q;
    rep.projective_count = rep.total_count - singular;
    rep.density = QQ(static_cast<long>(rep.projective_count), static_cast<unsigned long>(rep.total_count));
    rep.density.canonicalize();
    return rep;
}

// ---------------------------------------------------------------------------
// archimedean checks
// ---------------------------------------------------------------------------

std::complex<double> num_disc(const NumCubic& f) {
    auto [a, b, c, d] = f;
    return -3.0 * b * b * c * c + 4.0 * a * c * c * c + 4.0 * b * b * b * d + a * a * d * d -
           6.0 * a * b * c * d;
}

NumCubic archimedean_normal_form(std::complex<double> Delta, bool complex_place) {
    double mod = std::abs(Delta);
    if (mod == 0.0) throw std::invalid_argument("archimedean_normal_form: Delta = 0");
    std::complex<double> unit = Delta / mod;
    if (!complex_place) {
        if (std::abs(unit.imag()) > 1e-12)
            throw std::invalid_argument("archimedean_normal_form: complex Delta at a real place");
        unit = std::complex<double>(unit.real() > 0 ? 1.0 : -1.0, 0.0);
    }
    double scale = std::pow(mod, 0.25);
    return {0.0, scale, 0.0, scale * unit / 4.0};
}

namespace {

// roots of the homogeneous cubic as projective points (x : y)
std::vector<std::pair<std::complex<double>, std::complex<double>>> projective_roots(
    const NumCubic& f) {
    std::vector<std::pair<std::complex<double>, std::complex<double>>> out;
    double scale = std::max({std::abs(f.a), std::abs(f.b), std::abs(f.c), std::abs(f.d)});
    if (std::abs(f.a) < 1e-13 * scale) {
        out.push_back({1.0, 0.0});
        // remaining quadratic 3b x^2 + 3c x + d (in x = X/Y)
        std::complex<double> A = 3.0 * f.b, B = 3.0 * f.c, C = f.d;
        std::complex<double> sq = std::sqrt(B * B - 4.0 * A * C);
        out.push_back({(-B + sq) / (2.0 * A), 1.0});
        out.push_back({(-B - sq) / (2.0 * A), 1.0});
        return out;
    }
    // Durand-Kerner on the monic cubic
    std::complex<double> c2 = 3.0 * f.b / f.a, c1 = 3.0 * f.c / f.a, c0 = f.d / f.a;
    auto eval = [&](std::complex<double> z) { return ((z + c2) * z + c1) * z + c0; };
    std::vector<std::complex<double>> z{{0.4, 0.9}, {-0.6, 0.6}, {0.2, -0.8}};
    for (int it = 0; it < 400; ++it) {
        for (int i = 0; i < 3; ++i) {
            std::complex<double> den = 1.0;
            for (int j = 0; j < 3; ++j)
                if (j != i) den *= (z[i] - z[j]);
            z[i] -= eval(z[i]) / den;
        }
    }
    for (auto& r : z) out.push_back({r, 1.0});
    return out;
}

}  // namespace

int stabilizer_order_numeric(const NumCubic& f, double tol) {
    double scale = std::max({std::abs(f.a), std::abs(f.b), std::abs(f.c), std::abs(f.d)});
    std::complex<double> D = num_disc(f);
    if (std::abs(D) < tol * scale * scale * scale * scale)
        throw std::domain_error("stabilizer_order_numeric: discriminant too close to zero");
    if (std::abs(D.imag()) > tol * std::abs(D))
        throw std::invalid_argument("stabilizer_order_numeric: form is not real");
    auto roots = projective_roots(f);
    bool all_real = true;
    for (auto& [x, y] : roots) {
        double m = std::max(std::abs(x), std::abs(y));
        std::complex<double> ratio = std::abs(y) > std::abs(x) ? x / y : y / x;
        if (std::abs(ratio.imag()) > 1e-7 * std::max(1.0, m)) all_real = false;
    }
    // a real 3-cycle of the root lines exists exactly in the totally real case
    if (!all_real) {
        if (D.real() < 0) throw std::logic_error("stabilizer_order_numeric: sign rule violated");
        return 2;
    }
    if (D.real() > 0) throw std::logic_error("stabilizer_order_numeric: sign rule violated");
    // build the cyclic line permutation as a real matrix and verify it
    auto realize = [&](const std::pair<std::complex<double>, std::complex<double>>& pr) {
        double m = std::max(std::abs(pr.first), std::abs(pr.second));
        return std::pair<double, double>{(pr.first / m).real(), (pr.second / m).real()};
    };
    auto v1 = realize(roots[0]), v2 = realize(roots[1]), v3 = realize(roots[2]);
    auto cross = [](std::pair<double, double> a, std::pair<double, double> b) {
        return a.first * b.second - a.second * b.first;
    };
    // v3 = al*v1 + be*v2
    double det12 = cross(v1, v2);
    double al = cross(v3, v2) / det12, be = cross(v1, v3) / det12;
    // M = P^-1 diag(l1, l2) T with rows P = (v1, v2), T = (v2, v3);
    // l2/l1 fixed by v3 M ~ v1
    double l1 = 1.0;
    double l2 = -al * l1 * cross(v2, v1) / (be * cross(v3, v1));
    double P[2][2] = {{v1.first, v1.second}, {v2.first, v2.second}};
    double T[2][2] = {{l1 * v2.first, l1 * v2.second}, {l2 * v3.first, l2 * v3.second}};
    double detP = P[0][0] * P[1][1] - P[0][1] * P[1][0];
    double Pi[2][2] = {{P[1][1] / detP, -P[0][1] / detP}, {-P[1][0] / detP, P[0][0] / detP}};
    double M[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) M[i][j] = Pi[i][0] * T[0][j] + Pi[i][1] * T[1][j];
    // rescale M so that act(M, f) = f
    NumCubic g;
    {
        auto actnum = [&](double m00, double m01, double m10, double m11) {
            std::complex<double> p = m00, q = m01, r = m10, s = m11;
            std::complex<double> det = p * s - q * r;
            NumCubic o;
            o.a = (f.a * p * p * p + 3.0 * f.b * p * p * q + 3.0 * f.c * p * q * q +
                   f.d * q * q * q) / det;
            o.b = (f.a * p * p * r + f.b * (p * p * s + 2.0 * p * q * r) +
                   f.c * (q * q * r + 2.0 * p * q * s) + f.d * q * q * s) / det;
            o.c = (f.a * p * r * r + f.b * (2.0 * p * r * s + q * r * r) +
                   f.c * (p * s * s + 2.0 * q * r * s) + f.d * q * s * s) / det;
            o.d = (f.a * r * r * r + 3.0 * f.b * r * r * s + 3.0 * f.c * r * s * s +
                   f.d * s * s * s) / det;
            return o;
        };
        g = actnum(M[0][0], M[0][1], M[1][0], M[1][1]);
        // act(cM, f) = c * act(M, f): pick c = largest-coefficient ratio
        std::complex<double> kappa = 0.0;
        double best = -1.0;
        auto pick = [&](std::complex<double> num, std::complex<double> den) {
            if (std::abs(den) > best) {
                best = std::abs(den);
                kappa = num / den;
            }
        };
        pick(g.a, f.a);
        pick(g.b, f.b);
        pick(g.c, f.c);
        pick(g.d, f.d);
        double c = 1.0 / kappa.real();
        g = actnum(c * M[0][0], c * M[0][1], c * M[1][0], c * M[1][1]);
    }
    double err = std::max({std::abs(g.a - f.a), std::abs(g.b - f.b), std::abs(g.c - f.c),
                           std::abs(g.d - f.d)});
    if (err > 1e-7 * scale)
        throw std::logic_error("stabilizer_order_numeric: rotation verification failed");
    return 6;
}

std::pair<GroupElem, CubicForm> parabolic_reduce(const BaseField& F, const CubicForm& f) {
    if (!f.a.is_zero()) throw std::invalid_argument("parabolic_reduce: leading coefficient != 0");
    if (f.b.is_zero()) throw std::invalid_argument("parabolic_reduce: b = 0");
    // kill the c slot: (x, y) -> (x + lambda y, y) with lambda = -c / (2b)
    KElem lambda = -f.c / (QQ(2) * f.b);
    GroupElem g1{F.d, F.elem(1), F.elem(0), lambda, F.elem(1)};
    CubicForm f1 = act_unchecked(g1, f);
    // normalize b to 1 (b is invertible in K)
    KElem m = k_inv(f1.b);
    GroupElem g2{F.d, m, F.elem(0), F.elem(0), k_inv(m)};
    CubicForm f2 = act_unchecked(g2, f1);
    GroupElem g = group_mul(g1, g2);
    if (!in_parabolic(g)) throw std::logic_error("parabolic_reduce: transform left P");
    if (!f2.a.is_zero() || !f2.c.is_zero() || !(disc(f2) == disc(f)))
        throw std::logic_error("parabolic_reduce: normalization failed");
    return {g, f2};
}

std::string orbit_key_Z(const BaseField& F, const CubicForm& f, Group grp) {
    if (F.d != 0) throw std::invalid_argument("orbit_key_Z: base must be Q");
    ZModel M{rational_ideal_gen(f.type_ideal)};
    IForm fi = to_int_model(M, f);
    return grp == Group::GL ? gl_key_int(fi) : sl_key_int(fi);
}

}  // namespace trisym
