#include "trisym/cubic_forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "trisym/polyk.hpp"

namespace trisym {

CubicForm make_cubic_form(const BaseField& F, const FracIdealR& type_ideal, const KElem& a,
                          const KElem& b, const KElem& c, const KElem& d) {
    FracIdealR R = ring_of_integers(F);
    FracIdealR ainv = ideal_inverse(type_ideal);
    FracIdealR ainv2 = ideal_mul(ainv, ainv);
    if (!type_ideal.contains(a) || !R.contains(b) || !ainv.contains(c) || !ainv2.contains(d))
        throw std::invalid_argument("make_cubic_form: coefficient outside its slot");
    return {type_ideal, a, b, c, d};
}

KElem disc(const CubicForm& f) {
    const KElem &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    return QQ(-3) * b * b * c * c + QQ(4) * a * c * c * c + QQ(4) * b * b * b * d + a * a * d * d -
           QQ(6) * a * b * c * d;
}

HessianForm hessian(const CubicForm& f) {
    return {f.type_ideal, f.b * f.b - f.a * f.c, f.a * f.d - f.b * f.c, f.c * f.c - f.b * f.d};
}

LinearBQF hessian_as_bqf(const BaseField& F, const CubicForm& f) {
    HessianForm H = hessian(f);
    LinearBQF g;
    g.steinitz = f.type_ideal;
    g.b1 = ring_of_integers(F);
    g.b2 = f.type_ideal;
    g.p = H.p;
    g.q = H.q;
    g.r = H.r;
    return g;
}

bool is_projective(const BaseField& F, const CubicForm& f) {
    return is_primitive(F, hessian_as_bqf(F, f));
}

GroupElem identity_elem(const BaseField& F) {
    return {F.d, F.elem(1), F.elem(0), F.elem(0), F.elem(1)};
}

bool in_gl(const BaseField& F, const FracIdealR& type_ideal, const GroupElem& g) {
    FracIdealR R = ring_of_integers(F);
    FracIdealR ainv = ideal_inverse(type_ideal);
    return R.contains(g.m00) && R.contains(g.m11) && type_ideal.contains(g.m01) &&
           ainv.contains(g.m10) && is_unit_in_R(F, g.det());
}

bool in_sl(const BaseField& F, const FracIdealR& type_ideal, const GroupElem& g) {
    return in_gl(F, type_ideal, g) && g.det() == F.elem(1);
}

bool in_parabolic(const GroupElem& g) {
    return g.m01.is_zero() && g.det() == KElem(g.d, 1, 0);
}

GroupElem group_mul(const GroupElem& g, const GroupElem& h) {
    return {g.d,
            g.m00 * h.m00 + g.m01 * h.m10, g.m00 * h.m01 + g.m01 * h.m11,
            g.m10 * h.m00 + g.m11 * h.m10, g.m10 * h.m01 + g.m11 * h.m11};
}

GroupElem group_inverse(const GroupElem& g) {
    KElem det = g.det();
    if (det.is_zero()) throw std::invalid_argument("group_inverse: singular");
    KElem inv = k_inv(det);
    return {g.d, inv * g.m11, -(inv * g.m01), -(inv * g.m10), inv * g.m00};
}

CubicForm act_unchecked(const GroupElem& g, const CubicForm& f) {
    // substitute X = m00 x + m10 y, Y = m01 x + m11 y into f(X, Y)
    const KElem &p = g.m00, &q = g.m01, &r = g.m10, &s = g.m11;
    KElem det = g.det();
    if (det.is_zero()) throw std::invalid_argument("act: singular matrix");
    const KElem &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    QQ three(3);
    KElem A = a * p * p * p + three * b * p * p * q + three * c * p * q * q + d * q * q * q;
    KElem B3 = three * (a * p * p * r) + three * b * (p * p * s + QQ(2) * p * q * r) +
               three * c * (q * q * r + QQ(2) * p * q * s) + three * (d * q * q * s);
    KElem C3 = three * (a * p * r * r) + three * b * (QQ(2) * p * r * s + q * r * r) +
               three * c * (p * s * s + QQ(2) * q * r * s) + three * (d * q * s * s);
    KElem D = a * r * r * r + three * b * r * r * s + three * c * r * s * s + d * s * s * s;
    KElem inv = k_inv(det);
    QQ third(1, 3);
    return {f.type_ideal, inv * A, inv * (third * B3), inv * (third * C3), inv * D};
}

CubicForm act(const BaseField& F, const GroupElem& g, const CubicForm& f) {
    if (!in_gl(F, f.type_ideal, g)) throw std::invalid_argument("act: g not in GL(R + A)");
    return act_unchecked(g, f);
}

CubicForm phi_forward(const BaseField& F, const BalancedQuadruple& q) {
    BalanceReport rep = verify_balanced(q);
    if (!rep.ok()) throw std::invalid_argument("phi_forward: quadruple is not balanced");
    const QuadAlgebra& S = q.S;
    LElem dinv = l_inv(S, q.delta);
    LElem a3 = l_mul(S, l_pow(S, q.alpha, 3), dinv);
    LElem a2b = l_mul(S, l_mul(S, l_pow(S, q.alpha, 2), q.beta), dinv);
    LElem ab2 = l_mul(S, l_mul(S, q.alpha, l_pow(S, q.beta, 2)), dinv);
    LElem b3 = l_mul(S, l_pow(S, q.beta, 3), dinv);
    CubicForm f = make_cubic_form(F, S.steinitz, a3.y, a2b.y, ab2.y, b3.y);
    if (!(disc(f) == S.disc())) throw std::logic_error("phi_forward: discriminant mismatch");
    return f;
}

namespace {

// pre-moves guaranteeing Hessian slots p != 0 and r != 0 (equivalently the
// inverse construction's s = p*r is a unit of K); returns the composed move
GroupElem normalize_for_inverse(const BaseField& F, CubicForm& f) {
    GroupElem g = identity_elem(F);
    auto hess_p = [&]() { return f.b * f.b - f.a * f.c; };
    auto hess_r = [&]() { return f.c * f.c - f.b * f.d; };
    FracIdealR ainv = ideal_inverse(f.type_ideal);
    if (hess_r().is_zero()) {
        bool done = false;
        for (int radius = 1; radius <= 8 && !done; ++radius)
            for (const KElem& tt : ainv.shell(radius)) {
                GroupElem m{F.d, F.elem(1), F.elem(0), tt, F.elem(1)};
                CubicForm cand = act(F, m, f);
                KElem r2 = cand.c * cand.c - cand.b * cand.d;
                if (!r2.is_zero()) {
                    f = cand;
                    g = group_mul(g, m);
                    done = true;
                    break;
                }
            }
        if (!done) throw std::logic_error("phi_inverse: could not clear the r slot");
    }
    if (hess_p().is_zero()) {
        bool done = false;
        for (int radius = 1; radius <= 8 && !done; ++radius)
            for (const KElem& mm : f.type_ideal.shell(radius)) {
                GroupElem m{F.d, F.elem(1), mm, F.elem(0), F.elem(1)};
                CubicForm cand = act(F, m, f);
                KElem p2 = cand.b * cand.b - cand.a * cand.c;
                KElem r2 = cand.c * cand.c - cand.b * cand.d;
                if (!p2.is_zero() && !r2.is_zero()) {
                    f = cand;
                    g = group_mul(g, m);
                    done = true;
                    break;
                }
            }
        if (!done) throw std::logic_error("phi_inverse: could not clear the p slot");
    }
    return g;
}

}  // namespace

BalancedQuadruple phi_inverse(const BaseField& F, const CubicForm& f_in) {
    if (disc(f_in).is_zero()) throw std::invalid_argument("phi_inverse: degenerate discriminant");
    CubicForm f = f_in;
    // the construction needs both outer Hessian slots nonzero
    GroupElem pre = normalize_for_inverse(F, f);
    const KElem &a0 = f.a, &a1 = f.b, &a2 = f.c, &a3 = f.d;
    // equivariant covariant slots: p = a1^2 - a0 a2, q = a1 a2 - a0 a3,
    // r = a2^2 - a1 a3, ring xi^2 = q xi - p r
    KElem p = a1 * a1 - a0 * a2;
    KElem q = a1 * a2 - a0 * a3;
    KElem r = a2 * a2 - a1 * a3;
    KElem shift;
    QuadAlgebra S = make_quad_algebra_shift(F, f.type_ideal, q, p * r, &shift);
    auto raw = [&](const KElem& x, const KElem& y) -> LElem {
        // x + y*xi_raw in canonical coordinates, xi_canonical = xi_raw + shift
        return {x - y * shift, y};
    };
    KElem c1 = -(a0 * r), c2 = -(a1 * r);
    LElem alpha = raw(c1, a1), beta = raw(c2, a2);
    BalancedQuadruple out;
    out.S = S;
    out.alpha = alpha;
    out.beta = beta;
    out.delta = l_mul(S, alpha, beta);
    out.s = p * r;
    out.I = s_ideal_from_pair(S, alpha, beta);
    // all four defining ratios must agree on delta
    {
        KElem c0 = a1 * p - a0 * q, c3 = -(a2 * r);
        LElem lhs0 = l_pow(S, alpha, 3);
        LElem lhs3 = l_pow(S, beta, 3);
        if (!(lhs0 == l_mul(S, out.delta, raw(c0, a0))) ||
            !(lhs3 == l_mul(S, out.delta, raw(c3, a3))))
            throw std::logic_error("phi_inverse: ratio consistency failed");
    }
    BalanceReport rep = verify_balanced(out);
    if (!rep.ok()) throw std::logic_error("phi_inverse: output not balanced");
    // undo the pre-moves on the stored decomposition: for the original form,
    // the pair transforms by the inverse move
    if (!(pre.m01.is_zero() && pre.m10.is_zero())) {
        GroupElem inv = group_inverse(pre);
        LElem alpha2 = l_add(l_scale(inv.m00, out.alpha), l_scale(inv.m01, out.beta));
        LElem beta2 = l_add(l_scale(inv.m10, out.alpha), l_scale(inv.m11, out.beta));
        out.alpha = alpha2;
        out.beta = beta2;
        out.I = s_ideal_from_pair(S, alpha2, beta2);
        rep = verify_balanced(out);
        if (!rep.ok()) throw std::logic_error("phi_inverse: output not balanced after undo");
    }
    CubicForm check = phi_forward(F, out);
    if (check != f_in) throw std::logic_error("phi_inverse: round-trip mismatch");
    return out;
}

bool is_reducible(const BaseField& F, const CubicForm& f) {
    if (disc(f).is_zero()) throw std::invalid_argument("is_reducible: degenerate form");
    if (f.a.is_zero() || f.d.is_zero()) return true;  // zero at (1:0) or (0:1)
    QQ three(3);
    KPoly p{f.d, three * f.c, three * f.b, f.a};
    return !roots_in_K(F.d, p).empty();
}

bool delta_is_cube(const BalancedQuadruple& q) {
    return !l_cbrt(q.S, q.delta).empty();
}

BalancedQuadruple reducible_ideal_map(const BaseField& F, const QuadAlgebra& S, const SIdeal& I) {
    if (I.S != S) throw std::invalid_argument("reducible_ideal_map: parent mismatch");
    if (s_ideal_pow(I, 3) != s_unit_ideal(S))
        throw std::invalid_argument("reducible_ideal_map: I^3 != S");
    if (!(s_ideal_norm(I) == ring_of_integers(F)))
        throw std::invalid_argument("reducible_ideal_map: [S:I] != R");
    BalancedQuadruple q;
    q.S = S;
    q.I = I;
    q.delta = LElem{F.elem(1), F.elem(0)};
    q.s = F.elem(1);
    auto [alpha, beta] = decompose_r_a(I, q.s);
    q.alpha = alpha;
    q.beta = beta;
    BalanceReport rep = verify_balanced(q);
    if (!rep.ok()) throw std::logic_error("reducible_ideal_map: quadruple not balanced");
    return q;
}

namespace {

std::string slot_list(const QLattice& lat) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < lat.dim(); ++i) {
        if (i) os << ";";
        for (int j = 0; j < lat.dim(); ++j) {
            if (j) os << ",";
            os << lat.at(i, j).get_str();
        }
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string encode_ideal(const FracIdealR& a) {
    if (a.lat == QLattice::standard(a.lat.dim())) return "R";
    return slot_list(a.lat);
}

std::string encode(const CubicForm& f) {
    std::ostringstream os;
    os << k_to_string(f.a) << "," << k_to_string(f.b) << "," << k_to_string(f.c) << ","
       << k_to_string(f.d) << "@" << encode_ideal(f.type_ideal);
    return os.str();
}

CubicForm decode(const BaseField& F, const std::string& text) {
    auto at = text.rfind('@');
    if (at == std::string::npos) throw std::invalid_argument("decode: missing '@'");
    std::string coeffs = text.substr(0, at), ideal = text.substr(at + 1);
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : coeffs) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw std::invalid_argument("decode: need four coefficients");
    FracIdealR A;
    if (ideal == "R") {
        A = ring_of_integers(F);
    } else {
        if (ideal.size() < 2 || ideal.front() != '[' || ideal.back() != ']')
            throw std::invalid_argument("decode: bad ideal encoding");
        std::string body = ideal.substr(1, ideal.size() - 2);
        std::vector<std::vector<QQ>> rows;
        std::string rowstr;
        std::istringstream is(body);
        while (std::getline(is, rowstr, ';')) {
            std::vector<QQ> row;
            std::istringstream rs(rowstr);
            std::string ent;
            while (std::getline(rs, ent, ',')) {
                QQ v(ent);
                v.canonicalize();
                row.push_back(v);
            }
            rows.push_back(row);
        }
        A.d = F.d;
        A.lat = QLattice::from_generators(F.degree(), rows);
    }
    return make_cubic_form(F, A, k_parse(F.d, parts[0]), k_parse(F.d, parts[1]),
                           k_parse(F.d, parts[2]), k_parse(F.d, parts[3]));
}

namespace {

// all witnesses must preserve the equivariant covariant exactly; search a
// height-ordered spiral of candidate matrices
EquivResult spiral_search(const BaseField& F, const CubicForm& f, const CubicForm& g, Group grp,
                          int height_bound) {
    FracIdealR R = ring_of_integers(F);
    const FracIdealR& A = f.type_ideal;
    FracIdealR Ainv = ideal_inverse(A);
    auto elems = [&](const FracIdealR& ideal, int radius) {
        std::vector<KElem> out{KElem(F.d, 0, 0)};
        for (int rr = 1; rr <= radius; ++rr)
            for (const KElem& e : ideal.shell(rr)) out.push_back(e);
        return out;
    };
    for (int h = 1; h <= height_bound; ++h) {
        auto diag = elems(R, h);
        auto upper = elems(A, h);
        auto lower = elems(Ainv, h);
        for (const KElem& m00 : diag)
            for (const KElem& m11 : diag)
                for (const KElem& m01 : upper)
                    for (const KElem& m10 : lower) {
                        GroupElem cand{F.d, m00, m01, m10, m11};
                        KElem det = cand.det();
                        if (det.is_zero() || !is_unit_in_R(F, det)) continue;
                        if (grp == Group::SL && !(det == F.elem(1))) continue;
                        // quick height filter keeps the spiral from repeating
                        if (h > 1) {
                            bool on_shell = false;
                            auto shellof = [&](const KElem& e, const FracIdealR& id) {
                                std::vector<QQ> cs =
                                    id.lat.coords(F.degree() == 2 ? std::vector<QQ>{e.x, e.y}
                                                                  : std::vector<QQ>{e.x});
                                QQ m = 0;
                                for (const QQ& c : cs) { QQ a2 = abs(c); if (a2 > m) m = a2; }
                                return m;
                            };
                            QQ hh = shellof(m00, R);
                            for (const QQ& v : {shellof(m11, R), shellof(m01, A), shellof(m10, Ainv)})
                                if (v > hh) hh = v;
                            on_shell = (hh == h);
                            if (!on_shell) continue;
                        }
                        if (act_unchecked(cand, f) == g) return {EquivResult::Kind::Witness, cand, ""};
                    }
    }
    return {EquivResult::Kind::Inconclusive, std::nullopt, "height bound exhausted"};
}

}  // namespace

EquivResult equivalent(const BaseField& F, const CubicForm& f, const CubicForm& g, Group grp,
                       int height_bound) {
    if (f.type_ideal != g.type_ideal)
        return {EquivResult::Kind::Distinct, std::nullopt, "different type ideals"};
    KElem df = disc(f), dg = disc(g);
    if (grp == Group::SL) {
        if (!(df == dg)) return {EquivResult::Kind::Distinct, std::nullopt, "disc"};
    } else {
        // disc may move by det(g)^2
        bool match = false;
        for (const KElem& u : unit_candidates(F, 2))
            if (df * u * u == dg) match = true;
        if (!match) return {EquivResult::Kind::Distinct, std::nullopt, "disc"};
    }
    if (is_projective(F, f) != is_projective(F, g))
        return {EquivResult::Kind::Distinct, std::nullopt, "projectivity"};
    if (!df.is_zero() && is_reducible(F, f) != is_reducible(F, g))
        return {EquivResult::Kind::Distinct, std::nullopt, "reducibility"};
    if (f == g) return {EquivResult::Kind::Witness, identity_elem(F), ""};
    return spiral_search(F, f, g, grp, height_bound);
}

}  // namespace trisym
