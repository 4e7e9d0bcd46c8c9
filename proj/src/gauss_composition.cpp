#include "trisym/gauss_composition.hpp"

#include <stdexcept>

namespace trisym {

MonicQuadForm psi(const QuadAlgebra& S) {
    // xi^2 = t xi - u is xi^2 + a xi + b = 0 with a = -t, b = u
    return {S.steinitz, -S.t, S.u};
}

QuadAlgebra psi_inverse(const BaseField& F, const MonicQuadForm& f) {
    if (f.disc().is_zero()) throw std::invalid_argument("psi_inverse: degenerate form");
    return make_quad_algebra(F, f.steinitz, -f.a, f.b);
}

MonicQuadForm g_action(const BaseField& F, const GAElem& g, const MonicQuadForm& f) {
    if (!ideal_inverse(f.steinitz).contains(g.u))
        throw std::invalid_argument("g_action: u not in a^-1");
    if (!is_unit_in_R(F, g.lambda)) throw std::invalid_argument("g_action: lambda not a unit");
    KElem a2 = f.a * g.lambda + QQ(2) * g.u;
    KElem b2 = f.b * g.lambda * g.lambda + g.u * f.a * g.lambda + g.u * g.u;
    return {f.steinitz, a2, b2};
}

LinearBQF bqf_from_ideal(const SIdeal& I) {
    long d = I.S.base_d;
    PseudoBasis pb = s_ideal_pseudo_basis(I);
    std::vector<std::vector<KElem>> basis{pb.items[0].v, pb.items[1].v};
    LElem eta1{pb.items[0].v[0], pb.items[0].v[1]};
    LElem eta2{pb.items[1].v[0], pb.items[1].v[1]};
    LElem xi{KElem(d, 0, 0), KElem(d, 1, 0)};
    std::vector<KElem> c1 = k_solve(d, basis, {l_mul(I.S, xi, eta1).x, l_mul(I.S, xi, eta1).y});
    std::vector<KElem> c2 = k_solve(d, basis, {l_mul(I.S, xi, eta2).x, l_mul(I.S, xi, eta2).y});
    KElem a = c1[0], c = c1[1], b = c2[0], dd = c2[1];
    LinearBQF f;
    f.steinitz = I.S.steinitz;
    f.b1 = pb.items[0].coeff;
    f.b2 = pb.items[1].coeff;
    f.p = c;
    f.q = dd - a;
    f.r = -b;
    return f;
}

std::pair<QuadAlgebra, SIdeal> ideal_from_bqf(const BaseField& F, const LinearBQF& f_in) {
    LinearBQF f = f_in;
    if (f.p.is_zero() && f.q.is_zero() && f.r.is_zero())
        throw std::invalid_argument("ideal_from_bqf: zero form");
    // move p off zero if needed: (x, y) -> (x, s x + y) turns p into
    // p + q s + r s^2 and keeps the module; s runs over b1^-1 b2
    if (f.p.is_zero()) {
        FracIdealR slot = ideal_mul(ideal_inverse(f.b1), f.b2);
        bool done = false;
        for (int radius = 1; radius <= 8 && !done; ++radius)
            for (const KElem& s : slot.shell(radius)) {
                KElem p2 = f.p + f.q * s + f.r * s * s;
                if (!p2.is_zero()) {
                    f.q = f.q + QQ(2) * f.r * s;
                    f.p = p2;
                    done = true;
                    break;
                }
            }
        if (!done) throw std::logic_error("ideal_from_bqf: could not normalize p");
    }
    KElem shift;
    QuadAlgebra S = make_quad_algebra_shift(F, f.steinitz, f.q, f.p * f.r, &shift);
    // eta1 = p, eta2 = xi_raw = xi - shift; then xi_raw eta1 = p eta2 and
    // xi_raw eta2 = -r eta1 + q eta2
    LElem eta1{f.p, KElem(F.d, 0, 0)};
    LElem eta2{-shift, KElem(F.d, 1, 0)};
    std::vector<LElem> gens;
    for (int i = 0; i < F.degree(); ++i) {
        gens.push_back(l_scale(f.b1.basis_elem(i), eta1));
        gens.push_back(l_scale(f.b2.basis_elem(i), eta2));
    }
    std::vector<std::vector<QQ>> rows;
    for (const LElem& g : gens) rows.push_back(l_to_vec(S, g));
    SIdeal I;
    I.S = S;
    I.lat = QLattice::from_generators(2 * F.degree(), rows);
    // S-module sanity
    SIdeal prod = s_ideal_mul(I, s_unit_ideal(S));
    if (prod != I) throw std::logic_error("ideal_from_bqf: module not S-stable");
    return {S, I};
}

bool is_primitive(const BaseField& F, const LinearBQF& f) {
    FracIdealR value = ideal_mul(ideal_inverse(f.steinitz), ideal_mul(f.b1, f.b2));
    bool have = false;
    FracIdealR content = value;  // placeholder, replaced on first nonzero term
    auto add_term = [&](const KElem& coef, const FracIdealR& slot) {
        if (coef.is_zero()) return;
        FracIdealR term = ideal_mul(coef, slot);
        content = have ? ideal_sum(content, term) : term;
        have = true;
    };
    add_term(f.p, ideal_mul(f.b1, f.b1));
    add_term(f.q, ideal_mul(f.b1, f.b2));
    add_term(f.r, ideal_mul(f.b2, f.b2));
    if (!have) throw std::invalid_argument("is_primitive: zero form");
    return content == value;
}

}  // namespace trisym
