#pragma once

#include "trisym/quad_algebra.hpp"

namespace trisym {

// monic form x^2 + a*x*y + b*y^2 attached to type-a quadratic rings
struct MonicQuadForm {
    FracIdealR steinitz;  // the ideal a
    KElem a, b;

    KElem disc() const { return a * a - QQ(4) * b; }
    bool operator==(const MonicQuadForm& o) const {
        return steinitz == o.steinitz && a == o.a && b == o.b;
    }
};

// lower-triangular matrix (1, 0; u, lambda) with u in a^-1 and lambda in R^x
struct GAElem {
    KElem u, lambda;
};

MonicQuadForm psi(const QuadAlgebra& S);
QuadAlgebra psi_inverse(const BaseField& F, const MonicQuadForm& f);
MonicQuadForm g_action(const BaseField& F, const GAElem& g, const MonicQuadForm& f);

// linear binary quadratic form p x^2 + q x y + r y^2 on a module b1 e1 + b2 e2
// with values in the rank-one module for c = a^-1 b1 b2
struct LinearBQF {
    FracIdealR steinitz;  // a
    FracIdealR b1, b2;    // module coefficient ideals
    KElem p, q, r;

    KElem disc() const { return q * q - QQ(4) * p * r; }
};

LinearBQF bqf_from_ideal(const SIdeal& I);
// rebuilds an oriented ring and ideal whose attached form is f
std::pair<QuadAlgebra, SIdeal> ideal_from_bqf(const BaseField& F, const LinearBQF& f);
bool is_primitive(const BaseField& F, const LinearBQF& f);

}  // namespace trisym
