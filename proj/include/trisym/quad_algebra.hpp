#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisym/rlattice.hpp"

namespace trisym {

// Oriented quadratic R-algebra S = R + a*xi with xi^2 = t*xi - u and the
// orientation normalized so that pi_K(1 ^ xi) = 1.  Construction reduces t
// to a canonical residue modulo 2a^-1 (translations xi -> xi + c preserve
// the oriented ring), so equality of oriented rings is field equality.
struct QuadAlgebra {
    long base_d = 0;
    FracIdealR steinitz;  // the ideal a
    KElem t, u;

    KElem disc() const { return t * t - QQ(4) * u; }
    bool operator==(const QuadAlgebra& o) const {
        return base_d == o.base_d && steinitz == o.steinitz && t == o.t && u == o.u;
    }
    bool operator!=(const QuadAlgebra& o) const { return !(*this == o); }
};

// element x + y*xi of L = S tensor K
struct LElem {
    KElem x, y;

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    bool operator==(const LElem& o) const { return x == o.x && y == o.y; }
    bool operator!=(const LElem& o) const { return !(*this == o); }
};

LElem l_add(const LElem& a, const LElem& b);
LElem l_sub(const LElem& a, const LElem& b);
LElem l_neg(const LElem& a);
LElem l_scale(const KElem& c, const LElem& a);
LElem l_mul(const QuadAlgebra& S, const LElem& a, const LElem& b);
LElem l_conj(const QuadAlgebra& S, const LElem& a);
KElem l_norm(const QuadAlgebra& S, const LElem& a);
KElem l_trace(const QuadAlgebra& S, const LElem& a);
LElem l_inv(const QuadAlgebra& S, const LElem& a);  // throws on zero divisors
LElem l_div(const QuadAlgebra& S, const LElem& a, const LElem& b);
LElem l_pow(const QuadAlgebra& S, const LElem& a, int e);

// throws std::invalid_argument on membership violations or disc == 0
QuadAlgebra make_quad_algebra(const BaseField& F, const FracIdealR& a, const KElem& t,
                              const KElem& u);

// same, reporting the translation used: xi_canonical = xi_raw + shift
QuadAlgebra make_quad_algebra_shift(const BaseField& F, const FracIdealR& a, const KElem& t,
                                    const KElem& u, KElem* shift_out);

// is x + y*xi integral, i.e. x in R and y in a?
bool l_integral(const QuadAlgebra& S, const LElem& e);

// Fractional S-ideal, stored as a full Z-lattice in L with respect to the
// fixed Q-basis (1, w, xi, w*xi) (or (1, xi) over Q).
struct SIdeal {
    QuadAlgebra S;
    QLattice lat;

    bool operator==(const SIdeal& o) const { return S == o.S && lat == o.lat; }
    bool operator!=(const SIdeal& o) const { return !(*this == o); }
};

std::vector<QQ> l_to_vec(const QuadAlgebra& S, const LElem& e);
LElem l_from_vec(const QuadAlgebra& S, const std::vector<QQ>& v);

SIdeal s_unit_ideal(const QuadAlgebra& S);
SIdeal s_ideal_from_gens(const QuadAlgebra& S, const std::vector<LElem>& gens);
// R alpha + a beta as an S-submodule of L (checked)
SIdeal s_ideal_from_pair(const QuadAlgebra& S, const LElem& alpha, const LElem& beta);

SIdeal s_ideal_mul(const SIdeal& I, const SIdeal& J);
SIdeal s_ideal_scale(const LElem& g, const SIdeal& I);
SIdeal s_ideal_pow(const SIdeal& I, int e);  // e >= 0
bool s_ideal_contains(const SIdeal& I, const LElem& e);

// colon module (A : B) = { x in L : x B subset A }
SIdeal s_colon(const SIdeal& A, const SIdeal& B);
bool is_invertible(const SIdeal& I);

// pseudo-basis of I as an R-module in coordinates (1, xi)
PseudoBasis s_ideal_pseudo_basis(const SIdeal& I);

// [S:I]_R via the explicit determinant formula
FracIdealR s_ideal_norm(const SIdeal& I);

// decomposition I = R alpha + a beta with pi_K(alpha ^ beta) = s_target;
// s_target must generate [S:I]_R (throws otherwise)
std::pair<LElem, LElem> decompose_r_a(const SIdeal& I, const KElem& s_target);

// det of the change of basis (1, xi) -> (alpha, beta); requires that
// R alpha + a beta equals I exactly
KElem based_ideal_norm(const SIdeal& I, const LElem& alpha, const LElem& beta);

KElem wedge(const LElem& a, const LElem& b);  // pi_K(a ^ b) = a.x b.y - a.y b.x

struct BalancedQuadruple {
    QuadAlgebra S;
    SIdeal I;
    LElem alpha, beta;  // I = R alpha + a beta, pi_K(alpha ^ beta) = s
    LElem delta;
    KElem s;
};

struct BalanceReport {
    bool cube_contained = false;     // I^3 subset delta*S
    bool norm_matches = false;       // [S:I]_R = sR
    bool s_cubed_matches = false;    // s^3 = N(delta)
    bool decomposition_ok = false;   // stored alpha, beta decompose I with wedge s
    bool ok() const { return cube_contained && norm_matches && s_cubed_matches && decomposition_ok; }
};

BalanceReport verify_balanced(const BalancedQuadruple& q);

BalancedQuadruple twist_quadruple(const BalancedQuadruple& q, const LElem& kappa);

// signs of Delta at the real places of K
struct Specification {
    std::vector<int> sigma;
    int s1 = 0;  // +1 entries (split real places)
    int s2 = 0;  // -1 entries (ramified real places)
};
Specification specification(const BaseField& F, const KElem& Delta);

struct UnitCubeProfile {
    bool domain = true;  // false when disc(S) is a square in K
    Specification spec;
    int epsilon = 0;  // 1 iff S has cube roots of unity and R does not
    long norm_one_units_mod_cubes = 1;   // |S^x_{N=1} / cubes|
    long units_mod_cubes = 1;            // |S^x / S^x3|
};
UnitCubeProfile unit_cube_profile(const BaseField& F, const QuadAlgebra& S);

// cube roots of unity: nontrivial solutions of z^2 + z + 1 = 0 inside S
bool has_cube_roots_of_unity(const BaseField& F, const QuadAlgebra& S);

// all square / cube roots of e in L, exact
std::vector<LElem> l_sqrt(const QuadAlgebra& S, const LElem& e);
std::vector<LElem> l_cbrt(const QuadAlgebra& S, const LElem& e);

// generator gamma with I = gamma*S, when it exists (base field Q only)
std::optional<LElem> s_is_principal(const SIdeal& I);

// explicit equivalence witness between quadruples: a ring automorphism
// xi -> lambda*xi + shift composed with scaling by kappa
struct QuadrupleWitness {
    KElem lambda, shift;
    LElem kappa;
};
std::optional<QuadrupleWitness> quadruples_equivalent(const BalancedQuadruple& q1,
                                                      const BalancedQuadruple& q2,
                                                      bool allow_reorientation);

}  // namespace trisym
