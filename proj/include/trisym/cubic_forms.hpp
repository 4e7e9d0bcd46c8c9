#pragma once

#include <optional>
#include <string>

#include "trisym/gauss_composition.hpp"

namespace trisym {

// a x^3 + 3b x^2 y + 3c x y^2 + d y^3 with a in A, b in R, c in A^-1,
// d in A^-2 for the type ideal A
struct CubicForm {
    FracIdealR type_ideal;
    KElem a, b, c, d;

    bool operator==(const CubicForm& o) const {
        return type_ideal == o.type_ideal && a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const CubicForm& o) const { return !(*this == o); }
};

// throws std::invalid_argument on slot membership violations
CubicForm make_cubic_form(const BaseField& F, const FracIdealR& type_ideal, const KElem& a,
                          const KElem& b, const KElem& c, const KElem& d);

// quadratic covariant (b^2-ac, ad-bc, c^2-bd); shares the cubic's discriminant.
// Note the sign of the middle slot: the equivariant covariant (the one with
// H(g.f) = H(f)((x,y)g)) carries bc-ad there; callers that track the group
// action use hessian_cov below.
struct HessianForm {
    FracIdealR type_ideal;
    KElem p, q, r;

    KElem disc() const { return q * q - QQ(4) * p * r; }
};

HessianForm hessian(const CubicForm& f);
LinearBQF hessian_as_bqf(const BaseField& F, const CubicForm& f);  // slots (R, A)
KElem disc(const CubicForm& f);
bool is_projective(const BaseField& F, const CubicForm& f);

enum class Group { SL, GL };

struct GroupElem {
    long d = 0;
    KElem m00, m01, m10, m11;

    KElem det() const { return m00 * m11 - m01 * m10; }
};

GroupElem identity_elem(const BaseField& F);
bool in_gl(const BaseField& F, const FracIdealR& type_ideal, const GroupElem& g);
bool in_sl(const BaseField& F, const FracIdealR& type_ideal, const GroupElem& g);
bool in_parabolic(const GroupElem& g);  // lower triangular, det 1
GroupElem group_mul(const GroupElem& g, const GroupElem& h);
GroupElem group_inverse(const GroupElem& g);

// g.f = det(g)^-1 f((x,y) g); throws if g is not in GL(R + A)
CubicForm act(const BaseField& F, const GroupElem& g, const CubicForm& f);
// same action without the membership gate (used over completions of K)
CubicForm act_unchecked(const GroupElem& g, const CubicForm& f);

CubicForm phi_forward(const BaseField& F, const BalancedQuadruple& q);
BalancedQuadruple phi_inverse(const BaseField& F, const CubicForm& f);

bool is_reducible(const BaseField& F, const CubicForm& f);  // K-rational zero?
bool delta_is_cube(const BalancedQuadruple& q);

// (S, I, 1, 1) for relative 3-torsion ideals of the ideal group
BalancedQuadruple reducible_ideal_map(const BaseField& F, const QuadAlgebra& S, const SIdeal& I);

struct EquivResult {
    enum class Kind { Witness, Distinct, Inconclusive } kind = Kind::Inconclusive;
    std::optional<GroupElem> witness;
    std::string reason;
};

EquivResult equivalent(const BaseField& F, const CubicForm& f, const CubicForm& g, Group grp,
                       int height_bound);

// canonical text encoding "a,b,c,d@<ideal>"; exact round-trip
std::string encode(const CubicForm& f);
CubicForm decode(const BaseField& F, const std::string& text);
std::string encode_ideal(const FracIdealR& a);

}  // namespace trisym
