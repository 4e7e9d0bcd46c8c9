#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisym/qlattice.hpp"

namespace trisym {

// Elements of K = Q (d == 0) or Q(sqrt(d)), written x + y*w where w is the
// canonical integral generator: w = sqrt(d) for d != 1 (mod 4) and
// w = (1+sqrt(d))/2 for d == 1 (mod 4).  The selector d rides along so that
// free-standing operators work; mixing fields is a logic error.
struct KElem {
    long d = 0;
    QQ x, y;

    KElem() = default;
    KElem(long d_, QQ x_, QQ y_) : d(d_), x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }
    bool operator==(const KElem& o) const { return d == o.d && x == o.x && y == o.y; }
    bool operator!=(const KElem& o) const { return !(*this == o); }
};

// w^2 = omega_c0(d) + omega_c1(d) * w
QQ omega_c0(long d);
QQ omega_c1(long d);
int field_degree(long d);

KElem operator+(const KElem& a, const KElem& b);
KElem operator-(const KElem& a, const KElem& b);
KElem operator-(const KElem& a);
KElem operator*(const KElem& a, const KElem& b);
KElem operator*(const QQ& c, const KElem& a);
KElem k_conj(const KElem& a);
KElem k_inv(const KElem& a);  // throws on zero
KElem operator/(const KElem& a, const KElem& b);

QQ elem_norm(const KElem& a);
QQ elem_trace(const KElem& a);

// exact sign of a at the real embedding sending w to the larger root
// (emb = 0) or the smaller one (emb = 1); requires d >= 0
int real_sign(const KElem& a, int emb);

// square roots of a in K, exact; empty if none
std::vector<KElem> k_sqrt(const KElem& a);

std::string k_to_string(const KElem& a);
KElem k_parse(long d, const std::string& s);  // throws std::invalid_argument

struct BaseField {
    long d = 0;        // squarefree selector, 0 for Q
    long disc_K = 1;   // d or 4d for quadratic fields, 1 for Q
    int r1 = 1, r2 = 0;

    int degree() const { return field_degree(d); }
    KElem elem(QQ x, QQ y = 0) const { return KElem(d, std::move(x), std::move(y)); }
    KElem omega() const { return KElem(d, 0, 1); }
};

// throws std::invalid_argument on non-squarefree or d == 1
BaseField make_base_field(long d);

// Fractional ideal of the maximal order R of K, as a canonical HNF lattice
// in the coordinates (1, w).
struct FracIdealR {
    long d = 0;
    QLattice lat;

    bool operator==(const FracIdealR& o) const { return d == o.d && lat == o.lat; }
    bool operator!=(const FracIdealR& o) const { return !(*this == o); }

    bool contains(const KElem& a) const;
    bool is_integral() const;
    KElem basis_elem(int i) const;

    // elements c0*b0 + c1*b1 with max |ci| == radius, deterministic order
    std::vector<KElem> shell(int radius) const;
};

FracIdealR ring_of_integers(const BaseField& F);
FracIdealR ideal_from_generators(const BaseField& F, const std::vector<KElem>& gens);
FracIdealR principal_ideal(const BaseField& F, const KElem& g);

FracIdealR ideal_mul(const FracIdealR& a, const FracIdealR& b);
FracIdealR ideal_mul(const KElem& c, const FracIdealR& a);
FracIdealR ideal_inverse(const FracIdealR& a);
FracIdealR ideal_pow(const FracIdealR& a, int e);
FracIdealR ideal_sum(const FracIdealR& a, const FracIdealR& b);
QQ ideal_norm(const FracIdealR& a);

struct PrimeIdealR {
    FracIdealR ideal;
    ZZ p;       // residue characteristic
    int f = 1;  // residue degree
    int e = 1;  // ramification index
};

// primes of R above the rational prime p (Kummer-Dedekind on the minimal
// polynomial of w)
std::vector<PrimeIdealR> primes_above(const BaseField& F, const ZZ& p);
std::vector<std::pair<PrimeIdealR, int>> factor_ideal(const BaseField& F, const FracIdealR& a);
int valuation(const FracIdealR& a, const PrimeIdealR& p);

std::optional<KElem> is_principal(const BaseField& F, const FracIdealR& a);

struct UnitGroup {
    int torsion_order = 2;
    std::optional<KElem> fundamental;  // present for real quadratic fields
};
UnitGroup unit_group(const BaseField& F);

bool is_unit_in_R(const BaseField& F, const KElem& u);
// torsion units, and +-1, +-eps, +-eps^-1, ... up to the given power bound
std::vector<KElem> unit_candidates(const BaseField& F, int power_bound);

struct IdealClassGroupR {
    std::vector<FracIdealR> representatives;  // representatives[0] is R
    std::vector<std::vector<int>> table;      // composition on indices
    int h = 1;
};
IdealClassGroupR class_group(const BaseField& F);

// index of [a] in G.representatives (ideals a, b equivalent iff a*b^-1 principal)
int class_index(const BaseField& F, const IdealClassGroupR& G, const FracIdealR& a);

}  // namespace trisym
