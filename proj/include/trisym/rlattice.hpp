#pragma once

#include <vector>

#include "trisym/base_field.hpp"

namespace trisym {

// R-lattice presented as a_1 v_1 + ... + a_n v_n with fractional ideals a_i
// and K-linearly independent vectors v_i in K^dim.
struct PseudoBasis {
    long d = 0;
    int dim = 0;
    struct Item {
        FracIdealR coeff;
        std::vector<KElem> v;
    };
    std::vector<Item> items;
};

PseudoBasis make_pseudo(const BaseField& F, int dim,
                        const std::vector<std::pair<FracIdealR, std::vector<KElem>>>& gens);

// x in a, y in b with x a^-1 + y b^-1 = R
std::pair<KElem, KElem> coprime_pair(const BaseField& F, const FracIdealR& a, const FracIdealR& b);

// integral ideals E_i with sum R: elements e_i in E_i with sum(e_i) = 1
std::vector<KElem> express_one(const BaseField& F, const std::vector<FracIdealR>& ideals);

// Reduce a pseudo-generating set of a full-rank module to an upper-triangular
// pseudo-basis with unit pivots (v_j[j] = 1, v_j[i] = 0 for i < j) and
// canonically reduced off-diagonal entries.
PseudoBasis pseudo_hnf(const PseudoBasis& gens);

// Rewrite a pseudo-basis in the shape (R, ..., R, prod of coefficient
// ideals); `transform` carries new vectors as K-combinations of the old ones
// (rows: new = transform * old).
struct SteinitzResult {
    PseudoBasis basis;
    std::vector<std::vector<KElem>> transform;
};
SteinitzResult steinitz_normalize(const PseudoBasis& B);

// [M:N]_R via the global determinant formula
FracIdealR module_index(const PseudoBasis& M, const PseudoBasis& N);

// The module spanned by a pseudo-basis, as a Z-lattice in Q^(dim*deg)
QLattice pseudo_to_zlattice(const PseudoBasis& B);

struct Orientation {
    FracIdealR target;           // the ideal a with pi: wedge^2(M) ~ a
    std::vector<KElem> v1, v2;   // reference pair
    KElem declared;              // pi_K(v1 ^ v2)
};

KElem orient_eval(const Orientation& o, const std::vector<KElem>& w1,
                  const std::vector<KElem>& w2);

// coefficients of w in the K-basis given by the rows of `basis`
std::vector<KElem> k_solve(long d, const std::vector<std::vector<KElem>>& basis,
                           const std::vector<KElem>& w);

}  // namespace trisym
