#pragma once

#include <vector>

#include "trisym/zmatrix.hpp"

namespace trisym {

// Full-rank Z-lattice in Q^n, stored by a canonical basis: rows form a
// rational HNF (echelon, positive pivots on the diagonal, entries above a
// pivot reduced into [0, pivot)).  Canonicality makes equality a plain
// comparison of entries.
class QLattice {
  public:
    QLattice() = default;

    static QLattice from_generators(int dim, const std::vector<std::vector<QQ>>& gens);
    static QLattice standard(int dim);  // Z^n

    int dim() const { return dim_; }
    const QQ& at(int i, int j) const { return basis_.at(i, j); }
    std::vector<QQ> row(int i) const;

    bool contains(const std::vector<QQ>& v) const;
    bool contains(const QLattice& other) const;

    // rational coordinates of v in this basis (v need not be a lattice point)
    std::vector<QQ> coords(const std::vector<QQ>& v) const;

    // canonical representative of v modulo the lattice (coords in [0,1))
    std::vector<QQ> reduce_mod(const std::vector<QQ>& v) const;

    QQ det_abs() const;  // product of pivots, > 0

    QLattice sum(const QLattice& other) const;
    QLattice intersect(const QLattice& other) const;
    QLattice scaled(const QQ& c) const;  // c != 0

    // image lattice under an invertible linear map: rows v -> v*T
    QLattice apply(const QMat& T) const;

    // { x in X : x*T in target }, T arbitrary (possibly singular)
    static QLattice constrained(const QLattice& X, const QMat& T, const QLattice& target);

    // dual lattice { y : y . x in Z for all x }
    QLattice dual() const;

    bool operator==(const QLattice& o) const { return dim_ == o.dim_ && basis_.a == o.basis_.a; }
    bool operator!=(const QLattice& o) const { return !(*this == o); }

    // deterministic tie-break ordering (lexicographic on entries)
    bool lex_less(const QLattice& o) const;

  private:
    int dim_ = 0;
    QMat basis_;  // dim x dim, canonical

    void canonicalize_from(const std::vector<std::vector<QQ>>& gens);
};

}  // namespace trisym
