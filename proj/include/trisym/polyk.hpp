#pragma once

#include <vector>

#include "trisym/base_field.hpp"

namespace trisym {

// Dense polynomial over K, coefficient of z^i at index i.
using KPoly = std::vector<KElem>;

KElem kpoly_eval(const KPoly& p, const KElem& z);
int kpoly_degree(const KPoly& p);  // -1 for zero

// All roots of p in K, deg(p) <= 3, p != 0.  Exact.
std::vector<KElem> roots_in_K(long d, const KPoly& p);

// All rational roots of an integer polynomial (any degree), by the rational
// root theorem.
std::vector<QQ> rational_roots(const std::vector<ZZ>& coeffs);

// cube roots of c in K (0, 1 or 3 of them)
std::vector<KElem> k_cbrt(const KElem& c);

}  // namespace trisym
