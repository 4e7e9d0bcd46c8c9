#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trisym {

using ZZ = mpz_class;
using QQ = mpq_class;

inline ZZ zz_gcd(const ZZ& a, const ZZ& b) {
    ZZ g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline ZZ zz_lcm(const ZZ& a, const ZZ& b) {
    ZZ l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = u*a + v*b
inline ZZ zz_gcdext(const ZZ& a, const ZZ& b, ZZ& u, ZZ& v) {
    ZZ g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// floor(num/den) as an integer, den != 0
inline ZZ qq_floor(const QQ& q) {
    ZZ r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline ZZ isqrt_floor(const ZZ& n) {
    ZZ r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const ZZ& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// exact integer cube root if n is a perfect cube (works for negative n)
inline std::optional<ZZ> exact_cbrt(const ZZ& n) {
    ZZ r;
    int exactp = mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
    if (exactp) return r;
    return std::nullopt;
}

inline std::optional<QQ> exact_sqrt(const QQ& q) {
    if (q < 0) return std::nullopt;
    ZZ num = q.get_num(), den = q.get_den();
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    QQ r(isqrt_floor(num), isqrt_floor(den));
    r.canonicalize();
    return r;
}

inline std::optional<QQ> exact_cbrt(const QQ& q) {
    auto n = exact_cbrt(ZZ(q.get_num()));
    auto d = exact_cbrt(ZZ(q.get_den()));
    if (!n || !d) return std::nullopt;
    QQ r(*n, *d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const QQ& q) { return q.get_str(); }

// divisors of |n| in increasing order; n != 0 (trial division, desk scale)
std::vector<ZZ> positive_divisors(const ZZ& n);

// rational prime factorization of |n|, n != 0
std::vector<std::pair<ZZ, int>> factor_integer(const ZZ& n);

}  // namespace trisym
