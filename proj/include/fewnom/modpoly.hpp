#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fewnom/intpoly.hpp"

namespace fewnom {

/// Dense polynomial over F_p, ascending exponents, coefficients in [0, p),
/// no trailing zeros.  Primes are limited to < 2^30 so schoolbook products
/// can accumulate in unsigned __int128 without overflow.
using FpPoly = std::vector<std::uint64_t>;

namespace fp {

inline constexpr std::uint64_t kMaxPrime = 1ull << 30;

bool is_prime_u64(std::uint64_t n);

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// n mod p mapped into [0, p).
std::uint64_t reduce_int(const Int& n, std::uint64_t p);

FpPoly from_int_poly(const IntPoly& q, std::uint64_t p);
IntPoly to_int_poly(const FpPoly& a);

void trim(FpPoly& a);
int degree(const FpPoly& a);
bool is_zero(const FpPoly& a);
FpPoly make_monic(FpPoly a, std::uint64_t p);

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
/// In-place remainder of a by monic-or-invertible-lead b.
void rem_inplace(FpPoly& a, const FpPoly& b, std::uint64_t p);
std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly rem(FpPoly a, const FpPoly& b, std::uint64_t p);
/// Monic gcd.
FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p);
FpPoly derivative(const FpPoly& a, std::uint64_t p);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p);
/// base^e mod f, exponent an arbitrary-precision integer.
FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& f, std::uint64_t p);
/// Extended Euclid: g = gcd(a, b) monic with s*a + t*b = g.
FpPoly ext_gcd(const FpPoly& a, const FpPoly& b, std::uint64_t p, FpPoly& s, FpPoly& t);

/// Product over the distinct irreducible factors of degree d, for each d that
/// occurs (distinct-degree splitting of a monic squarefree input).
struct DistinctDegreeBlock {
    unsigned degree;
    FpPoly product;
};
std::vector<DistinctDegreeBlock> distinct_degree_split(FpPoly f, std::uint64_t p);

/// Split a distinct-degree block into its irreducible factors of degree d
/// (equal-degree splitting, randomized but deterministically seeded).
std::vector<FpPoly> equal_degree_split(const FpPoly& block, unsigned d, std::uint64_t p,
                                       std::mt19937_64& rng);

/// Complete monic factorization of f mod p, with multiplicities (handles
/// inseparable parts via p-th roots).  f non-zero mod p.
std::vector<std::pair<FpPoly, unsigned>> factor(FpPoly f, std::uint64_t p);

/// Degree multiset of the irreducible factors of the squarefree part
/// (cheap distinct-degree pass only; no equal-degree splitting).
std::vector<unsigned> irreducible_degree_pattern(FpPoly f, std::uint64_t p);

} // namespace fp
} // namespace fewnom
