#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fewnom/intpoly.hpp"

namespace fewnom {

/// n-th cyclotomic polynomial (memoized; safe for concurrent callers).
IntPoly cyclotomic_poly(unsigned long n);

/// All (n, phi(n)) with phi(n) <= max_phi, ascending in n.  These are the only
/// indices whose cyclotomic polynomial can divide a polynomial of degree
/// max_phi.
std::vector<std::pair<unsigned long, unsigned long>> totient_bounded(
    unsigned long max_phi);

/// One cyclotomic divisor of a polynomial, with its exact multiplicity.
struct CyclotomicHit {
    unsigned long index;
    unsigned multiplicity;
    friend bool operator==(const CyclotomicHit&, const CyclotomicHit&) = default;
};

/// Cyclotomic part of p: every n with Phi_n | p together with the exact
/// multiplicity (by repeated exact division), plus the cofactor, so that
/// p = prod Phi_n^mult * cofactor.  The cofactor has no cyclotomic factor.
struct CyclotomicPart {
    std::vector<CyclotomicHit> factors;  // ascending index
    IntPoly cofactor;
};
CyclotomicPart cyclotomic_part(const IntPoly& p);

/// If p equals Phi_n for some n, that n.
std::optional<unsigned long> cyclotomic_index(const IntPoly& p);

/// Decomposition of p into unit * content * cyclotomic * reciprocal
/// non-cyclotomic * non-reciprocal factors.  Sign convention: when the
/// non-reciprocal part is non-trivial it absorbs the unit sign (so `unit`
/// is +1); a sign left over on an otherwise trivial non-reciprocal part
/// stays in `unit`.
struct FactorParts {
    int unit = 1;                                      // +-1
    Int content = 1;                                   // positive integer
    std::vector<std::pair<Int, unsigned>> content_primes;
    std::vector<CyclotomicHit> cyclotomic;             // ascending index
    std::vector<std::pair<IntPoly, unsigned>> reciprocal;  // irreducible, canonical order
    IntPoly nonreciprocal_part = IntPoly::constant(1);
};

/// Complete split of a non-zero polynomial (uses full factorization; may
/// throw RecombinationOverflow on adversarial inputs).
FactorParts three_part_split(const IntPoly& p);

/// unit * content * prod Phi^m * prod reciprocal^m * nonreciprocal_part.
IntPoly reconstruct(const FactorParts& parts);

} // namespace fewnom
