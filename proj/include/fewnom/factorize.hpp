#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fewnom/intpoly.hpp"

namespace fewnom {

/// Complete factorization over Z: p = unit * content * prod factors[i]^mult.
/// Factors are irreducible, primitive, positive leading coefficient, sorted
/// canonically (degree, then coefficients); content is positive and also
/// given as a prime factorization.
struct Factorization {
    int unit = 1;  // +-1
    Int content = 1;
    std::vector<std::pair<Int, unsigned>> content_primes;
    std::vector<std::pair<IntPoly, unsigned>> factors;
};

/// Squarefree decomposition (Yun): p = prod parts[i].first^(parts[i].second)
/// with the parts squarefree and pairwise coprime.  p must be non-zero and
/// primitive; a negative leading sign rides on one odd-multiplicity part.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decompose(const IntPoly& p);

/// Monic factorization of p mod q with multiplicities (distinct-degree plus
/// equal-degree splitting; deterministic for a fixed input).  q must be a
/// prime < 2^30 not dividing the leading coefficient.
std::vector<std::pair<IntPoly, unsigned>> factor_mod_p(const IntPoly& p, std::uint64_t q);

/// Tuning knobs for the Zassenhaus stage.  max_subset_size is the largest
/// modular-factor subset tried during recombination before the search is
/// declared out of budget (RecombinationOverflow); prime_count is how many
/// good primes supply degree patterns.
struct FactorOptions {
    unsigned max_subset_size = 6;
    unsigned prime_count = 5;
};
/// Defaults, with max_subset_size overridable via FEWNOM_RECOMB_MAX.
FactorOptions default_factor_options();

/// Complete factorization over Z (squarefree decomposition, mod-q splitting
/// at the best of the smallest good primes, Hensel lifting to the coefficient
/// bound, subset recombination).  Throws RecombinationOverflow if the subset
/// search exceeds its budget -- an honest "incomplete", never a wrong answer.
Factorization factor_z(const IntPoly& p);
Factorization factor_z(const IntPoly& p, const FactorOptions& opts);

/// How an irreducibility verdict was certified.
enum class IrreducibilityCertificate {
    linear,                // degree 1
    irreducible_mod_p,     // irreducible modulo a good prime
    degree_pattern,        // cross-prime factor-degree patterns exclude proper factors
    factorization,         // full factorization returned a single factor
    squarefree_defect,     // repeated factor found (reducible)
    factor_found,          // full factorization split it (reducible)
    none,                  // fast paths exhausted without a verdict
};

enum class IrreducibilityStatus { irreducible, reducible, unknown };

struct IrreducibilityResult {
    IrreducibilityStatus status;
    IrreducibilityCertificate certificate;
    std::uint64_t prime = 0;  // the certifying prime, when applicable
    explicit operator bool() const { return status == IrreducibilityStatus::irreducible; }
};

struct IrreducibleOptions {
    bool fast_only = false;  // never run the lifting/recombination stage
    unsigned prime_count = 5;
};

/// Irreducibility over Z for primitive p of degree >= 1.  Fast paths first
/// (irreducible mod a good prime; cross-prime degree patterns); the full
/// factorization fallback is skipped when fast_only is set, in which case the
/// status may be `unknown`.
IrreducibilityResult is_irreducible_z(const IntPoly& p);
IrreducibilityResult is_irreducible_z(const IntPoly& p, const IrreducibleOptions& opts);

/// gcd in Z[x] as the product of shared irreducible factors (constants
/// included) to minimum multiplicity, built from full factorizations of both
/// arguments; positive leading coefficient and positive content.
IntPoly gcd_z(const IntPoly& u, const IntPoly& v);

} // namespace fewnom
