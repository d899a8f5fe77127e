#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fewnom/bivar.hpp"
#include "fewnom/intpoly.hpp"

namespace fewnom {

/// The five-term specialization family
///   G_{a,b}(x) = (x^(a+2b) + x^a - x^(2a+b) - x^b - x^(a+b)) / x^min(a,b).
/// Exactly five terms with constant term +-1 whenever a != b; a = b collapses
/// to -x^a.  Requires a, b >= 1.
IntPoly build_gt(unsigned long a, unsigned long b);

/// The five-term bivariate source P(x,y) = y + 1/y - (x + 1/x + 1), cleared
/// of Laurent denominators by xy: x*y^2 + x - x^2*y - y - x*y.
/// build_gt is specialize(xy_p(), a, b).
BivarPoly xy_p();

/// One predicted cyclotomic divisor of G_{a,b}: scanning divisor d of
/// gcd(a, b), residue case 1/2/3 with base modulus 6/10/12, and the emitted
/// index = base * d.
struct CtClassHit {
    int case_id;        ///< 1, 2, or 3
    unsigned long base; ///< 6, 10, or 12
    unsigned long d;    ///< the common-divisor scale
    unsigned long index; ///< base * d
};

/// Residue-class prediction of the cyclotomic indices dividing G_{a,b}:
/// for each divisor d | gcd(a,b), (a/d, b/d) is tested against the residue
/// pairs (1,0),(3,+-2),(5,0) mod 6; (2,+-1),(4,+-3),(6,+-3),(8,+-1) mod 10;
/// (3,+-2),(4,+-3),(8,+-3),(9,+-2) mod 12, emitting 6d, 10d, 12d respectively.
std::vector<CtClassHit> ct_part_hits(unsigned long a, unsigned long b);

/// Sorted, deduplicated indices from ct_part_hits.
std::vector<unsigned long> ct_part(unsigned long a, unsigned long b);

/// Product of the distinct predicted cyclotomic polynomials.
IntPoly ct_polynomial(unsigned long a, unsigned long b);

/// A triple (n0, a0, b0) whose index-n0 cyclotomic divides the five-term
/// numerator of build_gt(a0, b0).
struct ScriptTriple {
    unsigned long n0, a0, b0;
    friend bool operator==(const ScriptTriple&, const ScriptTriple&) = default;
};

/// Brute-force enumeration over 1 <= n0, a0, b0 <= 12.
std::vector<ScriptTriple> enumerate_script_t();

/// One mismatch between the residue-class prediction and the factually
/// computed cyclotomic part of build_gt(a, b).
struct CtDiscrepancy {
    unsigned long a, b;
    std::vector<unsigned long> predicted;
    std::vector<unsigned long> observed;
    std::string note;
};

/// Compares ct_part(a, b) with the exact cyclotomic factors of build_gt(a, b)
/// for all 1 <= a <= a_max, 1 <= b <= b_max, also requiring multiplicity 1.
/// Returns the (expected empty) discrepancy list.
std::vector<CtDiscrepancy> ct_consistency(unsigned long a_max, unsigned long b_max);

/// Remainder of U(x) = (a+2b)x^(a+2b) + a x^a - (2a+b)x^(2a+b) - b x^b
/// - (a+b)x^(a+b) modulo the index-n cyclotomic; a non-zero remainder
/// certifies that the cyclotomic divides G_{a,b} with multiplicity exactly 1.
/// Throws NotACyclotomicFactor when the cyclotomic does not divide G_{a,b}.
IntPoly multiplicity_witness(unsigned long a, unsigned long b, unsigned long n);

/// A closure element: the polynomial together with its tracked two-factor
/// decomposition (poly = f1 * f2 exactly, all shift-normalized).
struct SignedBivar {
    BivarPoly poly;
    BivarPoly f1;
    BivarPoly f2;
};

struct ClosureResult {
    std::vector<SignedBivar> members; ///< insertion order, deterministic
    unsigned rounds;                  ///< the stabilization index J
};

/// The built-in five-term seed x^5*y^2 - x^3*y^2 - x^3*y - x*y - 1 with its
/// tracked factor pair (x^3*y + x^2*y + 1, x^2*y - x*y - 1).
SignedBivar closure_seed();

/// Modification closure: starting from S_1 = {+-seed}, repeatedly adjoin
/// +-tilde(poly), +-(f1 * tilde(f2)), +-poly(-x, y), +-poly(x, -y) for every
/// member until stable; returns the closed set and the index J of the first
/// stable round.
/// Factor pairs propagate through every operation, so the two-factor product
/// identity holds for all members.  Throws PreconditionViolation if the
/// seed's pair does not multiply back to its polynomial,
/// ClosureBudgetExceeded past max_elements.
ClosureResult modification_closure(const SignedBivar& seed, std::size_t max_elements = 10000);

/// An integer solution of one exponent-matching system: g(x^t, x^u) has the
/// same positive/negative exponent sets as the five-term family member for
/// (a, b), Laurent-shifted by c.
struct ExponentSolution {
    Int a, b, c, t, u;
};

/// For a five-term g with exactly 2 positive and 3 negative coefficients,
/// builds the 2! * 3! = 12 set-matching linear systems in (a, b, c, t, u) and
/// returns one representative integer solution with a != 0 and b != 0 per
/// solvable system (expected empty for the closure's sign-pattern members).
/// Throws MalformedCandidate on a wrong sign pattern or repeated exponents.
std::vector<ExponentSolution> exponent_system_match(const BivarPoly& g);

} // namespace fewnom
