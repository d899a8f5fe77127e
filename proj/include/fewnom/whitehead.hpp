#pragma once

#include <array>
#include <string>

#include "fewnom/arith.hpp"
#include "fewnom/intpoly.hpp"

namespace fewnom {

/// The two-term sparse family F_{m,n}(x) = (x(x+1))^m * x^(4n) - (x-1)^m,
/// expanded exactly.  Degree 2m+4n, constant term -(-1)^m; m = n = 0 gives
/// the zero polynomial.
IntPoly build_fw(unsigned m, unsigned n);

/// Exact evaluation of p at x = i, computed as the remainder of p modulo
/// x^2 + 1 read off as a + b*i.
GaussInt eval_at_i(const IntPoly& p);

/// Certificate that x^2 + 1 divides F_{m,n} with multiplicity exactly one.
struct X2p1Structure {
    IntPoly quotient;            ///< F_{m,n} / (x^2 + 1), exact
    GaussInt derivative_witness; ///< F'(i) / (i-1)^(m-1); non-zero rules out multiplicity 2
};

/// Divides F_{m,n} by x^2 + 1 and certifies the multiplicity via the scaled
/// derivative value at i, which equals (k+m)i + (k-m) with k = 4n + m.
/// Requires m odd and gcd(m, n) = 1 (PreconditionViolation otherwise);
/// throws StructureViolation if the division is inexact, a second division
/// succeeds, or the witness vanishes.
X2p1Structure x2p1_structure(unsigned m, unsigned n);

/// Report on the sparse-binomial irreducibility conditions for the family
/// f(x) * x^k + g(x): the exponent threshold, the invariant
/// N = 2*|f|^2 + 2*|g|^2 + 2*r1 + 2*r2 - 7, and the two apparent-factorization
/// escape clauses.
struct SchinzelReport {
    Rat n_threshold;       ///< max{2*5^(2N-1), 2*max(deg f, deg g)*(5^(N-1) + 1/4)}
    Int big_n;             ///< N as above
    bool condition_i = false;   ///< -f*g is a p-th power for some prime p | k
    bool condition_ii = false;  ///< 4 | k and {ef, eg} = {4th power, 4*(4th power)} for e = +-1
    bool threshold_met = false; ///< k >= n_threshold
    Int exponent;          ///< the k the conditions were evaluated at
    Int r1;                ///< number of non-zero terms of f
    Int r2;                ///< number of non-zero terms of g
    Int norm_f_sq;         ///< squared l2 norm of f
    Int norm_g_sq;         ///< squared l2 norm of g
};

/// Evaluates the exponent threshold and escape conditions for f(x)*x^k + g(x).
/// Requires f(0) != 0, g(0) != 0, gcd_z(f, g) constant, k >= 1
/// (PreconditionViolation otherwise, also when the threshold exponent would be
/// too large to materialize).
SchinzelReport schinzel_conditions(const IntPoly& f, const IntPoly& g, const Int& k);

/// The filling-parameter threshold N(m) = 5^(8*C(2m,m) + 8m - 7)/2 - m/4 as an
/// exact rational; beyond it the cofactor irreducibility is unconditional.
/// Requires m >= 1 odd; refuses m large enough that the power cannot be
/// materialized (PreconditionViolation).
Rat n_threshold_whitehead(unsigned m);

/// Evaluation order for the doubly recursive trace polynomials: both fill the
/// same table from the four corner values T_{0,0} = 0, T_{1,0} = 1,
/// T_{0,1} = z, T_{1,1} = z^2 + z + 1 and must agree everywhere.
enum class TraceDirection {
    m_last, ///< n-recursion builds columns m = 0, 1; m-recursion finishes
    n_last, ///< m-recursion builds rows n = 0, 1; n-recursion finishes
};

/// Trace polynomial T_{m,n}(z), satisfying
///   T_{m,n} = (z+2)   * T_{m-1,n} - z * T_{m-2,n}   (m-recursion)
///   T_{m,n} = (z^2+2) * T_{m,n-1} -     T_{m,n-2}   (n-recursion).
/// Degree 2n + m - 1 for m + n >= 1; T_{0,0} = 0.
IntPoly trace_poly(unsigned m, unsigned n);
IntPoly trace_poly(unsigned m, unsigned n, TraceDirection dir);

/// Checks the connecting identity
///   (x^2+1) * x^(2n+m-1) * T_{m,n}(x - 1/x) = F_{m,n}(x)
/// exactly, with denominators cleared symbolically.
bool verify_trace_identity(unsigned m, unsigned n);
bool verify_trace_identity(unsigned m, unsigned n, TraceDirection dir);

/// Degree of the field generated by a root of the trace polynomial:
/// 2n + m - 1, consistency-checked against deg(trace_poly(m, n)).
/// Requires m odd and gcd(m, n) = 1.
unsigned trace_field_degree(unsigned m, unsigned n);

/// The parametrized shape-parameter tuple (x, -1/x, x, -1/x); at x = i all
/// four entries are i.  Throws ZeroInput when x = 0.
std::array<GaussRat, 4> parametrized_solution(const GaussRat& x);

/// Symbolic echo of the same tuple for a variable name.
std::array<std::string, 4> parametrized_solution(const std::string& symbol);

} // namespace fewnom
