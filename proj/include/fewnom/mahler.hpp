#pragma once

#include <utility>
#include <vector>

#include "fewnom/bivar.hpp"
#include "fewnom/cyclotomic.hpp"
#include "fewnom/intpoly.hpp"

namespace fewnom {

/// How a Mahler-measure estimate was produced.
enum class MahlerMethod {
    roots,             ///< product over numerically located roots
    torus_quadrature,  ///< midpoint rule for the log-integral over the torus
};

/// Numerical estimate with a covering error bound: the reported interval is
/// [value - error_bound, value + error_bound].
struct MahlerEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    MahlerMethod method = MahlerMethod::roots;
};

/// Mahler measure of a non-zero integer polynomial:
/// |lc(p)| * prod over complex roots of max(1, |root|).
///
/// Exact unit-modulus contributions are split off symbolically before any
/// floating point is touched: the integer content, powers of x, and every
/// cyclotomic factor (each contributes a known exact amount).  Only the
/// genuinely non-cyclotomic squarefree parts go through the root finder, and
/// repeated factors enter the product once per multiplicity, so boundary
/// cases such as the square of a small-measure polynomial stay sharp.
///
/// The error bound comes from per-root inclusion radii
/// deg * |p(z)| / |p'(z)| (inflated by the floating-point evaluation error),
/// multiplied into upper/lower products.  Root finding runs in double and
/// escalates to long double if it stalls; if both fail it throws
/// ConvergenceFailure.  Throws ZeroPolynomial on zero input.
MahlerEstimate mahler_univariate(const IntPoly& p, double tol = 1e-13);

/// Two-variable Mahler measure by midpoint quadrature of log|p| over the
/// unit torus on a grid x grid lattice of points ((j+c)/G, (k+c)/G).
/// Deterministic: fixed evaluation order and compensated summation, no
/// randomness.  The error bound compares the full grid against the
/// half-resolution grid at the same offset.  If the integrand vanishes
/// numerically at a node the quadrature retries at fixed alternative offsets
/// and throws SingularGrid only when all of them fail.  Throws ZeroPolynomial
/// on zero input and PreconditionViolation when grid < 8.
MahlerEstimate mahler_bivariate(const BivarPoly& p, unsigned grid = 512);

/// q(a_1, ..., a_r): the smallest max-norm of a non-zero integer vector s
/// with  sum s_i * a_i = 0.  This is the quantity that controls how well the
/// one-variable specialization along exponents (a_1, ..., a_r) approximates
/// the multivariate measure: the approximation improves as q grows.  For two
/// exponents this is exactly max(a, b) / gcd(a, b); for more it is found by
/// bounded search.  All entries must be positive; needs at least two.
unsigned long lawton_q(const std::vector<unsigned long>& a);

/// Univariate measures of p(x^a, x^b) for each (a, b) in `pairs` (each
/// specialization divided by its trailing power of x, which the measure
/// ignores anyway).  As lawton_q({a, b}) grows these converge to
/// mahler_bivariate(p).
std::vector<MahlerEstimate> lawton_sequence(
    const BivarPoly& p, const std::vector<std::pair<long, long>>& pairs);

/// Smallest known Mahler measure exceeding 1 (conjecturally the smallest
/// possible), truncated to the digits used by the certification threshold.
inline constexpr double kLehmerConstant = 1.176280818;

/// Outcome of the small-measure irreducibility certificate.  If the
/// conjecture that kLehmerConstant is a true lower bound holds, a cofactor
/// with no cyclotomic factor and measure below kLehmerConstant^2 cannot split
/// into two non-trivial factors, so it is irreducible.
struct LehmerGateResult {
    MahlerEstimate measure;  ///< measure of the non-cyclotomic cofactor
    double threshold = 0.0;  ///< kLehmerConstant squared
    bool conditionally_irreducible = false;
    IntPoly cofactor;        ///< the polynomial that was measured
};

/// Gate on a cyclotomic split computed elsewhere: measures split.cofactor,
/// which by construction carries no cyclotomic factor.  The verdict is
/// conditional on the measure conjecture and requires a non-constant
/// cofactor with non-zero constant term (a power of x is the one remaining
/// unit-measure factor the split does not exclude) and a measure interval
/// strictly below the threshold.
LehmerGateResult lehmer_gate(const CyclotomicPart& split, double tol = 1e-13);

/// Gate on a full factor split.  Deliberately consumes only the `cyclotomic`
/// entries of `parts`: the certificate must stand on the cyclotomic data
/// alone, so the remaining fields are ignored and the cofactor is recomputed
/// by exact division of p by the listed cyclotomic factors.
LehmerGateResult lehmer_gate(const IntPoly& p, const FactorParts& parts,
                             double tol = 1e-13);

/// Convenience: compute the cyclotomic part of p, then gate on it.
LehmerGateResult lehmer_gate(const IntPoly& p, double tol = 1e-13);

} // namespace fewnom
