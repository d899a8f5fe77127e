#include "fewnom/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <limits>
#include <numeric>
#include <vector>

#include "fewnom/errors.hpp"
#include "fewnom/factorize.hpp"

namespace fewnom {

namespace {

// log|n| computed without overflowing double (n != 0).
long double log_abs(const Int& n) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs((long double)mant)) +
           (long double)exp2 * 0.6931471805599453094L;
}

template <typename T>
T to_real(const Int& n);

template <>
double to_real<double>(const Int& n) {
    return mpz_get_d(n.get_mpz_t());
}

template <>
long double to_real<long double>(const Int& n) {
    // mpz_get_d truncates to 53 bits; go through the decimal string when the
    // value does not fit so long double keeps its full 64-bit significand.
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 53) return mpz_get_d(n.get_mpz_t());
    return std::strtold(n.get_str().c_str(), nullptr);
}

// p(z) and p'(z) by one fused Horner pass.
template <typename T>
std::pair<std::complex<T>, std::complex<T>> eval_with_derivative(
    const std::vector<T>& c, std::complex<T> z) {
    std::complex<T> v(c.back());
    std::complex<T> d(T(0));
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        d = d * z + v;
        v = v * z + c[i];
    }
    return {v, d};
}

// Upper bound on the magnitude sum entering the Horner round-off estimate.
template <typename T>
T eval_magnitude(const std::vector<T>& c, T az) {
    T s = std::abs(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) s = s * az + std::abs(c[i]);
    return s;
}

template <typename T>
struct RootSet {
    std::vector<std::complex<T>> roots;
    bool converged = false;
};

// Aberth-Ehrlich simultaneous iteration.  Deterministic start: one circle at
// the geometric-mean radius with an angular offset and a small per-index
// radial stagger, so no two guesses coincide and none sits on a symmetry
// axis of a reciprocal root set.
template <typename T>
RootSet<T> find_roots(const std::vector<T>& c, T tol, int max_sweeps) {
    const std::size_t n = c.size() - 1;
    RootSet<T> out;
    out.roots.resize(n);

    T ratio = std::abs(c.front() / c.back());
    T radius = std::pow(ratio, T(1) / T(n));
    radius = std::min(std::max(radius, T(0.5)), T(2));
    const T two_pi = T(6.283185307179586476925286766559L);
    for (std::size_t k = 0; k < n; ++k) {
        T stagger = T(((k * 2654435761u) & 255u)) / T(256) - T(0.5);
        T r = radius * (T(1) + T(0.08) * stagger);
        T ang = two_pi * T(k) / T(n) + T(0.41);
        out.roots[k] = std::polar(r, ang);
    }

    const T floor_mag = std::numeric_limits<T>::min() * T(16);
    // Deterministic fallback start for a point that overflowed or went
    // non-finite: a fresh spot that depends on (k, sweep) so retries differ.
    auto restart = [&](std::size_t k, int sweep) {
        T r = radius * (T(1) + T(0.3) * T((k * 31u + (unsigned)sweep * 7u) % 17u) / T(17));
        T ang = two_pi * T((k * 13u + (unsigned)sweep * 5u) % n) / T(n) + T(0.77);
        return std::polar(r, ang);
    };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        T worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            auto [v, d] = eval_with_derivative(c, out.roots[k]);
            // Overflow / NaN anywhere means the point is lost, not converged;
            // give it a fresh deterministic start and keep sweeping.
            if (!std::isfinite((double)std::abs(v)) ||
                !std::isfinite((double)std::abs(d))) {
                out.roots[k] = restart(k, sweep);
                worst = T(1);
                continue;
            }
            if (std::abs(v) <= floor_mag) continue;  // sitting on a root
            if (std::abs(d) <= floor_mag) {
                // Stationary point: nudge off it and keep sweeping.
                out.roots[k] *= std::complex<T>(T(1), T(1e-3));
                worst = T(1);
                continue;
            }
            std::complex<T> newton = v / d;
            std::complex<T> repulsion(T(0));
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                std::complex<T> diff = out.roots[k] - out.roots[j];
                if (std::abs(diff) <= floor_mag)
                    diff = std::complex<T>(floor_mag, floor_mag);
                repulsion += std::complex<T>(T(1)) / diff;
            }
            std::complex<T> denom = std::complex<T>(T(1)) - newton * repulsion;
            std::complex<T> step =
                (std::abs(denom) <= floor_mag) ? newton : newton / denom;
            T step_mag = std::abs(step);
            if (!std::isfinite((double)step_mag)) {
                out.roots[k] = restart(k, sweep);
                worst = T(1);
                continue;
            }
            // Trust region: a huge early correction is what overflows the
            // next evaluation.  Cap it relative to the current position.
            T cap = T(0.5) * (T(1) + std::abs(out.roots[k]));
            if (step_mag > cap) step *= cap / step_mag;
            out.roots[k] -= step;
            T rel = std::abs(step) / std::max(T(1), std::abs(out.roots[k]));
            worst = std::max(worst, rel);
        }
        if (worst < tol) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

struct LogBounds {
    long double center = 0;  // log of |lc| * prod max(1, |z_k|)
    long double lo = 0;      // same with radii subtracted
    long double hi = 0;      // same with radii added
};

// Root-product log bounds for a squarefree polynomial with no cyclotomic
// factor, non-zero constant term, positive leading coefficient.
template <typename T>
LogBounds root_log_bounds(const IntPoly& f, T tol) {
    const std::size_t n = (std::size_t)f.degree();
    std::vector<T> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = to_real<T>(f.coeff(i));
    for (T x : c)
        if (!std::isfinite((double)x))
            throw ConvergenceFailure(
                "coefficient exceeds the floating-point range");

    RootSet<T> rs = find_roots(c, tol, 400);
    if (!rs.converged)
        throw ConvergenceFailure("root iteration stalled");

    LogBounds b;
    b.center = log_abs(f.leading());
    b.lo = b.center;
    b.hi = b.center;
    const T eval_eps =
        T(8) * T(n + 1) * std::numeric_limits<T>::epsilon();
    for (const std::complex<T>& z : rs.roots) {
        auto [v, d] = eval_with_derivative(c, z);
        T az = std::abs(z);
        if (!std::isfinite((double)az) || !std::isfinite((double)std::abs(v)))
            throw ConvergenceFailure("root iteration produced a non-finite root");
        T noise = eval_eps * eval_magnitude(c, az);
        T rad;
        if (std::abs(d) <= std::numeric_limits<T>::min() * T(16))
            rad = T(1);  // derivative vanished: give up tightness, stay valid
        else
            rad = T(n) * (std::abs(v) + noise) / std::abs(d);
        if (!std::isfinite((double)rad)) rad = T(1);
        long double azl = (long double)az;
        long double radl = (long double)rad;
        b.center += std::log(std::max((long double)1, azl));
        b.lo += std::log(std::max((long double)1, azl - radl));
        b.hi += std::log(std::max((long double)1, azl + radl));
    }
    return b;
}

LogBounds root_log_bounds_escalating(const IntPoly& f, double tol) {
    try {
        return root_log_bounds<double>(f, tol);
    } catch (const ConvergenceFailure&) {
        return root_log_bounds<long double>(f, (long double)tol);
    }
}

MahlerEstimate from_log_bounds(long double lo, long double hi,
                               long double center, MahlerMethod method) {
    double v_lo = (double)std::exp(lo);
    double v_hi = (double)std::exp(hi);
    double value = 0.5 * (v_lo + v_hi);
    // Keep the reported value inside the interval even when the midpoint and
    // the center disagree (they rarely do; the center is more accurate).
    double v_center = (double)std::exp(center);
    if (v_center >= v_lo && v_center <= v_hi) value = v_center;
    double err = 0.5 * (v_hi - v_lo) + 4e-15 * std::fabs(value);
    return MahlerEstimate{value, err, method};
}

} // namespace

MahlerEstimate mahler_univariate(const IntPoly& p, double tol) {
    if (p.is_zero())
        throw ZeroPolynomial("mahler measure of the zero polynomial");
    if (!(tol > 0))
        throw PreconditionViolation("tolerance must be positive");
    tol = std::max(tol, 1e-15);

    // Exact pieces first: powers of x are unit-measure, the content is a
    // plain multiplier, the sign does not matter.
    IntPoly q = shift_down(p, low_exponent(p));
    long double log_exact = log_abs(content(q));
    q = primitive_part(q);
    if (q.leading() < 0) q = -q;

    long double center = log_exact, lo = log_exact, hi = log_exact;
    if (q.degree() > 0) {
        for (const auto& [part, mult] : squarefree_decompose(q)) {
            if (part.degree() == 0) continue;
            // Cyclotomic factors contribute exactly 1; split them off so
            // they never touch floating point.
            IntPoly f = cyclotomic_part(part).cofactor;
            if (f.leading() < 0) f = -f;
            if (f.degree() == 0) continue;
            LogBounds b = root_log_bounds_escalating(f, tol);
            center += (long double)mult * b.center;
            lo += (long double)mult * b.lo;
            hi += (long double)mult * b.hi;
        }
    }
    return from_log_bounds(lo, hi, center, MahlerMethod::roots);
}

namespace {

// Mean of log|p| over the grid x grid midpoint lattice with per-axis
// offsets, or no value if the integrand vanishes numerically at some node.
std::optional<long double> torus_log_mean(
    const std::vector<BivarTerm>& terms, unsigned grid, double off_x,
    double off_y) {
    const double two_pi = 6.283185307179586476925286766559;
    const std::size_t t = terms.size();

    std::vector<double> coeff(t);
    for (std::size_t i = 0; i < t; ++i)
        coeff[i] = mpz_get_d(terms[i].c.get_mpz_t());

    // Per-term column phases exp(2 pi i ye (k+c)/G), computed once.
    std::vector<std::vector<std::complex<double>>> col(
        t, std::vector<std::complex<double>>(grid));
    for (std::size_t i = 0; i < t; ++i) {
        double f = two_pi * (double)terms[i].ye / (double)grid;
        for (unsigned k = 0; k < grid; ++k)
            col[i][k] = std::polar(1.0, f * ((double)k + off_y));
    }

    long double total = 0, comp = 0;  // Kahan over row sums
    std::vector<std::complex<double>> row(t);
    for (unsigned j = 0; j < grid; ++j) {
        for (std::size_t i = 0; i < t; ++i) {
            double f = two_pi * (double)terms[i].xe / (double)grid;
            row[i] = coeff[i] * std::polar(1.0, f * ((double)j + off_x));
        }
        long double row_sum = 0, row_comp = 0;
        for (unsigned k = 0; k < grid; ++k) {
            std::complex<double> v(0.0, 0.0);
            for (std::size_t i = 0; i < t; ++i) v += row[i] * col[i][k];
            double n2 = std::norm(v);
            if (!(n2 > 1e-280)) return std::nullopt;  // node hit the zero set
            long double term = 0.5L * std::log((long double)n2);
            long double y = term - row_comp;
            long double s = row_sum + y;
            row_comp = (s - row_sum) - y;
            row_sum = s;
        }
        long double y = row_sum - comp;
        long double s = total + y;
        comp = (s - total) - y;
        total = s;
    }
    return total / ((long double)grid * (long double)grid);
}

} // namespace

MahlerEstimate mahler_bivariate(const BivarPoly& p, unsigned grid) {
    if (p.is_zero())
        throw ZeroPolynomial("mahler measure of the zero polynomial");
    if (grid < 8)
        throw PreconditionViolation("quadrature grid must be at least 8");
    grid += grid % 2;  // the half grid must be integral

    // Fixed retry offset pairs; the asymmetric ones also step off diagonal
    // zero loci such as x = y that a shared offset would hit at every node.
    static const double kOffsets[][2] = {{0.5, 0.5},
                                         {0.31830988618367, 0.64209912937174},
                                         {0.70710678118655, 0.17320508075689}};
    for (const double* offset : kOffsets) {
        auto fine = torus_log_mean(p.terms(), grid, offset[0], offset[1]);
        if (!fine) continue;
        auto coarse = torus_log_mean(p.terms(), grid / 2, offset[0], offset[1]);
        if (!coarse) continue;
        long double diff = std::fabs((long double)(*fine - *coarse));
        double value = (double)std::exp(*fine);
        // The midpoint rule roughly quarters its error per refinement, so the
        // grid-vs-half-grid gap dominates the remaining error; the factor
        // keeps the interval covering in the observed worst cases.
        double err =
            value * (double)std::expm1(2.0L * diff) + 4e-13 * std::fabs(value);
        return MahlerEstimate{value, err, MahlerMethod::torus_quadrature};
    }
    throw SingularGrid("integrand vanished at a node for every retry offset");
}

unsigned long lawton_q(const std::vector<unsigned long>& a) {
    if (a.size() < 2)
        throw PreconditionViolation("relation norm needs at least two exponents");
    for (unsigned long v : a)
        if (v == 0)
            throw PreconditionViolation("exponents must be positive");
    if (a.size() == 2)
        return std::max(a[0], a[1]) / std::gcd(a[0], a[1]);

    // Any pair gives a relation, hence an upper bound on the search.
    unsigned long bound = std::numeric_limits<unsigned long>::max();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            bound = std::min(bound, std::max(a[i], a[j]) / std::gcd(a[i], a[j]));

    const std::size_t r = a.size();
    // Depth-first over the first r-1 coordinates in [-h, h]; the last one is
    // forced by the zero-sum condition.
    std::vector<long long> s(r, 0);
    auto feasible = [&](auto&& self, std::size_t idx, long long partial,
                        long long h) -> bool {
        if (idx == r - 1) {
            if (partial % (long long)a[idx] != 0) return false;
            long long last = -partial / (long long)a[idx];
            if (std::llabs(last) > h) return false;
            if (last == 0 &&
                std::all_of(s.begin(), s.begin() + (long)idx,
                            [](long long x) { return x == 0; }))
                return false;  // the zero vector is not a relation
            return true;
        }
        for (long long v = -h; v <= h; ++v) {
            s[idx] = v;
            if (self(self, idx + 1, partial + v * (long long)a[idx], h))
                return true;
        }
        return false;
    };
    for (unsigned long h = 1; h < bound; ++h)
        if (feasible(feasible, 0, 0, (long long)h)) return h;
    return bound;
}

std::vector<MahlerEstimate> lawton_sequence(
    const BivarPoly& p, const std::vector<std::pair<long, long>>& pairs) {
    std::vector<MahlerEstimate> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        out.push_back(mahler_univariate(specialize(p, a, b)));
    return out;
}

LehmerGateResult lehmer_gate(const CyclotomicPart& split, double tol) {
    LehmerGateResult res;
    res.cofactor = split.cofactor;
    res.threshold = kLehmerConstant * kLehmerConstant;
    res.measure = mahler_univariate(split.cofactor, tol);
    // The small-measure argument needs every unit-measure factor excluded:
    // the split already rules out cyclotomic factors, but a power of x also
    // has measure 1, so a vanishing constant term voids the certificate.
    res.conditionally_irreducible =
        res.cofactor.degree() >= 1 && low_exponent(res.cofactor) == 0 &&
        res.measure.value + res.measure.error_bound < res.threshold;
    return res;
}

LehmerGateResult lehmer_gate(const IntPoly& p, const FactorParts& parts,
                             double tol) {
    if (p.is_zero())
        throw ZeroPolynomial("mahler measure of the zero polynomial");
    // Only the cyclotomic entries are trusted; everything else in `parts`
    // is ignored so the certificate does not lean on a full factorization.
    IntPoly cofactor = p;
    for (const CyclotomicHit& hit : parts.cyclotomic) {
        IntPoly phi = cyclotomic_poly(hit.index);
        for (unsigned i = 0; i < hit.multiplicity; ++i)
            cofactor = exact_div(cofactor, phi);
    }
    CyclotomicPart split;
    split.factors = parts.cyclotomic;
    split.cofactor = cofactor;
    return lehmer_gate(split, tol);
}

LehmerGateResult lehmer_gate(const IntPoly& p, double tol) {
    if (p.is_zero())
        throw ZeroPolynomial("mahler measure of the zero polynomial");
    return lehmer_gate(cyclotomic_part(p), tol);
}

} // namespace fewnom
