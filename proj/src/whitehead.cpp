#include "fewnom/whitehead.hpp"

#include <algorithm>
#include <utility>

#include "fewnom/factorize.hpp"

namespace fewnom {

IntPoly build_fw(unsigned m, unsigned n) {
    // (x(x+1))^m * x^(4n) = (x+1)^m shifted up by m + 4n.
    IntPoly lead = shift_up(binomial_power(Int(1), Int(1), m), m + 4 * n);
    return lead - binomial_power(Int(1), Int(-1), m);
}

GaussInt eval_at_i(const IntPoly& p) {
    auto [q, r] = divrem(p, IntPoly{1, 0, 1});
    (void)q;
    return {r.coeff(0), r.coeff(1)};
}

X2p1Structure x2p1_structure(unsigned m, unsigned n) {
    if (m % 2 == 0 || n == 0 || gcd(Int(m), Int(n)) != 1)
        throw PreconditionViolation(
            "x2p1_structure: requires odd m >= 1 and n >= 1 with gcd(m, n) = 1");
    IntPoly f = build_fw(m, n);
    const IntPoly x2p1{1, 0, 1};
    auto q1 = try_exact_div(f, x2p1);
    if (!q1)
        throw StructureViolation("x2p1_structure: x^2+1 does not divide the polynomial");
    if (try_exact_div(*q1, x2p1))
        throw StructureViolation("x2p1_structure: x^2+1 divides with multiplicity >= 2");
    GaussInt dfi = eval_at_i(derivative(f));
    GaussInt witness = exact_div(dfi, pow(GaussInt(Int(-1), Int(1)), m - 1));
    if (witness.is_zero())
        throw StructureViolation("x2p1_structure: derivative witness vanished");
    return {*std::move(q1), witness};
}

namespace {

// Is fz (as a whole polynomial) a p-th power in Z[x]?
bool is_pth_power(const Factorization& fz, const Int& p) {
    for (const auto& [g, e] : fz.factors)
        if (Int(e) % p != 0) return false;
    Int c = Int(fz.unit) * fz.content;
    if (c == 1) return true;
    if (c == -1) return p % 2 == 1;
    if (!p.fits_ulong_p()) return false;  // |c| >= 2 admits no huge-index root
    Int root;
    return perfect_power_root(c, p.get_ui(), root);
}

// Is fz of the shape 4 * u^4?
bool is_four_times_fourth(Factorization fz) {
    if (fz.content % 4 != 0) return false;
    fz.content /= 4;
    return is_pth_power(fz, Int(4));
}

Factorization negated(Factorization fz) {
    fz.unit = -fz.unit;
    return fz;
}

} // namespace

SchinzelReport schinzel_conditions(const IntPoly& f, const IntPoly& g, const Int& k) {
    if (k < 1)
        throw PreconditionViolation("schinzel_conditions: exponent must be >= 1");
    if (f.is_zero() || g.is_zero() || f.constant_term() == 0 || g.constant_term() == 0)
        throw PreconditionViolation(
            "schinzel_conditions: f(0) and g(0) must be non-zero");
    if (gcd_z(f, g).degree() != 0)
        throw PreconditionViolation("schinzel_conditions: f and g must be coprime");

    SchinzelReport rep;
    rep.exponent = k;
    rep.r1 = Int(static_cast<unsigned long>(term_count(f)));
    rep.r2 = Int(static_cast<unsigned long>(term_count(g)));
    rep.norm_f_sq = l2_norm_sq(f);
    rep.norm_g_sq = l2_norm_sq(g);
    rep.big_n = 2 * rep.norm_f_sq + 2 * rep.norm_g_sq + 2 * rep.r1 + 2 * rep.r2 - 7;
    if (rep.big_n > 5000000)
        throw PreconditionViolation(
            "schinzel_conditions: threshold exponent too large to materialize");

    unsigned long nn = rep.big_n.get_ui();
    Int pow_hi, pow_lo;
    mpz_ui_pow_ui(pow_hi.get_mpz_t(), 5, 2 * nn - 1);
    mpz_ui_pow_ui(pow_lo.get_mpz_t(), 5, nn - 1);
    long dmax = std::max(f.degree(), g.degree());
    Rat branch1(2 * pow_hi);
    Rat branch2 = Rat(2 * dmax) * (Rat(pow_lo) + Rat(1, 4));
    rep.n_threshold = std::max(branch1, branch2);
    rep.threshold_met = Rat(k) >= rep.n_threshold;

    // (i): -f*g is a p-th power for a prime p dividing k.
    Factorization mfg = factor_z(-(f * g));
    for (const auto& [p, e] : factor_integer(k)) {
        if (is_pth_power(mfg, p)) {
            rep.condition_i = true;
            break;
        }
    }

    // (ii): 4 | k and, for some sign, one of {f, g} is a 4th power while the
    // other is 4 times a 4th power.
    if (k % 4 == 0) {
        Factorization ff = factor_z(f);
        Factorization fg = factor_z(g);
        for (bool flip : {false, true}) {
            const Factorization ef = flip ? negated(ff) : ff;
            const Factorization eg = flip ? negated(fg) : fg;
            if ((is_pth_power(ef, Int(4)) && is_four_times_fourth(eg)) ||
                (is_four_times_fourth(ef) && is_pth_power(eg, Int(4)))) {
                rep.condition_ii = true;
                break;
            }
        }
    }
    return rep;
}

Rat n_threshold_whitehead(unsigned m) {
    if (m < 1 || m % 2 == 0)
        throw PreconditionViolation("n_threshold_whitehead: m must be odd and >= 1");
    Int e = 8 * binomial(2 * m, m) + 8 * Int(m) - 7;
    if (e > 20000000)
        throw PreconditionViolation(
            "n_threshold_whitehead: power too large to materialize");
    Int p5;
    mpz_ui_pow_ui(p5.get_mpz_t(), 5, e.get_ui());
    Rat value = Rat(p5) / 2 - Rat(Int(m)) / 4;
    value.canonicalize();
    return value;
}

namespace {

const IntPoly kT00{};        // 0
const IntPoly kT10{1};       // 1
const IntPoly kT01{0, 1};    // z
const IntPoly kT11{1, 1, 1}; // z^2 + z + 1

// One m-recursion step chain: from T_{m0,n}, T_{m0+1,n} up to T_{m,n}.
IntPoly m_chain(IntPoly prev, IntPoly cur, unsigned steps) {
    const IntPoly zp2{2, 1}; // z + 2
    const IntPoly z{0, 1};
    for (unsigned i = 0; i < steps; ++i) {
        IntPoly next = zp2 * cur - z * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// One n-recursion step chain: from T_{m,n0}, T_{m,n0+1} up to T_{m,n}.
IntPoly n_chain(IntPoly prev, IntPoly cur, unsigned steps) {
    const IntPoly z2p2{2, 0, 1}; // z^2 + 2
    for (unsigned i = 0; i < steps; ++i) {
        IntPoly next = z2p2 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

IntPoly trace_poly(unsigned m, unsigned n, TraceDirection dir) {
    if (dir == TraceDirection::m_last) {
        // Columns m = 0 and m = 1 at height n, then walk the m-recursion.
        IntPoly u0 = n == 0 ? kT00 : n_chain(kT00, kT01, n - 1); // T_{0,n}
        if (m == 0) return u0;
        IntPoly u1 = n == 0 ? kT10 : n_chain(kT10, kT11, n - 1); // T_{1,n}
        if (m == 1) return u1;
        return m_chain(std::move(u0), std::move(u1), m - 1);
    }
    // Rows n = 0 and n = 1 at width m, then walk the n-recursion.
    IntPoly v0 = m == 0 ? kT00 : m_chain(kT00, kT10, m - 1); // T_{m,0}
    if (n == 0) return v0;
    IntPoly v1 = m == 0 ? kT01 : m_chain(kT01, kT11, m - 1); // T_{m,1}
    if (n == 1) return v1;
    return n_chain(std::move(v0), std::move(v1), n - 1);
}

IntPoly trace_poly(unsigned m, unsigned n) {
    return trace_poly(m, n, TraceDirection::m_last);
}

bool verify_trace_identity(unsigned m, unsigned n, TraceDirection dir) {
    IntPoly t = trace_poly(m, n, dir);
    IntPoly fw = build_fw(m, n);
    if (t.is_zero()) return fw.is_zero();
    long d = 2L * n + m - 1;
    if (t.degree() > d) return false;
    // x^d * T(x - 1/x) = sum_j t_j (x^2 - 1)^j x^(d-j).
    const IntPoly x2m1{-1, 0, 1};
    IntPoly cleared;
    IntPoly power{1};
    for (long j = 0; j <= t.degree(); ++j) {
        if (t.coeff(j) != 0) {
            IntPoly term = power;
            term *= t.coeff(j);
            cleared += shift_up(term, static_cast<unsigned>(d - j));
        }
        power *= x2m1;
    }
    return IntPoly{1, 0, 1} * cleared == fw;
}

bool verify_trace_identity(unsigned m, unsigned n) {
    return verify_trace_identity(m, n, TraceDirection::m_last) &&
           verify_trace_identity(m, n, TraceDirection::n_last);
}

unsigned trace_field_degree(unsigned m, unsigned n) {
    if (m % 2 == 0 || n == 0 || gcd(Int(m), Int(n)) != 1)
        throw PreconditionViolation(
            "trace_field_degree: requires odd m >= 1 and n >= 1 with gcd(m, n) = 1");
    unsigned expected = 2 * n + m - 1;
    IntPoly t = trace_poly(m, n);
    if (t.degree() != static_cast<long>(expected))
        throw StructureViolation("trace_field_degree: recursion degree mismatch");
    return expected;
}

std::array<GaussRat, 4> parametrized_solution(const GaussRat& x) {
    if (x.is_zero()) throw ZeroInput("parametrized_solution: x must be non-zero");
    GaussRat minus_inv = -x.inverse();
    return {x, minus_inv, x, minus_inv};
}

std::array<std::string, 4> parametrized_solution(const std::string& symbol) {
    std::string minus_inv = "-" + symbol + "^-1";
    return {symbol, minus_inv, symbol, minus_inv};
}

} // namespace fewnom
