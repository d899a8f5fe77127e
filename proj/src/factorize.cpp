#include "fewnom/factorize.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>

#include "fewnom/modpoly.hpp"

namespace fewnom {

namespace {

// ---------------------------------------------------------------- Z/m helpers
// Dense polynomials with coefficients reduced into [0, m) for an mpz modulus.

using ZmPoly = std::vector<Int>;

void zm_trim(ZmPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZmPoly zm_from(const IntPoly& p, const Int& m) {
    ZmPoly a(p.coeffs().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = p.coeffs()[i] % m;
        if (a[i] < 0) a[i] += m;
    }
    zm_trim(a);
    return a;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c %= m;
    zm_trim(r);
    return r;
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] += b[i];
        if (r[i] >= m) r[i] -= m;
    }
    zm_trim(r);
    return r;
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
        if (r[i] < 0) r[i] += m;
    }
    zm_trim(r);
    return r;
}

// Division by a monic divisor.
std::pair<ZmPoly, ZmPoly> zm_divrem_monic(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly rem = a, quot;
    zm_trim(rem);
    if (rem.size() < b.size()) return {quot, rem};
    quot.assign(rem.size() - b.size() + 1, Int(0));
    for (std::size_t i = rem.size(); i-- > b.size() - 1;) {
        Int f = rem[i];
        if (f == 0) continue;
        std::size_t off = i - (b.size() - 1);
        quot[off] = f;
        for (std::size_t j = 0; j < b.size(); ++j) {
            rem[off + j] = (rem[off + j] - f * b[j]) % m;
            if (rem[off + j] < 0) rem[off + j] += m;
        }
    }
    rem.resize(b.size() - 1);
    zm_trim(rem);
    zm_trim(quot);
    return {quot, rem};
}

ZmPoly zm_scale(const ZmPoly& a, const Int& s, const Int& m) {
    ZmPoly r = a;
    Int ss = s % m;
    if (ss < 0) ss += m;
    for (auto& c : r) c = c * ss % m;
    zm_trim(r);
    return r;
}

IntPoly zm_lift_symmetric(const ZmPoly& a, const Int& m) {
    std::vector<Int> c(a.size());
    Int half = m / 2;
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] > half) ? Int(a[i] - m) : a[i];
    return unchecked_from_coeffs(std::move(c));
}

// ------------------------------------------------------------- Hensel lifting

// One quadratic Hensel step: from f == g*h (mod m), s*g + t*h == 1 (mod m),
// h monic, to the same congruences mod m^2 (von zur Gathen & Gerhard 15.10).
void hensel_step(const ZmPoly& f, ZmPoly& g, ZmPoly& h, ZmPoly& s, ZmPoly& t,
                 const Int& m) {
    const Int m2 = m * m;
    ZmPoly fm = f;
    for (auto& c : fm) c %= m2;
    zm_trim(fm);
    ZmPoly gh = zm_mul(g, h, m2);
    ZmPoly err = zm_sub(fm, gh, m2);
    auto [q, r] = zm_divrem_monic(zm_mul(s, err, m2), h, m2);
    ZmPoly g_new = zm_add(zm_add(g, zm_mul(t, err, m2), m2), zm_mul(q, g, m2), m2);
    ZmPoly h_new = zm_add(h, r, m2);
    ZmPoly b = zm_sub(zm_add(zm_mul(s, g_new, m2), zm_mul(t, h_new, m2), m2), ZmPoly{Int(1)},
                      m2);
    auto [c_, d_] = zm_divrem_monic(zm_mul(s, b, m2), h_new, m2);
    ZmPoly s_new = zm_sub(s, d_, m2);
    ZmPoly t_new = zm_sub(zm_sub(t, zm_mul(t, b, m2), m2), zm_mul(c_, g_new, m2), m2);
    g = std::move(g_new);
    h = std::move(h_new);
    s = std::move(s_new);
    t = std::move(t_new);
}

// Lift the factorization f == lc(f) * prod(monic_factors) (mod q) to monic
// factors mod M = q^(2^j) >= target, sequentially splitting one factor at a
// time.  f primitive, squarefree mod q, q not dividing lc(f).
std::vector<ZmPoly> hensel_lift_all(const IntPoly& f, std::vector<FpPoly> monic_factors,
                                    std::uint64_t q, const Int& target, Int& modulus_out) {
    Int M(static_cast<unsigned long>(q));
    while (M < target) M *= M;
    modulus_out = M;

    const std::size_t r = monic_factors.size();
    std::vector<ZmPoly> lifted;
    lifted.reserve(r);

    ZmPoly cur = zm_from(f, M);
    Int lc = f.leading();

    for (std::size_t i = 0; i + 1 < r; ++i) {
        // Split factor i against the product of the rest (carrying lc).
        FpPoly h0 = monic_factors[i];
        FpPoly g0{fp::reduce_int(lc, q)};
        for (std::size_t j = i + 1; j < r; ++j) g0 = fp::mul(g0, monic_factors[j], q);
        FpPoly s0, t0;
        FpPoly one = fp::ext_gcd(g0, h0, q, s0, t0);
        if (fp::degree(one) != 0)
            throw BadPrime("hensel lift: factors not coprime mod q");

        ZmPoly g(g0.size()), h(h0.size()), s(s0.size()), t(t0.size());
        for (std::size_t k = 0; k < g0.size(); ++k) g[k] = Int((unsigned long)g0[k]);
        for (std::size_t k = 0; k < h0.size(); ++k) h[k] = Int((unsigned long)h0[k]);
        for (std::size_t k = 0; k < s0.size(); ++k) s[k] = Int((unsigned long)s0[k]);
        for (std::size_t k = 0; k < t0.size(); ++k) t[k] = Int((unsigned long)t0[k]);

        Int m(static_cast<unsigned long>(q));
        while (m < M) {
            hensel_step(cur, g, h, s, t, m);
            m *= m;
        }
        lifted.push_back(h);  // monic factor mod M
        cur = std::move(g);   // congruent to lc * prod(rest) mod q
    }
    // Last factor: cur == lc * monic_factors[r-1] (mod M after lifting chain);
    // normalize it monic by multiplying with lc^(-1) mod M.
    Int lc_inv;
    Int lcm = lc % M;
    if (lcm < 0) lcm += M;
    if (mpz_invert(lc_inv.get_mpz_t(), lcm.get_mpz_t(), M.get_mpz_t()) == 0)
        throw BadPrime("hensel lift: leading coefficient not invertible");
    lifted.push_back(zm_scale(cur, lc_inv, M));
    return lifted;
}

// ------------------------------------------------------- degree-pattern logic

// Bitset of degrees expressible as subset sums of the modular factor degrees.
std::vector<bool> subset_sums(const std::vector<unsigned>& degs, unsigned n) {
    std::vector<bool> dp(n + 1, false);
    dp[0] = true;
    for (unsigned d : degs) {
        for (unsigned i = n; i >= d; --i)
            if (dp[i - d]) dp[i] = true;
    }
    return dp;
}

struct PrimeScan {
    std::uint64_t prime;
    std::vector<unsigned> pattern;  // degrees of irreducible factors mod prime
};

// The smallest `count` primes for which f stays squarefree with full degree.
std::vector<PrimeScan> scan_good_primes(const IntPoly& f, unsigned count) {
    std::vector<PrimeScan> scans;
    for (std::uint64_t q = 2; scans.size() < count; ++q) {
        if (!fp::is_prime_u64(q)) continue;
        if (q >= fp::kMaxPrime) throw BadPrime("no usable small primes found");
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), (unsigned long)q)) continue;
        FpPoly fq = fp::from_int_poly(f, q);
        FpPoly dq = fp::derivative(fq, q);
        if (fp::is_zero(dq)) continue;
        if (fp::degree(fp::gcd(fq, dq, q)) != 0) continue;
        scans.push_back({q, fp::irreducible_degree_pattern(fq, q)});
    }
    return scans;
}

std::vector<bool> admissible_degrees(const IntPoly& f, const std::vector<PrimeScan>& scans) {
    const unsigned n = static_cast<unsigned>(f.degree());
    std::vector<bool> admissible(n + 1, true);
    for (const auto& scan : scans) {
        auto dp = subset_sums(scan.pattern, n);
        for (unsigned i = 0; i <= n; ++i)
            if (!dp[i]) admissible[i] = false;
    }
    return admissible;
}

bool pattern_proves_irreducible(const std::vector<bool>& admissible) {
    for (std::size_t i = 1; i + 1 < admissible.size(); ++i)
        if (admissible[i]) return false;
    return true;
}

// --------------------------------------------------------------- recombination

// Landau-Mignotte style bound: factors of f (scaled by lc) have coefficients
// bounded by 2^deg * l2norm * |lc|.
Int coefficient_bound(const IntPoly& f) {
    Int norm_sq = l2_norm_sq(f);
    Int norm = sqrt(norm_sq);
    if (norm * norm < norm_sq) norm += 1;
    Int bound = (norm + 1) * abs(f.leading());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(f.degree()));
    return bound;
}

// Zassenhaus search over subsets of the lifted modular factors.
std::vector<IntPoly> recombine(IntPoly remaining, std::vector<ZmPoly> lifted, const Int& M,
                               const std::vector<bool>& admissible, unsigned max_subset) {
    std::vector<IntPoly> found;
    unsigned s = 1;
    while (2 * s <= lifted.size()) {
        if (s > max_subset)
            throw RecombinationOverflow(
                "factor recombination exceeded the subset budget (size " +
                std::to_string(max_subset) + ", " + std::to_string(lifted.size()) +
                " modular factors left)");
        // Iterate subsets of size s in lexicographic index order.
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        bool restart = false;
        for (;;) {
            unsigned dsum = 0;
            for (std::size_t i : idx) dsum += static_cast<unsigned>(lifted[i].size() - 1);
            if (dsum < admissible.size() && admissible[dsum]) {
                ZmPoly prod{remaining.leading() % M};
                if (prod[0] < 0) prod[0] += M;
                for (std::size_t i : idx) prod = zm_mul(prod, lifted[i], M);
                IntPoly cand = primitive_part(zm_lift_symmetric(prod, M));
                if (!cand.is_zero() && cand.leading() < 0) cand = -cand;
                if (cand.degree() >= 1) {
                    if (auto quo = try_exact_div(remaining, cand)) {
                        found.push_back(cand);
                        remaining = *std::move(quo);
                        std::vector<ZmPoly> rest;
                        for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
                            if (j < idx.size() && idx[j] == i)
                                ++j;
                            else
                                rest.push_back(std::move(lifted[i]));
                        }
                        lifted = std::move(rest);
                        restart = true;
                        break;
                    }
                }
            }
            // next combination
            std::size_t k = s;
            while (k-- > 0) {
                if (idx[k] + (s - k) < lifted.size()) {
                    ++idx[k];
                    for (std::size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (k == 0) {
                    k = SIZE_MAX;
                    break;
                }
            }
            if (k == SIZE_MAX) break;
        }
        if (restart) {
            s = 1;
            continue;
        }
        ++s;
    }
    if (remaining.degree() >= 1) {
        IntPoly last = remaining.leading() < 0 ? -remaining : remaining;
        found.push_back(last);
    }
    return found;
}

// Factor a primitive squarefree polynomial with positive leading coefficient.
std::vector<IntPoly> factor_squarefree(const IntPoly& f, const FactorOptions& opts) {
    if (f.degree() == 1) return {f};
    auto scans = scan_good_primes(f, opts.prime_count);
    auto admissible = admissible_degrees(f, scans);
    for (const auto& scan : scans)
        if (scan.pattern.size() == 1) return {f};  // irreducible mod scan.prime
    if (pattern_proves_irreducible(admissible)) return {f};

    const PrimeScan* best = &scans.front();
    for (const auto& scan : scans)
        if (scan.pattern.size() < best->pattern.size()) best = &scan;

    std::uint64_t q = best->prime;
    auto fq_factors = fp::factor(fp::from_int_poly(f, q), q);
    std::vector<FpPoly> monics;
    monics.reserve(fq_factors.size());
    for (auto& [g, mult] : fq_factors) {
        if (mult != 1) throw BadPrime("good prime produced a repeated modular factor");
        monics.push_back(std::move(g));
    }

    Int target = coefficient_bound(f) * 2 + 1;
    Int M;
    auto lifted = hensel_lift_all(f, std::move(monics), q, target, M);
    return recombine(f, std::move(lifted), M, admissible, opts.max_subset_size);
}

int strip_sign(IntPoly& p) {
    if (p.leading() < 0) {
        p = -p;
        return -1;
    }
    return 1;
}

} // namespace

std::vector<std::pair<IntPoly, unsigned>> squarefree_decompose(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree_decompose: zero polynomial");
    if (abs(content(p)) != 1)
        throw PreconditionViolation("squarefree_decompose: input must be primitive");
    IntPoly f = p;
    int sign = strip_sign(f);
    std::vector<std::pair<IntPoly, unsigned>> parts;
    if (f.degree() >= 1) {
        // Yun's algorithm.
        IntPoly df = derivative(f);
        IntPoly a = poly_gcd(f, df);
        IntPoly b = exact_div(f, a);
        IntPoly c = exact_div(df, a);
        IntPoly d = c - derivative(b);
        unsigned i = 1;
        while (b.degree() >= 1) {
            IntPoly g = poly_gcd(b, d);
            if (g.degree() >= 1) parts.push_back({g, i});
            b = exact_div(b, g);
            c = exact_div(d, g);
            d = c - derivative(b);
            ++i;
        }
    }
    if (sign == -1) {
        // Attach the sign to an odd-multiplicity part (one always exists).
        for (auto& [part, mult] : parts) {
            if (mult % 2 == 1) {
                part = -part;
                sign = 1;
                break;
            }
        }
        if (sign == -1)
            throw StructureViolation("squarefree_decompose: sign cannot be restored");
    }
    return parts;
}

std::vector<std::pair<IntPoly, unsigned>> factor_mod_p(const IntPoly& p, std::uint64_t q) {
    if (q >= fp::kMaxPrime || !fp::is_prime_u64(q))
        throw BadPrime("factor_mod_p: modulus must be a prime below 2^30");
    if (mpz_divisible_ui_p(p.leading().get_mpz_t(), (unsigned long)q))
        throw BadPrime("factor_mod_p: prime divides the leading coefficient");
    auto raw = fp::factor(fp::from_int_poly(p, q), q);
    std::vector<std::pair<IntPoly, unsigned>> out;
    out.reserve(raw.size());
    for (auto& [g, mult] : raw) out.push_back({fp::to_int_poly(g), mult});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return poly_less(a.first, b.first);
    });
    return out;
}

FactorOptions default_factor_options() {
    static const FactorOptions opts = [] {
        FactorOptions o;
        if (const char* env = std::getenv("FEWNOM_RECOMB_MAX")) {
            long v = std::atol(env);
            if (v >= 1) o.max_subset_size = static_cast<unsigned>(v);
        }
        return o;
    }();
    return opts;
}

Factorization factor_z(const IntPoly& p) { return factor_z(p, default_factor_options()); }

Factorization factor_z(const IntPoly& p, const FactorOptions& opts) {
    if (p.is_zero()) throw ZeroPolynomial("factor_z: zero polynomial");
    Factorization out;
    IntPoly f = p;
    out.unit = strip_sign(f);
    out.content = content(f);
    if (out.content > 1) out.content_primes = factor_integer(out.content);
    f = primitive_part(f);
    if (f.degree() >= 1) {
        for (auto& [part, mult] : squarefree_decompose(f)) {
            IntPoly q = part;
            strip_sign(q);  // parts of a positive-lc input are positive already
            for (auto& g : factor_squarefree(q, opts)) out.factors.push_back({g, mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return poly_less(a.first, b.first);
    });
    return out;
}

IrreducibilityResult is_irreducible_z(const IntPoly& p) {
    return is_irreducible_z(p, IrreducibleOptions{});
}

IrreducibilityResult is_irreducible_z(const IntPoly& p, const IrreducibleOptions& opts) {
    if (p.degree() < 1)
        throw PreconditionViolation("is_irreducible_z: degree must be >= 1");
    if (abs(content(p)) != 1)
        throw PreconditionViolation("is_irreducible_z: input must be primitive");
    if (p.degree() == 1)
        return {IrreducibilityStatus::irreducible, IrreducibilityCertificate::linear};

    IntPoly f = p;
    strip_sign(f);
    IntPoly g = poly_gcd(f, derivative(f));
    if (g.degree() >= 1)
        return {IrreducibilityStatus::reducible,
                IrreducibilityCertificate::squarefree_defect};

    auto scans = scan_good_primes(f, opts.prime_count);
    for (const auto& scan : scans)
        if (scan.pattern.size() == 1)
            return {IrreducibilityStatus::irreducible,
                    IrreducibilityCertificate::irreducible_mod_p, scan.prime};
    auto admissible = admissible_degrees(f, scans);
    if (pattern_proves_irreducible(admissible))
        return {IrreducibilityStatus::irreducible,
                IrreducibilityCertificate::degree_pattern};
    if (opts.fast_only)
        return {IrreducibilityStatus::unknown, IrreducibilityCertificate::none};

    FactorOptions fo = default_factor_options();
    fo.prime_count = opts.prime_count;
    Factorization fz = factor_z(f, fo);
    if (fz.factors.size() == 1 && fz.factors.front().second == 1)
        return {IrreducibilityStatus::irreducible,
                IrreducibilityCertificate::factorization};
    return {IrreducibilityStatus::reducible, IrreducibilityCertificate::factor_found};
}

IntPoly gcd_z(const IntPoly& u, const IntPoly& v) {
    if (u.is_zero() || v.is_zero())
        throw ZeroPolynomial("gcd_z: arguments must be non-zero");
    Factorization fu = factor_z(u);
    Factorization fv = factor_z(v);
    IntPoly g = IntPoly::constant(1);
    // Shared prime constants to minimum multiplicity.
    for (const auto& [prime, eu] : fu.content_primes) {
        for (const auto& [qrime, ev] : fv.content_primes) {
            if (prime == qrime) {
                Int pk;
                mpz_pow_ui(pk.get_mpz_t(), prime.get_mpz_t(), std::min(eu, ev));
                g *= pk;
            }
        }
    }
    // Shared polynomial factors to minimum multiplicity.
    for (const auto& [f, eu] : fu.factors) {
        for (const auto& [h, ev] : fv.factors) {
            if (f == h) g *= pow(f, std::min(eu, ev));
        }
    }
    return g;
}

} // namespace fewnom
