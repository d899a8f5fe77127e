#include "fewnom/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fewnom/factorize.hpp"
#include "fewnom/modpoly.hpp"

namespace fewnom {

namespace {

std::mutex g_cyclo_mutex;
std::map<unsigned long, IntPoly> g_cyclo_cache;

std::optional<IntPoly> cached_cyclotomic(unsigned long n) {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(n);
    if (it == g_cyclo_cache.end()) return std::nullopt;
    return it->second;
}

// Phi_n mod q via the Moebius product over squarefree divisors:
// multiply (x^(n/d) - 1) for mu(d) = +1, divide for mu(d) = -1.
FpPoly cyclotomic_mod(unsigned long n, std::uint64_t q) {
    std::vector<unsigned long> primes;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) primes.push_back(m);

    std::vector<unsigned long> mul_exps, div_exps;
    const std::size_t k = primes.size();
    for (std::size_t mask = 0; mask < (1u << k); ++mask) {
        unsigned long d = 1;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) d *= primes[i];
        bool negative = __builtin_popcountll(mask) & 1;
        (negative ? div_exps : mul_exps).push_back(n / d);
    }

    FpPoly acc{1};
    for (unsigned long e : mul_exps) {
        // acc *= x^e - 1
        FpPoly next(acc.size() + e, 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + e] = fp::add(next[i + e], acc[i], q);
            next[i] = fp::sub(next[i], acc[i], q);
        }
        fp::trim(next);
        acc = std::move(next);
    }
    for (unsigned long e : div_exps) {
        // acc /= x^e - 1 (exact): synthetic division from the top.
        FpPoly quot(acc.size() - e, 0);
        for (std::size_t i = acc.size(); i-- > e;) {
            std::uint64_t t = acc[i];
            if (t == 0) continue;
            quot[i - e] = t;
            acc[i] = 0;
            acc[i - e] = fp::add(acc[i - e], t, q);
        }
        acc = std::move(quot);
    }
    return acc;
}

bool fp_divisible(const FpPoly& a, const FpPoly& b, std::uint64_t q) {
    if (fp::degree(a) < fp::degree(b)) return false;
    return fp::is_zero(fp::rem(a, b, q));
}

} // namespace

IntPoly cyclotomic_poly(unsigned long n) {
    if (n == 0) throw PreconditionViolation("cyclotomic_poly: n must be >= 1");
    if (auto hit = cached_cyclotomic(n)) return *hit;
    IntPoly result;
    if (n == 1) {
        result = IntPoly{-1, 1};  // x - 1
    } else {
        IntPoly divisor_product = IntPoly::constant(1);
        for (unsigned long d : divisors(n)) {
            if (d < n) divisor_product *= cyclotomic_poly(d);
        }
        IntPoly xn1 = IntPoly::monomial(1, n) - IntPoly::constant(1);
        result = exact_div(xn1, divisor_product);
    }
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    g_cyclo_cache.emplace(n, result);
    return result;
}

std::vector<std::pair<unsigned long, unsigned long>> totient_bounded(
    unsigned long max_phi) {
    std::vector<std::pair<unsigned long, unsigned long>> out;
    if (max_phi == 0) return out;
    // phi(n) >= sqrt(n/2), so phi(n) <= max_phi forces n <= 2*max_phi^2.
    const unsigned long bound = 2 * max_phi * max_phi + 1;
    std::vector<std::uint32_t> spf(bound + 1, 0);
    for (unsigned long i = 2; i <= bound; ++i) {
        if (spf[i] == 0) {
            for (unsigned long j = i; j <= bound; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    out.push_back({1, 1});
    for (unsigned long n = 2; n <= bound; ++n) {
        unsigned long m = n, phi = 1;
        while (m > 1) {
            unsigned long p = spf[m];
            unsigned long pk = 1;
            while (m % p == 0) {
                m /= p;
                pk *= p;
            }
            phi *= pk / p * (p - 1);
            if (phi > max_phi) break;
        }
        if (phi <= max_phi && m == 1) out.push_back({n, phi});
    }
    return out;
}

CyclotomicPart cyclotomic_part(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("cyclotomic_part: zero polynomial");
    CyclotomicPart result;
    if (p.degree() == 0) {
        result.cofactor = p;
        return result;
    }
    Int cont = content(p);
    IntPoly w = primitive_part(p);  // carries the sign of p

    const unsigned long max_phi = static_cast<unsigned long>(p.degree());
    auto candidates = totient_bounded(max_phi);

    // Two word primes not dividing the leading coefficient: a cheap mod-q
    // divisibility prefilter in front of the exact trial division.
    std::uint64_t q1 = 0, q2 = 0;
    for (std::uint64_t q = 1000003;; q += 2) {
        if (!fp::is_prime_u64(q)) continue;
        if (mpz_divisible_ui_p(w.leading().get_mpz_t(), static_cast<unsigned long>(q)))
            continue;
        if (q1 == 0) {
            q1 = q;
        } else {
            q2 = q;
            break;
        }
    }
    FpPoly wq1 = fp::from_int_poly(w, q1);
    FpPoly wq2 = fp::from_int_poly(w, q2);

    for (auto [n, phi] : candidates) {
        if (static_cast<int>(phi) > w.degree()) continue;
        if (!fp_divisible(wq1, cyclotomic_mod(n, q1), q1)) continue;
        if (!fp_divisible(wq2, cyclotomic_mod(n, q2), q2)) continue;
        IntPoly phi_n = cyclotomic_poly(n);
        unsigned mult = 0;
        while (auto quo = try_exact_div(w, phi_n)) {
            w = *std::move(quo);
            ++mult;
        }
        if (mult > 0) {
            result.factors.push_back({n, mult});
            wq1 = fp::from_int_poly(w, q1);
            wq2 = fp::from_int_poly(w, q2);
        }
    }
    result.cofactor = IntPoly::constant(cont) * w;
    return result;
}

std::optional<unsigned long> cyclotomic_index(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) return std::nullopt;
    if (p.leading() != 1 || content(p) != 1) return std::nullopt;
    if (p.degree() > 1 && !is_reciprocal(p)) return std::nullopt;
    const unsigned long d = static_cast<unsigned long>(p.degree());
    for (auto [n, phi] : totient_bounded(d)) {
        if (phi != d) continue;
        if (p == cyclotomic_poly(n)) return n;
    }
    return std::nullopt;
}

FactorParts three_part_split(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("three_part_split: zero polynomial");
    Factorization fz = factor_z(p);
    FactorParts parts;
    parts.unit = fz.unit;
    parts.content = fz.content;
    parts.content_primes = fz.content_primes;

    IntPoly nonrecip = IntPoly::constant(1);
    for (const auto& [g, mult] : fz.factors) {
        if (auto n = cyclotomic_index(g)) {
            parts.cyclotomic.push_back({*n, mult});
        } else if (is_reciprocal(g)) {
            parts.reciprocal.push_back({g, mult});
        } else {
            nonrecip *= pow(g, mult);
        }
    }
    std::sort(parts.cyclotomic.begin(), parts.cyclotomic.end(),
              [](const CyclotomicHit& a, const CyclotomicHit& b) {
                  return a.index < b.index;
              });
    // The non-reciprocal part absorbs the sign when it is non-trivial.
    if (parts.unit == -1 && !nonrecip.is_one()) {
        parts.nonreciprocal_part = -nonrecip;
        parts.unit = 1;
    } else {
        parts.nonreciprocal_part = nonrecip;
    }
    return parts;
}

IntPoly reconstruct(const FactorParts& parts) {
    IntPoly r = IntPoly::constant(parts.unit * parts.content);
    for (const auto& [n, mult] : parts.cyclotomic) r *= pow(cyclotomic_poly(n), mult);
    for (const auto& [g, mult] : parts.reciprocal) r *= pow(g, mult);
    r *= parts.nonreciprocal_part;
    return r;
}

} // namespace fewnom
