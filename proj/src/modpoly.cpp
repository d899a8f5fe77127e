#include "fewnom/modpoly.hpp"

#include <algorithm>

namespace fewnom::fp {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) d >>= 1, ++r;
    auto mulmod64 = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((unsigned __int128)a * b % n);
    };
    auto powmod64 = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t x = 1;
        a %= n;
        while (e) {
            if (e & 1) x = mulmod64(x, a);
            a = mulmod64(a, a);
            e >>= 1;
        }
        return x;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod64(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod64(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t x = 1;
    a %= p;
    while (e) {
        if (e & 1) x = mul(x, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return x;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DivisionByZero("fp::inv of zero");
    return pow(a % p, p - 2, p);
}

std::uint64_t reduce_int(const Int& n, std::uint64_t p) {
    Int r = n % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

FpPoly from_int_poly(const IntPoly& q, std::uint64_t p) {
    FpPoly a(q.coeffs().size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = reduce_int(q.coeffs()[i], p);
    trim(a);
    return a;
}

IntPoly to_int_poly(const FpPoly& a) {
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = Int(static_cast<unsigned long>(a[i]));
    return unchecked_from_coeffs(std::move(c));
}

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const FpPoly& a) { return a.empty(); }

FpPoly make_monic(FpPoly a, std::uint64_t p) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    std::uint64_t s = inv(a.back(), p);
    for (auto& c : a) c = mul(c, s, p);
    return a;
}

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i], p);
    trim(r);
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i], p);
    trim(r);
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
    }
    FpPoly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        r[i] = static_cast<std::uint64_t>(acc[i] % p);
    trim(r);
    return r;
}

void rem_inplace(FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (b.empty()) throw DivisionByZero("fp::rem by zero");
    trim(a);
    std::uint64_t linv = inv(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t f = mul(a.back(), linv, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j + 1 < b.size(); ++j)
            a[off + j] = sub(a[off + j], mul(f, b[j], p), p);
        a.pop_back();
        trim(a);
    }
}

std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (b.empty()) throw DivisionByZero("fp::divrem by zero");
    FpPoly rem = a;
    trim(rem);
    if (rem.size() < b.size()) return {FpPoly{}, rem};
    FpPoly quot(rem.size() - b.size() + 1, 0);
    std::uint64_t linv = inv(b.back(), p);
    for (std::size_t i = rem.size(); i-- > b.size() - 1;) {
        std::uint64_t f = mul(rem[i], linv, p);
        if (f == 0) continue;
        std::size_t off = i - (b.size() - 1);
        quot[off] = f;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[off + j] = sub(rem[off + j], mul(f, b[j], p), p);
    }
    rem.resize(b.size() - 1);
    trim(rem);
    trim(quot);
    return {quot, rem};
}

FpPoly rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
    rem_inplace(a, b, p);
    return a;
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        rem_inplace(a, b, p);
        std::swap(a, b);
    }
    return make_monic(std::move(a), p);
}

FpPoly derivative(const FpPoly& a, std::uint64_t p) {
    if (a.size() < 2) return {};
    FpPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p, p);
    trim(d);
    return d;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p) {
    FpPoly r = mul(a, b, p);
    rem_inplace(r, f, p);
    return r;
}

FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& f, std::uint64_t p) {
    FpPoly result{1};
    if (e == 0) return result;
    FpPoly b = rem(base, f, p);
    mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        result = mulmod(result, result, f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, f, p);
    }
    return result;
}

FpPoly ext_gcd(const FpPoly& a, const FpPoly& b, std::uint64_t p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    trim(r0);
    trim(r1);
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = divrem(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        FpPoly s2 = sub(s0, mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = sub(t0, mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.empty() && r0.back() != 1) {
        std::uint64_t scale = inv(r0.back(), p);
        for (auto& c : r0) c = mul(c, scale, p);
        for (auto& c : s0) c = mul(c, scale, p);
        for (auto& c : t0) c = mul(c, scale, p);
    }
    s = std::move(s0);
    t = std::move(t0);
    return r0;
}

std::vector<DistinctDegreeBlock> distinct_degree_split(FpPoly f, std::uint64_t p) {
    f = make_monic(std::move(f), p);
    std::vector<DistinctDegreeBlock> blocks;
    const FpPoly x{0, 1};
    FpPoly h = rem(x, f, p);  // x^(p^d) mod f, maintained incrementally
    unsigned d = 0;
    while (degree(f) > 0) {
        ++d;
        if (2 * d > static_cast<unsigned>(degree(f))) {
            blocks.push_back({static_cast<unsigned>(degree(f)), f});
            break;
        }
        h = powmod(h, Int(static_cast<unsigned long>(p)), f, p);
        FpPoly g = gcd(sub(h, x, p), f, p);
        if (degree(g) > 0) {
            blocks.push_back({d, g});
            f = divrem(f, g, p).first;
            rem_inplace(h, f, p);
        }
    }
    return blocks;
}

namespace {

// Trace map for p = 2: a + a^2 + a^4 + ... + a^(2^(d-1)) mod block.
FpPoly trace_map_2(const FpPoly& a, unsigned d, const FpPoly& block) {
    FpPoly acc = rem(a, block, 2);
    FpPoly t = acc;
    for (unsigned i = 1; i < d; ++i) {
        t = mulmod(t, t, block, 2);
        acc = add(acc, t, 2);
    }
    return acc;
}

FpPoly random_poly(int max_deg, std::uint64_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    FpPoly a(static_cast<std::size_t>(max_deg) + 1);
    for (auto& c : a) c = dist(rng);
    trim(a);
    return a;
}

void edf_rec(FpPoly block, unsigned d, std::uint64_t p, std::mt19937_64& rng,
             std::vector<FpPoly>& out) {
    int n = degree(block);
    if (n == static_cast<int>(d)) {
        out.push_back(make_monic(std::move(block), p));
        return;
    }
    for (;;) {
        FpPoly a = random_poly(n - 1, p, rng);
        if (degree(a) < 1) continue;
        FpPoly g;
        if (p == 2) {
            g = gcd(trace_map_2(a, d, block), block, 2);
        } else {
            // a^((p^d - 1)/2) - 1 vanishes on roots whose norm is a residue.
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), d);
            e = (e - 1) / 2;
            FpPoly t = powmod(a, e, block, p);
            if (t.empty()) {
                t = FpPoly{p - 1};
            } else {
                t[0] = sub(t[0], 1, p);
                trim(t);
            }
            g = gcd(t, block, p);
        }
        if (degree(g) > 0 && degree(g) < n) {
            FpPoly rest = divrem(block, g, p).first;
            edf_rec(std::move(g), d, p, rng, out);
            edf_rec(std::move(rest), d, p, rng, out);
            return;
        }
    }
}

// Squarefree decomposition of monic f over F_p (char-p aware).
void fp_squarefree(FpPoly f, std::uint64_t p, unsigned outer_mult,
                   std::vector<std::pair<FpPoly, unsigned>>& out) {
    FpPoly df = derivative(f, p);
    if (is_zero(df)) {
        // f = g(x^p); over the prime field the p-th root contracts exponents.
        FpPoly g((f.size() - 1) / p + 1);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = f[i * p];
        fp_squarefree(std::move(g), p, outer_mult * static_cast<unsigned>(p), out);
        return;
    }
    FpPoly c = gcd(f, df, p);
    FpPoly w = divrem(f, c, p).first;
    unsigned i = 1;
    while (degree(w) > 0) {
        FpPoly y = gcd(w, c, p);
        FpPoly z = divrem(w, y, p).first;
        if (degree(z) > 0) out.push_back({make_monic(std::move(z), p), i * outer_mult});
        w = std::move(y);
        c = divrem(c, w, p).first;
        ++i;
    }
    if (degree(c) > 0) fp_squarefree(std::move(c), p, outer_mult, out);
}

} // namespace

std::vector<FpPoly> equal_degree_split(const FpPoly& block, unsigned d, std::uint64_t p,
                                       std::mt19937_64& rng) {
    std::vector<FpPoly> out;
    if (degree(block) <= 0) return out;
    edf_rec(make_monic(block, p), d, p, rng, out);
    return out;
}

std::vector<std::pair<FpPoly, unsigned>> factor(FpPoly f, std::uint64_t p) {
    trim(f);
    if (f.empty()) throw DivisionByZero("fp::factor of zero polynomial");
    f = make_monic(std::move(f), p);
    std::vector<std::pair<FpPoly, unsigned>> sf;
    if (degree(f) > 0) fp_squarefree(f, p, 1, sf);
    std::vector<std::pair<FpPoly, unsigned>> out;
    std::mt19937_64 rng(0x5eed0000 + p);
    for (auto& [part, mult] : sf) {
        for (auto& block : distinct_degree_split(part, p)) {
            if (static_cast<unsigned>(degree(block.product)) == block.degree) {
                out.push_back({make_monic(std::move(block.product), p), mult});
            } else {
                for (auto& g : equal_degree_split(block.product, block.degree, p, rng))
                    out.push_back({std::move(g), mult});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<unsigned> irreducible_degree_pattern(FpPoly f, std::uint64_t p) {
    trim(f);
    if (f.empty()) throw DivisionByZero("fp::degree pattern of zero polynomial");
    f = make_monic(std::move(f), p);
    std::vector<unsigned> pattern;
    if (degree(f) == 0) return pattern;
    // Radical (product of the distinct irreducible factors) via squarefree
    // decomposition, so inseparable inputs are handled too.
    std::vector<std::pair<FpPoly, unsigned>> sf;
    fp_squarefree(f, p, 1, sf);
    FpPoly radical{1};
    for (auto& [part, mult] : sf) radical = mul(radical, part, p);
    for (auto& block : distinct_degree_split(std::move(radical), p)) {
        unsigned count = static_cast<unsigned>(degree(block.product)) / block.degree;
        for (unsigned i = 0; i < count; ++i) pattern.push_back(block.degree);
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

} // namespace fewnom::fp
