#include "fewnom/arith.hpp"

#include <algorithm>
#include <map>

namespace fewnom {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

// Brent-cycle Pollard rho; n odd composite, not a prime power of interest.
Int rho_factor(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x9e3779b9ul);
    for (;;) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            do {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = rho_factor(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
    if (n < 1) throw PreconditionViolation("factor_integer: n must be >= 1");
    std::map<Int, unsigned> acc;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[Int(p)];
            n /= static_cast<long>(p);
        }
    }
    Int p = 17;
    while (n > 1 && p * p <= n && p < 100000) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            ++acc[p];
            n /= p;
        }
        p += 2;
    }
    if (n > 1) factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

unsigned long euler_phi(unsigned long n) {
    if (n == 0) throw PreconditionViolation("euler_phi: n must be >= 1");
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
    if (n == 0) throw PreconditionViolation("divisors: n must be >= 1");
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool perfect_power_root(const Int& n, unsigned long p, Int& root) {
    if (p == 0) throw PreconditionViolation("perfect_power_root: p must be >= 1");
    if (n < 0 && p % 2 == 0) return false;
    Int a = abs(n);
    Int r;
    bool exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), p) != 0;
    if (!exact) return false;
    root = (n < 0) ? Int(-r) : r;
    return true;
}

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty())
        throw PreconditionViolation("integer_kernel: needs at least one row");
    const std::size_t w = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != w)
            throw PreconditionViolation("integer_kernel: rows must share a width");

    // Reduced row echelon form over the rationals.
    std::vector<std::vector<Rat>> m(rows.size(), std::vector<Rat>(w));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < w; ++j) m[i][j] = Rat(rows[i][j]);

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < w && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        Rat inv = m[rank][col];
        for (std::size_t j = col; j < w; ++j) m[rank][j] /= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < w; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<std::vector<Int>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < w; ++col) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        // Free column: back-read the pivot coordinates, then clear denominators.
        std::vector<Rat> v(w, Rat(0));
        v[col] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivot_cols[i]] = -m[i][col];
        Int scale(1);
        for (const auto& x : v) {
            Int l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());
            scale = l;
        }
        std::vector<Int> iv(w);
        Int g(0);
        for (std::size_t j = 0; j < w; ++j) {
            Rat s = v[j] * Rat(scale);
            s.canonicalize();
            iv[j] = s.get_num();
            g = gcd(g, iv[j]);
        }
        if (g > 1)
            for (auto& x : iv) x /= g;
        for (const auto& x : iv) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : iv) y = -y;
            break;
        }
        basis.push_back(std::move(iv));
    }
    return basis;
}

GaussInt pow(const GaussInt& z, unsigned long e) {
    GaussInt result(1, 0), base = z;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

GaussInt exact_div(const GaussInt& z, const GaussInt& w) {
    if (w.is_zero()) throw DivisionByZero("Gaussian division by zero");
    Int n = w.norm();
    GaussInt num = z * GaussInt(w.re, -w.im);
    if (num.re % n != 0 || num.im % n != 0)
        throw NonIntegralQuotient("Gaussian division is not exact");
    return {num.re / n, num.im / n};
}

std::string to_string(const GaussInt& z) {
    std::string s = z.re.get_str();
    if (z.im >= 0) s += "+";
    s += z.im.get_str() + "i";
    return s;
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw DivisionByZero("Gaussian division by zero");
    Rat n = norm();
    return {re / n, -im / n};
}

std::string to_string(const GaussRat& z) {
    std::string s = z.re.get_str();
    if (z.im >= 0) s += "+";
    s += z.im.get_str() + "i";
    return s;
}

} // namespace fewnom
