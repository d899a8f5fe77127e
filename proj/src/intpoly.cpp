#include "fewnom/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "fewnom/modpoly.hpp"

namespace fewnom {

IntPoly unchecked_from_coeffs(std::vector<Int>&& coeffs) {
    IntPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Int& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return unchecked_from_coeffs(std::move(r));
}

std::pair<IntPoly, IntPoly> divrem(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw DivisionByZero("divrem: division by zero polynomial");
    if (p.is_zero() || p.degree() < q.degree()) return {IntPoly{}, p};

    // Rational long division, then integrality check.
    std::vector<Rat> rem(p.coeffs().begin(), p.coeffs().end());
    const auto& qc = q.coeffs();
    const Rat qlead(q.leading());
    const std::size_t dq = qc.size() - 1;
    std::vector<Rat> quot(rem.size() - dq, Rat(0));
    for (std::size_t i = rem.size(); i-- > dq;) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / qlead;
        quot[i - dq] = f;
        for (std::size_t j = 0; j <= dq; ++j) rem[i - dq + j] -= f * Rat(qc[j]);
    }
    auto to_int = [](std::vector<Rat>& v, const char* what) {
        std::vector<Int> out;
        out.reserve(v.size());
        for (auto& r : v) {
            r.canonicalize();
            if (r.get_den() != 1)
                throw NonIntegralQuotient(std::string("divrem: ") + what +
                                          " is not an integer polynomial");
            out.push_back(r.get_num());
        }
        return out;
    };
    auto qi = to_int(quot, "quotient");
    auto ri = to_int(rem, "remainder");
    ri.resize(dq);
    return {unchecked_from_coeffs(std::move(qi)), unchecked_from_coeffs(std::move(ri))};
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
    auto r = try_exact_div(p, q);
    if (q.is_zero()) throw DivisionByZero("exact_div: division by zero polynomial");
    if (!r) throw NonIntegralQuotient("exact_div: " + to_string(q) +
                                      " does not divide " + to_string(p));
    return *std::move(r);
}

std::optional<IntPoly> try_exact_div(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return IntPoly{};
    if (p.degree() < q.degree()) return std::nullopt;

    // Integer long division with early bail-out: if p = q*h with h in Z[x],
    // every elimination step divides exactly; a failed step proves inexactness.
    std::vector<Int> rem = p.coeffs();
    const auto& qc = q.coeffs();
    const Int& qlead = q.leading();
    const std::size_t dq = qc.size() - 1;
    std::vector<Int> quot(rem.size() - dq, Int(0));
    for (std::size_t i = rem.size(); i-- > dq;) {
        if (rem[i] == 0) continue;
        Int f, r;
        mpz_tdiv_qr(f.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), qlead.get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[i - dq] = f;
        for (std::size_t j = 0; j <= dq; ++j) rem[i - dq + j] -= f * qc[j];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return unchecked_from_coeffs(std::move(quot));
}

IntPoly reverse(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("reverse: zero polynomial");
    std::size_t low = low_exponent(p);
    std::vector<Int> r(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
    std::reverse(r.begin(), r.end());
    return unchecked_from_coeffs(std::move(r));
}

bool is_reciprocal(const IntPoly& p) {
    if (p.is_zero() || p.constant_term() == 0) return false;
    IntPoly r = reverse(p);
    return r == p || r == -p;
}

Int l2_norm_sq(const IntPoly& p) {
    Int s(0);
    for (const auto& c : p.coeffs()) s += c * c;
    return s;
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Int> d(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        d[i - 1] = p.coeffs()[i] * static_cast<long>(i);
    return unchecked_from_coeffs(std::move(d));
}

Int content(const IntPoly& p) {
    Int g(0);
    for (const auto& c : p.coeffs()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return {};
    Int c = content(p);
    std::vector<Int> out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeffs()[i] / c;
    return unchecked_from_coeffs(std::move(out));
}

std::size_t term_count(const IntPoly& p) {
    std::size_t n = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++n;
    return n;
}

std::size_t low_exponent(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("low_exponent: zero polynomial");
    std::size_t i = 0;
    while (p.coeffs()[i] == 0) ++i;
    return i;
}

IntPoly shift_up(const IntPoly& p, std::size_t k) {
    if (p.is_zero() || k == 0) return p;
    std::vector<Int> r(p.coeffs().size() + k, Int(0));
    std::copy(p.coeffs().begin(), p.coeffs().end(), r.begin() + static_cast<long>(k));
    return unchecked_from_coeffs(std::move(r));
}

IntPoly shift_down(const IntPoly& p, std::size_t k) {
    if (p.is_zero() || k == 0) return p;
    if (low_exponent(p) < k)
        throw NonIntegralQuotient("shift_down: x^" + std::to_string(k) +
                                  " does not divide the polynomial");
    return unchecked_from_coeffs(
        {p.coeffs().begin() + static_cast<long>(k), p.coeffs().end()});
}

IntPoly pow(const IntPoly& p, unsigned long e) {
    IntPoly result = IntPoly::constant(1);
    IntPoly base = p;
    while (e) {
        if (e & 1) result *= base;
        if (e >>= 1) base *= base;
    }
    return result;
}

IntPoly binomial_power(const Int& a, const Int& b, unsigned long m) {
    std::vector<Int> c(m + 1);
    Int apow(1);
    std::vector<Int> bpow(m + 1);
    bpow[0] = 1;
    for (unsigned long i = 1; i <= m; ++i) bpow[i] = bpow[i - 1] * b;
    for (unsigned long k = 0; k <= m; ++k) {
        c[k] = binomial(m, k) * apow * bpow[m - k];
        apow *= a;
    }
    return unchecked_from_coeffs(std::move(c));
}

namespace {

// One modular gcd image: monic gcd of u,v mod p scaled to leading coeff lg.
bool gcd_image(const IntPoly& u, const IntPoly& v, std::uint64_t p, const Int& lg,
               FpPoly& out) {
    FpPoly a = fp::from_int_poly(u, p), b = fp::from_int_poly(v, p);
    if (fp::degree(a) != u.degree() || fp::degree(b) != v.degree()) return false;
    FpPoly g = fp::gcd(std::move(a), std::move(b), p);
    std::uint64_t scale = fp::reduce_int(lg, p);
    for (auto& c : g) c = fp::mul(c, scale, p);
    out = std::move(g);
    return true;
}

} // namespace

IntPoly poly_gcd(const IntPoly& u, const IntPoly& v) {
    if (u.is_zero() && v.is_zero()) return {};
    if (u.is_zero() || v.is_zero()) {
        const IntPoly& w = u.is_zero() ? v : u;
        IntPoly r = w;
        if (r.leading() < 0) r = -r;
        return r;
    }
    Int cu = content(u), cv = content(v);
    Int cg = gcd(cu, cv);
    IntPoly U = primitive_part(u), V = primitive_part(v);
    if (U.degree() == 0 || V.degree() == 0) return IntPoly::constant(cg);

    const Int lg = gcd(U.leading(), V.leading());
    int best_deg = std::min(U.degree(), V.degree()) + 1;
    std::vector<Int> crt;   // accumulated coefficients, symmetric range
    Int modulus(1);
    for (std::uint64_t p = (1ull << 29) + 11;; p += 2) {
        if (!fp::is_prime_u64(p)) continue;
        FpPoly img;
        if (!gcd_image(U, V, p, lg, img)) continue;
        int d = fp::degree(img);
        if (d == 0) return IntPoly::constant(cg);
        if (d > best_deg) continue;  // unlucky prime
        if (d < best_deg) {          // all previous primes were unlucky
            best_deg = d;
            crt.assign(static_cast<std::size_t>(d) + 1, Int(0));
            modulus = 1;
        }
        // CRT-combine this image into the accumulator.
        Int pi(static_cast<unsigned long>(p));
        Int m_inv;
        if (modulus == 1) {
            for (std::size_t i = 0; i < crt.size(); ++i)
                crt[i] = Int(static_cast<unsigned long>(i < img.size() ? img[i] : 0));
            modulus = pi;
        } else {
            mpz_invert(m_inv.get_mpz_t(), modulus.get_mpz_t(), pi.get_mpz_t());
            for (std::size_t i = 0; i < crt.size(); ++i) {
                Int ci(static_cast<unsigned long>(i < img.size() ? img[i] : 0));
                Int t = ((ci - crt[i]) * m_inv) % pi;
                if (t < 0) t += pi;
                crt[i] += modulus * t;
            }
            modulus *= pi;
        }
        // Symmetric lift and divisibility check.
        std::vector<Int> lifted = crt;
        Int half = modulus / 2;
        for (auto& c : lifted)
            if (c > half) c -= modulus;
        IntPoly cand = primitive_part(unchecked_from_coeffs(std::move(lifted)));
        if (cand.is_zero()) continue;
        if (cand.leading() < 0) cand = -cand;
        if (try_exact_div(U, cand) && try_exact_div(V, cand))
            return IntPoly::constant(cg) * cand;
    }
}

std::vector<SparseTerm> sparse_terms(const IntPoly& p) {
    std::vector<SparseTerm> out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) out.push_back({i, p.coeffs()[i]});
    return out;
}

IntPoly from_sparse_terms(std::span<const SparseTerm> terms) {
    std::size_t deg = 0;
    for (const auto& t : terms)
        if (t.coefficient != 0) deg = std::max(deg, t.exponent);
    std::vector<Int> c(terms.empty() ? 0 : deg + 1, Int(0));
    for (const auto& t : terms) {
        if (t.coefficient == 0) continue;
        c[t.exponent] += t.coefficient;
    }
    return unchecked_from_coeffs(std::move(c));
}

std::string to_string(const IntPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Int& c = p.coeffs()[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << to_string(p);
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        int cmp = ::cmp(a.coeffs()[i], b.coeffs()[i]);
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

} // namespace fewnom
