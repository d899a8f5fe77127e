#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "fewnom/errors.hpp"

namespace fewnom {

using Int = mpz_class;
using Rat = mpq_class;

/// gcd of two integers, always non-negative.
Int gcd(const Int& a, const Int& b);

/// Binomial coefficient C(n, k).
Int binomial(unsigned long n, unsigned long k);

/// BPSW/Miller-Rabin probable-prime test (exact for word-size inputs).
bool is_probable_prime(const Int& n);

/// Prime factorization of n >= 1 as (prime, exponent) pairs in increasing
/// prime order.  Trial division plus Brent-cycle rho, adequate for the
/// constants and moduli this library meets.
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);

/// Euler totient of n >= 1.
unsigned long euler_phi(unsigned long n);

/// Divisors of n >= 1 in increasing order.
std::vector<unsigned long> divisors(unsigned long n);

/// Exact integer p-th root if n is a perfect p-th power, std::nullopt-style
/// via bool return.  n >= 0 for even p.
bool perfect_power_root(const Int& n, unsigned long p, Int& root);

/// Basis of the kernel (null space) of the matrix given as rows, all of the
/// same width: one primitive integer vector per free column of the reduced
/// system, first non-zero entry positive.  Empty list = trivial kernel.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& rows);

/// Gaussian integer a + b*i with exact arithmetic.
struct GaussInt {
    Int re;
    Int im;

    GaussInt() = default;
    GaussInt(Int re, Int im) : re(std::move(re)), im(std::move(im)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Int norm() const { return re * re + im * im; }

    friend bool operator==(const GaussInt&, const GaussInt&) = default;
    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

/// z^e for e >= 0.
GaussInt pow(const GaussInt& z, unsigned long e);

/// Exact quotient z / w in Z[i]; throws NonIntegralQuotient if w does not
/// divide z, DivisionByZero if w = 0.
GaussInt exact_div(const GaussInt& z, const GaussInt& w);

std::string to_string(const GaussInt& z);

/// Gaussian rational a + b*i with exact arithmetic.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat re, Rat im) : re(std::move(re)), im(std::move(im)) {}
    explicit GaussRat(const GaussInt& z) : re(z.re), im(z.im) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Rat norm() const { return re * re + im * im; }

    /// 1/z; throws DivisionByZero when z = 0.
    GaussRat inverse() const;

    friend bool operator==(const GaussRat&, const GaussRat&) = default;
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

std::string to_string(const GaussRat& z);

} // namespace fewnom
