#pragma once

#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fewnom/arith.hpp"

namespace fewnom {

/// Univariate polynomial over Z with arbitrary-precision coefficients.
///
/// Dense representation: coefficient of x^i at index i, no trailing zeros
/// (the zero polynomial has an empty vector).  A sparse term view is provided
/// for the genuinely sparse families this library manipulates.
class IntPoly {
public:
    IntPoly() = default;
    /// Coefficients in ascending exponent order; trailing zeros trimmed.
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        c_.assign(coeffs.begin(), coeffs.end());
        trim();
    }

    static IntPoly constant(Int c) {
        IntPoly p;
        if (c != 0) p.c_.push_back(std::move(c));
        return p;
    }
    static IntPoly monomial(Int coeff, std::size_t exp) {
        IntPoly p;
        if (coeff != 0) {
            p.c_.assign(exp + 1, Int(0));
            p.c_[exp] = std::move(coeff);
        }
        return p;
    }
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    /// Coefficient of x^i (zero beyond the degree).
    const Int& coeff(std::size_t i) const {
        static const Int kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const Int& leading() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
        return c_.back();
    }
    const Int& constant_term() const { return coeff(0); }

    /// Evaluation at an integer point (Horner).
    Int operator()(const Int& v) const {
        Int acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    IntPoly& operator*=(const Int& s);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
    friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }

private:
    std::vector<Int> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    friend IntPoly unchecked_from_coeffs(std::vector<Int>&& coeffs);
};

/// Internal: wrap a coefficient vector that is already trimmed.
IntPoly unchecked_from_coeffs(std::vector<Int>&& coeffs);

/// Euclidean division p = q * quot + rem with deg rem < deg q, performed over
/// the rationals with an exactness check: throws NonIntegralQuotient if the
/// rational quotient/remainder are not integer polynomials, DivisionByZero
/// if q = 0.
std::pair<IntPoly, IntPoly> divrem(const IntPoly& p, const IntPoly& q);

/// Exact quotient p / q; throws NonIntegralQuotient if q does not divide p.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

/// Exact quotient if q divides p in Z[x], std::nullopt otherwise (no throw
/// on inexactness; used for trial division).
std::optional<IntPoly> try_exact_div(const IntPoly& p, const IntPoly& q);

/// Reversal x^deg * p(1/x) after stripping the power of x dividing p, so that
/// reverse is an involution.  Throws ZeroPolynomial on zero input.
IntPoly reverse(const IntPoly& p);

/// True iff p(0) != 0 and p = +-reverse(p).
bool is_reciprocal(const IntPoly& p);

/// Sum of squared coefficients.
Int l2_norm_sq(const IntPoly& p);

/// Formal derivative.
IntPoly derivative(const IntPoly& p);

/// gcd of the coefficients, >= 0 (0 for the zero polynomial).
Int content(const IntPoly& p);

/// p divided by its content; keeps the sign of the leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Number of non-zero terms.
std::size_t term_count(const IntPoly& p);

/// Largest v with x^v | p; p must be non-zero.
std::size_t low_exponent(const IntPoly& p);

/// p * x^k.
IntPoly shift_up(const IntPoly& p, std::size_t k);

/// p / x^k; throws NonIntegralQuotient unless x^k | p.
IntPoly shift_down(const IntPoly& p, std::size_t k);

/// p^e by binary exponentiation (p^0 = 1).
IntPoly pow(const IntPoly& p, unsigned long e);

/// (a*x + b)^m via binomial expansion.
IntPoly binomial_power(const Int& a, const Int& b, unsigned long m);

/// Classical polynomial gcd in Z[x] (modular images + CRT, verified by exact
/// division), normalized to positive leading coefficient; the integer content
/// gcd is included.  This is the internal workhorse; the factorization-based
/// gcd_z lives with the factorizer.
IntPoly poly_gcd(const IntPoly& u, const IntPoly& v);

/// Sparse view of a dense polynomial (ascending exponents).
struct SparseTerm {
    std::size_t exponent;
    Int coefficient;
    friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};
std::vector<SparseTerm> sparse_terms(const IntPoly& p);
IntPoly from_sparse_terms(std::span<const SparseTerm> terms);

/// Canonical text form, descending exponents, e.g. "x^4+x^3-x^2-x+1".
std::string to_string(const IntPoly& p, std::string_view var = "x");
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Total order for canonical factor lists: by degree, then coefficient
/// lexicographic from the leading coefficient down.
bool poly_less(const IntPoly& a, const IntPoly& b);

} // namespace fewnom
