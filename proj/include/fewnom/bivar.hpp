#pragma once

#include <string>
#include <vector>

#include "fewnom/arith.hpp"
#include "fewnom/intpoly.hpp"

namespace fewnom {

/// One monomial c * x^xe * y^ye; exponents may be negative (Laurent).
struct BivarTerm {
    long xe = 0;
    long ye = 0;
    Int c;

    friend bool operator==(const BivarTerm&, const BivarTerm&) = default;
};

/// Sparse bivariate Laurent polynomial with exact integer coefficients.
/// Terms are kept sorted lexicographically by (x-exponent, y-exponent) with
/// no duplicates and no zero coefficients; the zero polynomial has no terms.
class BivarPoly {
  public:
    BivarPoly() = default;
    /// Normalizes: merges duplicate exponent pairs, drops zeros, sorts.
    explicit BivarPoly(std::vector<BivarTerm> terms);

    static BivarPoly monomial(Int c, long xe, long ye) {
        return BivarPoly({{xe, ye, std::move(c)}});
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<BivarTerm>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    long min_x_exponent() const; ///< throws ZeroPolynomial on zero
    long min_y_exponent() const;
    long max_x_exponent() const;
    long max_y_exponent() const;

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    friend BivarPoly operator-(const BivarPoly& p);
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

  private:
    std::vector<BivarTerm> terms_;
};

/// Shift exponents so that the minimal x- and y-exponents are both zero.
BivarPoly normalize_shift(const BivarPoly& p);

/// Both-variable reversal x^k y^l p(1/x, 1/y) with the smallest clearing
/// exponents, i.e. exponent negation followed by normalize_shift.
/// Throws ZeroPolynomial on zero input.
BivarPoly tilde(const BivarPoly& p);

/// Substitution x -> -x (resp. y -> -y); exponents unchanged.
BivarPoly flip_x(const BivarPoly& p);
BivarPoly flip_y(const BivarPoly& p);

/// p reciprocal iff tilde(p) = +-p (after shift normalization).
bool is_reciprocal(const BivarPoly& p);

/// Univariate specialization p(x^a, x^b) with the Laurent shift cleared so
/// the result is an honest polynomial with non-zero constant term (or zero).
IntPoly specialize(const BivarPoly& p, long a, long b);

/// Canonical rendering "x^2*y-x*y-1"; doubles as the canonical set key.
std::string to_string(const BivarPoly& p);

} // namespace fewnom
