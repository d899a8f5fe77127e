#include "doctest.h"

#include "fewnom/arith.hpp"
#include "fewnom/cyclotomic.hpp"

using namespace fewnom;

TEST_CASE("small cyclotomic polynomials are the classical ones") {
    CHECK(cyclotomic_poly(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic_poly(2) == IntPoly({1, 1}));
    CHECK(cyclotomic_poly(3) == IntPoly({1, 1, 1}));
    CHECK(cyclotomic_poly(4) == IntPoly({1, 0, 1}));
    CHECK(cyclotomic_poly(5) == IntPoly({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(6) == IntPoly({1, -1, 1}));
    CHECK(cyclotomic_poly(7) == IntPoly({1, 1, 1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(8) == IntPoly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_poly(9) == IntPoly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_poly(10) == IntPoly({1, -1, 1, -1, 1}));
    CHECK(cyclotomic_poly(11) == IntPoly({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(12) == IntPoly({1, 0, -1, 0, 1}));
}

TEST_CASE("index 105 is the first with a coefficient outside {-1,0,1}") {
    IntPoly c105 = cyclotomic_poly(105);
    CHECK(c105.degree() == 48);  // phi(105)
    CHECK(c105.coeff(7) == -2);
    CHECK(c105.coeff(41) == -2);
    for (unsigned long n = 1; n < 105; ++n) {
        IntPoly c = cyclotomic_poly(n);
        for (int i = 0; i <= c.degree(); ++i) {
            CHECK(abs(c.coeff(static_cast<size_t>(i))) <= 1);
        }
    }
}

TEST_CASE("product of Phi_d over divisors d of n gives x^n - 1") {
    for (unsigned long n : {1ul, 2ul, 6ul, 12ul, 30ul}) {
        IntPoly prod = IntPoly::constant(1);
        for (unsigned long d = 1; d <= n; ++d) {
            if (n % d == 0) prod = prod * cyclotomic_poly(d);
        }
        IntPoly target = IntPoly::monomial(1, n) - IntPoly::constant(1);
        CHECK(prod == target);
    }
}

TEST_CASE("totient enumeration is complete and ascending") {
    auto upto4 = totient_bounded(4);
    // phi(n) <= 4: n in {1,2,3,4,5,6,8,10,12}
    std::vector<std::pair<unsigned long, unsigned long>> expected = {
        {1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 4}, {6, 2}, {8, 4}, {10, 4}, {12, 4}};
    CHECK(upto4 == expected);
    auto upto1 = totient_bounded(1);
    CHECK(upto1 == std::vector<std::pair<unsigned long, unsigned long>>{{1, 1}, {2, 1}});
    // every listed pair has the right totient and the list has no gaps
    auto upto100 = totient_bounded(100);
    for (auto [n, phi] : upto100) CHECK(euler_phi(n) == phi);
    for (unsigned long n = 1; n <= 100; ++n) {
        unsigned long phi = euler_phi(n);
        bool listed = false;
        for (auto [m, _] : upto100)
            if (m == n) listed = true;
        CHECK(listed == (phi <= 100));
    }
}

TEST_CASE("cyclotomic part finds every index with exact multiplicity") {
    SUBCASE("pure product") {
        IntPoly p = cyclotomic_poly(1) * cyclotomic_poly(1) * cyclotomic_poly(10) *
                    cyclotomic_poly(12);
        auto part = cyclotomic_part(p);
        REQUIRE(part.factors.size() == 3);
        CHECK(part.factors[0] == CyclotomicHit{1, 2});
        CHECK(part.factors[1] == CyclotomicHit{10, 1});
        CHECK(part.factors[2] == CyclotomicHit{12, 1});
        CHECK(part.cofactor == IntPoly::constant(1));
    }
    SUBCASE("with a non-cyclotomic cofactor and content") {
        IntPoly p = IntPoly::constant(6) * cyclotomic_poly(2) * IntPoly({-1, 1, 1});
        auto part = cyclotomic_part(p);
        REQUIRE(part.factors.size() == 1);
        CHECK(part.factors[0] == CyclotomicHit{2, 1});
        CHECK(part.cofactor == IntPoly::constant(6) * IntPoly({-1, 1, 1}));
        IntPoly check = part.cofactor;
        for (auto [n, m] : part.factors)
            for (unsigned i = 0; i < m; ++i) check = check * cyclotomic_poly(n);
        CHECK(check == p);
    }
    SUBCASE("no cyclotomic factor at all") {
        IntPoly p({1, 1, 0, 1});  // x^3 + x + 1
        auto part = cyclotomic_part(p);
        CHECK(part.factors.empty());
        CHECK(part.cofactor == p);
    }
    SUBCASE("x^n - 1 hits every divisor once") {
        IntPoly p = IntPoly::monomial(1, 12) - IntPoly::constant(1);
        auto part = cyclotomic_part(p);
        std::vector<CyclotomicHit> expected = {{1, 1}, {2, 1}, {3, 1}, {4, 1},
                                               {6, 1}, {12, 1}};
        CHECK(part.factors == expected);
        CHECK(part.cofactor == IntPoly::constant(1));
    }
}

TEST_CASE("cyclotomic index recognizes exactly the cyclotomic polynomials") {
    for (unsigned long n : {1ul, 2ul, 5ul, 12ul, 105ul}) {
        auto idx = cyclotomic_index(cyclotomic_poly(n));
        REQUIRE(idx.has_value());
        CHECK(*idx == n);
    }
    CHECK_FALSE(cyclotomic_index(IntPoly({1, 1, 0, 1})).has_value());
    CHECK_FALSE(cyclotomic_index(IntPoly({2, 2})).has_value());        // content 2
    CHECK_FALSE(cyclotomic_index(IntPoly({1, -1}) * IntPoly({-1, 1})).has_value());
    CHECK_FALSE(cyclotomic_index(IntPoly::constant(1)).has_value());
}

TEST_CASE("three-part split of -2x^7 + ... worked factorization") {
    // F = (-2x+2)(x^6+x^5+x^4+3x^3+x^2+x+1)
    //   = -2 (x-1) (x^3+x^2+1) (x^3+x+1)
    IntPoly f = IntPoly({2, -2}) * IntPoly({1, 1, 1, 3, 1, 1, 1});
    auto parts = three_part_split(f);
    CHECK(parts.unit == 1);  // sign absorbed by the non-reciprocal part
    CHECK(parts.content == 2);
    REQUIRE(parts.content_primes.size() == 1);
    CHECK(parts.content_primes[0].first == 2);
    CHECK(parts.content_primes[0].second == 1);
    REQUIRE(parts.cyclotomic.size() == 1);
    CHECK(parts.cyclotomic[0] == CyclotomicHit{1, 1});  // x - 1
    CHECK(parts.reciprocal.empty());
    // (x^3+x^2+1)(x^3+x+1) = x^6+x^5+x^4+3x^3+x^2+x+1, negated
    CHECK(parts.nonreciprocal_part == IntPoly({-1, -1, -1, -3, -1, -1, -1}));
    CHECK(reconstruct(parts) == f);
}

TEST_CASE("three-part split separates reciprocal non-cyclotomic factors") {
    // x^2 - 3 is reciprocal? reverse(1,0,-3)=(-3,0,1) = -(3,0,-1): no.
    // x^2 - 3x + 1 is reciprocal (palindromic) and not cyclotomic.
    IntPoly recip({1, -3, 1});
    IntPoly f = IntPoly::constant(-3) * recip * recip * cyclotomic_poly(4);
    auto parts = three_part_split(f);
    CHECK(parts.unit == -1);  // nothing non-reciprocal to absorb the sign
    CHECK(parts.content == 3);
    REQUIRE(parts.cyclotomic.size() == 1);
    CHECK(parts.cyclotomic[0] == CyclotomicHit{4, 1});
    REQUIRE(parts.reciprocal.size() == 1);
    CHECK(parts.reciprocal[0].first == recip);
    CHECK(parts.reciprocal[0].second == 2);
    CHECK(parts.nonreciprocal_part == IntPoly::constant(1));
    CHECK(reconstruct(parts) == f);
}

TEST_CASE("three-part split keeps powers of x in the non-reciprocal part") {
    IntPoly f = IntPoly::monomial(1, 2) * IntPoly({1, 1});  // x^2 (x+1)
    auto parts = three_part_split(f);
    CHECK(parts.unit == 1);
    CHECK(parts.content == 1);
    CHECK(parts.content_primes.empty());
    REQUIRE(parts.cyclotomic.size() == 1);
    CHECK(parts.cyclotomic[0] == CyclotomicHit{2, 1});  // x + 1
    CHECK(parts.reciprocal.empty());
    CHECK(parts.nonreciprocal_part == IntPoly::monomial(1, 2));
    CHECK(reconstruct(parts) == f);
}

TEST_CASE("three-part split round-trips a mixed product") {
    IntPoly f = IntPoly::constant(12) * cyclotomic_poly(3) * cyclotomic_poly(8) *
                IntPoly({1, -3, 1}) * IntPoly({-1, 0, 0, 1, 1});
    auto parts = three_part_split(f);
    CHECK(reconstruct(parts) == f);
    CHECK(parts.content == 12);
    REQUIRE(parts.content_primes.size() == 2);
    CHECK(parts.content_primes[0] == std::pair<Int, unsigned>{2, 2});
    CHECK(parts.content_primes[1] == std::pair<Int, unsigned>{3, 1});
    REQUIRE(parts.cyclotomic.size() == 2);
    CHECK(parts.cyclotomic[0].index == 3);
    CHECK(parts.cyclotomic[1].index == 8);
}
