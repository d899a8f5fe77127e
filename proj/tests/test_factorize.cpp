#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "brute_oracle.hpp"
#include "fewnom/errors.hpp"
#include "fewnom/factorize.hpp"

using namespace fewnom;

namespace {

IntPoly reconstruct_z(const Factorization& fz) {
    IntPoly acc = IntPoly::constant(fz.unit * fz.content);
    for (const auto& [f, m] : fz.factors)
        for (unsigned i = 0; i < m; ++i) acc = acc * f;
    return acc;
}

} // namespace

TEST_CASE("squarefree decomposition satisfies the Yun contract") {
    IntPoly p = IntPoly({1, 1}) * IntPoly({1, 1}) * IntPoly({-2, 1});
    auto parts = squarefree_decompose(p);
    REQUIRE(parts.size() == 2);
    IntPoly prod = IntPoly::constant(1);
    for (const auto& [g, m] : parts) {
        for (unsigned i = 0; i < m; ++i) prod = prod * g;
        // squarefree: gcd with the derivative is constant
        CHECK(poly_gcd(g, derivative(g)).degree() == 0);
    }
    CHECK(prod == p);
    for (const auto& [g, m] : parts) {
        if (m == 1) CHECK(g == IntPoly({-2, 1}));
        if (m == 2) CHECK(g == IntPoly({1, 1}));
    }

    // sign rides on an odd-multiplicity part
    IntPoly q = -(IntPoly({1, 1}) * IntPoly({1, 1}) * IntPoly({-2, 1}));
    auto qparts = squarefree_decompose(q);
    IntPoly qprod = IntPoly::constant(1);
    for (const auto& [g, m] : qparts)
        for (unsigned i = 0; i < m; ++i) qprod = qprod * g;
    CHECK(qprod == q);

    CHECK_THROWS_AS(squarefree_decompose(IntPoly()), ZeroPolynomial);
}

TEST_CASE("modular factorization wrapper on x^4 + 1") {
    auto fac = factor_mod_p(IntPoly({1, 0, 0, 0, 1}), 5);
    REQUIRE(fac.size() == 2);
    std::sort(fac.begin(), fac.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    CHECK(fac[0].first == IntPoly({2, 0, 1}));
    CHECK(fac[0].second == 1);
    CHECK(fac[1].first == IntPoly({3, 0, 1}));
    CHECK(fac[1].second == 1);
}

TEST_CASE("known factorizations over Z") {
    SUBCASE("product of content, square, and an irreducible cubic") {
        IntPoly p = IntPoly::constant(6) * IntPoly({1, 1}) * IntPoly({1, 1}) *
                    IntPoly({1, 1, 0, 1});
        auto fz = factor_z(p);
        CHECK(fz.unit == 1);
        CHECK(fz.content == 6);
        REQUIRE(fz.content_primes.size() == 2);
        CHECK(fz.content_primes[0] == std::pair<Int, unsigned>{2, 1});
        CHECK(fz.content_primes[1] == std::pair<Int, unsigned>{3, 1});
        REQUIRE(fz.factors.size() == 2);
        CHECK(fz.factors[0] == std::pair<IntPoly, unsigned>{IntPoly({1, 1}), 2});
        CHECK(fz.factors[1] == std::pair<IntPoly, unsigned>{IntPoly({1, 1, 0, 1}), 1});
    }
    SUBCASE("negative unit") {
        auto fz = factor_z(IntPoly({1, -1}));  // 1 - x = -(x - 1)
        CHECK(fz.unit == -1);
        CHECK(fz.content == 1);
        REQUIRE(fz.factors.size() == 1);
        CHECK(fz.factors[0] == std::pair<IntPoly, unsigned>{IntPoly({-1, 1}), 1});
    }
    SUBCASE("degree-4 with all modular splits misleading") {
        // minimal polynomial of sqrt(2) + sqrt(3): irreducible over Z but
        // reducible modulo every prime, so recombination must do real work
        IntPoly sd({1, 0, -10, 0, 1});
        auto fz = factor_z(sd);
        CHECK(fz.unit == 1);
        CHECK(fz.content == 1);
        REQUIRE(fz.factors.size() == 1);
        CHECK(fz.factors[0] == std::pair<IntPoly, unsigned>{sd, 1});
    }
    SUBCASE("biquadratic that does factor") {
        IntPoly p = IntPoly({1, 0, 1}) * IntPoly({-2, 0, 1});
        auto fz = factor_z(p);
        REQUIRE(fz.factors.size() == 2);
        CHECK(fz.factors[0] == std::pair<IntPoly, unsigned>{IntPoly({-2, 0, 1}), 1});
        CHECK(fz.factors[1] == std::pair<IntPoly, unsigned>{IntPoly({1, 0, 1}), 1});
    }
    SUBCASE("constant and zero inputs") {
        auto fz = factor_z(IntPoly::constant(-12));
        CHECK(fz.unit == -1);
        CHECK(fz.content == 12);
        CHECK(fz.factors.empty());
        CHECK_THROWS_AS(factor_z(IntPoly()), ZeroPolynomial);
    }
}

TEST_CASE("subset budget aborts honestly instead of guessing") {
    // minimal polynomial of sqrt(2) + sqrt(3) + sqrt(5): splits into at least
    // four modular factors at every prime, so a subset budget of 1 cannot
    // finish; the default budget factors it fine.
    IntPoly sd8({576, 0, -960, 0, 352, 0, -40, 0, 1});
    FactorOptions tiny;
    tiny.max_subset_size = 1;
    CHECK_THROWS_AS(factor_z(sd8, tiny), RecombinationOverflow);
    auto fz = factor_z(sd8);
    REQUIRE(fz.factors.size() == 1);
    CHECK(fz.factors[0] == std::pair<IntPoly, unsigned>{sd8, 1});

    // FEWNOM_RECOMB_MAX is read once, on first use; with no override the
    // default budget is 6 (the environment path is exercised end to end
    // through the command-line tool)
    CHECK(default_factor_options().max_subset_size == 6);
}

TEST_CASE("irreducibility verdicts and their certificates") {
    auto r1 = is_irreducible_z(IntPoly({1, 0, 1}));
    CHECK(r1.status == IrreducibilityStatus::irreducible);
    CHECK(r1.certificate == IrreducibilityCertificate::irreducible_mod_p);
    CHECK(static_cast<bool>(r1));

    auto r2 = is_irreducible_z(IntPoly({-1, 0, 1}));
    CHECK(r2.status == IrreducibilityStatus::reducible);
    CHECK_FALSE(static_cast<bool>(r2));

    auto r3 = is_irreducible_z(IntPoly({3, 1}));
    CHECK(r3.status == IrreducibilityStatus::irreducible);
    CHECK(r3.certificate == IrreducibilityCertificate::linear);

    // square: caught without any modular work
    auto r4 = is_irreducible_z(IntPoly({1, 1}) * IntPoly({1, 1}));
    CHECK(r4.status == IrreducibilityStatus::reducible);
    CHECK(r4.certificate == IrreducibilityCertificate::squarefree_defect);

    // reducible modulo every prime: fast paths must answer `unknown`,
    // the full pipeline must answer `irreducible`
    IntPoly sd({1, 0, -10, 0, 1});
    IrreducibleOptions fast;
    fast.fast_only = true;
    auto r5 = is_irreducible_z(sd, fast);
    CHECK(r5.status == IrreducibilityStatus::unknown);
    CHECK(r5.certificate == IrreducibilityCertificate::none);
    auto r6 = is_irreducible_z(sd);
    CHECK(r6.status == IrreducibilityStatus::irreducible);
    CHECK(r6.certificate == IrreducibilityCertificate::factorization);
}

TEST_CASE("gcd over Z via shared factors") {
    IntPoly two_x_plus_2({2, 2});
    IntPoly a = IntPoly::constant(-5) * two_x_plus_2 * two_x_plus_2 *
                IntPoly({-3, 0, 1}) * IntPoly({1, 1, 0, 1});
    IntPoly b = IntPoly::constant(-10) * two_x_plus_2 * two_x_plus_2 * two_x_plus_2 *
                IntPoly({-3, 0, 1});
    IntPoly g = gcd_z(a, b);
    IntPoly expected = IntPoly::constant(20) * IntPoly({1, 1}) * IntPoly({1, 1}) *
                       IntPoly({-3, 0, 1});
    CHECK(g == expected);
    CHECK(gcd_z(IntPoly({0, 2}), IntPoly({0, 0, 4})) == IntPoly({0, 2}));
    CHECK_THROWS_AS(gcd_z(IntPoly(), IntPoly({1, 1})), ZeroPolynomial);
}

TEST_CASE("randomized cross-check against the brute-force oracle") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int checked = 0;
    while (checked < 2000) {
        std::vector<Int> cs(5);
        bool all_zero = true;
        for (auto& c : cs) {
            c = coeff(rng);
            if (c != 0) all_zero = false;
        }
        if (all_zero) continue;
        IntPoly p(cs);
        ++checked;
        auto expected = oracle::brute_factor(p);
        auto got = factor_z(p);
        REQUIRE(got.unit == expected.unit);
        REQUIRE(got.content == expected.content);
        REQUIRE(got.content_primes == expected.content_primes);
        REQUIRE(got.factors == expected.factors);
        REQUIRE(reconstruct_z(got) == p);
    }
    CHECK(checked == 2000);
}
