#include "doctest.h"

#include "fewnom/arith.hpp"
#include "fewnom/errors.hpp"

using namespace fewnom;

TEST_CASE("integer factorization with multiplicities") {
    auto f = factor_integer(Int(1200));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Int, unsigned>{Int(2), 4u});
    CHECK(f[1] == std::pair<Int, unsigned>{Int(3), 1u});
    CHECK(f[2] == std::pair<Int, unsigned>{Int(5), 2u});

    CHECK(factor_integer(Int(1)).empty());
    auto prime = factor_integer(Int("2305843009213693951"));  // 2^61 - 1
    REQUIRE(prime.size() == 1);
    CHECK(prime[0].second == 1);

    // A product of two balanced 10-digit primes exercises the rho stage.
    Int p1("2147483647"), p2("2147483629");
    auto semi = factor_integer(p1 * p2);
    REQUIRE(semi.size() == 2);
    CHECK(semi[0].first * semi[1].first == p1 * p2);
}

TEST_CASE("euler phi and divisors") {
    unsigned long expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (unsigned long n = 1; n <= 12; ++n)
        CHECK(euler_phi(n) == expected[n - 1]);

    auto d = divisors(36);
    std::vector<unsigned long> want{1, 2, 3, 4, 6, 9, 12, 18, 36};
    CHECK(d == want);
}

TEST_CASE("perfect power detection") {
    Int root;
    CHECK(perfect_power_root(Int(64), 3, root));
    CHECK(root == 4);
    CHECK(perfect_power_root(Int(64), 2, root));
    CHECK(root == 8);
    CHECK_FALSE(perfect_power_root(Int(63), 2, root));
    CHECK(perfect_power_root(Int(-27), 3, root));
    CHECK(root == -3);
    CHECK_FALSE(perfect_power_root(Int(-4), 2, root));
}

TEST_CASE("gaussian integers") {
    GaussInt a(Int(2), Int(3)), b(Int(1), Int(-1));
    CHECK((a * b) == GaussInt(Int(5), Int(1)));
    CHECK(a.norm() == 13);
    CHECK((a - a).is_zero());
}

TEST_CASE("gaussian rationals invert") {
    GaussRat g(Rat(2), Rat(3, 2));
    GaussRat one = g * g.inverse();
    CHECK(one == GaussRat(Rat(1), Rat(0)));
    CHECK_THROWS_AS(GaussRat(Rat(0), Rat(0)).inverse(), DivisionByZero);
}

TEST_CASE("integer kernel of small systems") {
    // x + y + z = 0, x - z = 0  ->  kernel spanned by (1, -2, 1).
    std::vector<std::vector<Int>> rows{{Int(1), Int(1), Int(1)},
                                       {Int(1), Int(0), Int(-1)}};
    auto basis = integer_kernel(rows);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Int>{Int(1), Int(-2), Int(1)});

    // Full-rank system: empty kernel.
    std::vector<std::vector<Int>> id{{Int(1), Int(0)}, {Int(0), Int(1)}};
    CHECK(integer_kernel(id).empty());

    // Zero row contributes nothing; denominators are cleared to a primitive
    // integer vector with positive first non-zero entry.
    std::vector<std::vector<Int>> frac{{Int(2), Int(-4)}, {Int(0), Int(0)}};
    auto b2 = integer_kernel(frac);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == std::vector<Int>{Int(2), Int(1)});

    CHECK_THROWS_AS(integer_kernel({}), PreconditionViolation);
    std::vector<std::vector<Int>> ragged{{Int(1)}, {Int(1), Int(2)}};
    CHECK_THROWS_AS(integer_kernel(ragged), PreconditionViolation);
}
