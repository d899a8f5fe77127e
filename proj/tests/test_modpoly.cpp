#include "doctest.h"

#include <algorithm>
#include <random>

#include "fewnom/modpoly.hpp"

using namespace fewnom;
using namespace fewnom::fp;

namespace {

FpPoly ip(std::initializer_list<std::uint64_t> c) { return FpPoly(c); }

} // namespace

TEST_CASE("primality for word-sized integers") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(5));
    CHECK(is_prime_u64(101));
    CHECK(is_prime_u64((1ull << 31) - 1));  // Mersenne prime
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));      // Carmichael number
    CHECK_FALSE(is_prime_u64(1ull << 20));
    CHECK_FALSE(is_prime_u64(1000003ull * 1000033ull));
}

TEST_CASE("scalar field ops and inverses") {
    const std::uint64_t p = 1000003;
    CHECK(add(p - 1, 5, p) == 4);
    CHECK(sub(3, 7, p) == p - 4);
    CHECK(mul(p - 1, p - 1, p) == 1);
    CHECK(pow(2, 100, p) == [&] {
        std::uint64_t r = 1;
        for (int i = 0; i < 100; ++i) r = mul(r, 2, p);
        return r;
    }());
    for (std::uint64_t a : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(12345), p - 1}) {
        CHECK(mul(a, inv(a, p), p) == 1);
    }
    CHECK(reduce_int(Int(-1), 7) == 6);
    Int big("123456789123456789123456789");
    Int big_mod = big % 97;
    CHECK(reduce_int(big, 97) == big_mod.get_ui());
}

TEST_CASE("conversion to and from integer polynomials") {
    IntPoly q({-1, 0, 5, 12});
    FpPoly a = from_int_poly(q, 7);
    CHECK(a == ip({6, 0, 5, 5}));
    CHECK(to_int_poly(a) == IntPoly({6, 0, 5, 5}));
    // reduction can drop the degree
    CHECK(degree(from_int_poly(IntPoly({1, 7}), 7)) == 0);
    CHECK(is_zero(from_int_poly(IntPoly({7, 14}), 7)));
}

TEST_CASE("ring arithmetic and division mod p") {
    const std::uint64_t p = 13;
    FpPoly a = ip({1, 2, 3});
    FpPoly b = ip({4, 5});
    CHECK(add(a, b, p) == ip({5, 7, 3}));
    CHECK(sub(b, a, p) == ip({3, 3, 10}));
    // (1+2x+3x^2)(4+5x) = 4 + 13x + 22x^2 + 15x^3 = 4 + 0x + 9x^2 + 2x^3
    CHECK(mul(a, b, p) == ip({4, 0, 9, 2}));
    auto [quo, rm] = divrem(mul(a, b, p), b, p);
    CHECK(quo == a);
    CHECK(is_zero(rm));
    FpPoly r = rem(ip({1, 0, 0, 0, 1}), ip({1, 1}), p);  // x^4+1 at x=-1 -> 2
    CHECK(r == ip({2}));
    CHECK(make_monic(ip({2, 4, 6}), p) == ip({9, 5, 1}));  // divide by 6, inv(6)=11
    CHECK(derivative(ip({7, 1, 0, 5}), p) == ip({1, 0, 2}));
}

TEST_CASE("gcd and extended gcd produce Bezout certificates") {
    const std::uint64_t p = 101;
    // (x+1)^2 (x+2) and (x+1)(x+3) share exactly x+1
    FpPoly f = mul(mul(ip({1, 1}), ip({1, 1}), p), ip({2, 1}), p);
    FpPoly g = mul(ip({1, 1}), ip({3, 1}), p);
    CHECK(gcd(f, g, p) == ip({1, 1}));

    FpPoly s, t;
    FpPoly d = ext_gcd(f, g, p, s, t);
    CHECK(d == ip({1, 1}));
    FpPoly lhs = add(mul(s, f, p), mul(t, g, p), p);
    CHECK(lhs == d);

    // coprime pair: certificate for 1
    FpPoly u, v;
    FpPoly one = ext_gcd(ip({1, 0, 1}), ip({2, 1}), p, u, v);
    CHECK(one == ip({1}));
    CHECK(add(mul(u, ip({1, 0, 1}), p), mul(v, ip({2, 1}), p), p) == ip({1}));
}

TEST_CASE("modular exponentiation of polynomials") {
    const std::uint64_t p = 5;
    FpPoly f = ip({1, 0, 0, 0, 1});  // x^4 + 1
    // x^p mod f via powmod must match repeated mulmod
    FpPoly x = ip({0, 1});
    FpPoly by_pow = powmod(x, Int(13), f, p);
    FpPoly by_mul = ip({1});
    for (int i = 0; i < 13; ++i) by_mul = mulmod(by_mul, x, f, p);
    CHECK(by_pow == by_mul);
    CHECK(powmod(x, Int(0), f, p) == ip({1}));
}

TEST_CASE("distinct-degree splitting separates factor degrees") {
    const std::uint64_t p = 5;
    // x^4 + 1 = (x^2 + 2)(x^2 + 3) mod 5: all factors of degree 2
    auto blocks = distinct_degree_split(ip({1, 0, 0, 0, 1}), p);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].degree == 2);
    CHECK(degree(blocks[0].product) == 4);

    // (x)(x+1)(x^2+2): degrees 1,1,2
    FpPoly f = mul(mul(ip({0, 1}), ip({1, 1}), p), ip({2, 0, 1}), p);
    auto blk = distinct_degree_split(f, p);
    REQUIRE(blk.size() == 2);
    CHECK(blk[0].degree == 1);
    CHECK(degree(blk[0].product) == 2);
    CHECK(blk[1].degree == 2);
    CHECK(degree(blk[1].product) == 2);
}

TEST_CASE("equal-degree splitting recovers the irreducibles") {
    const std::uint64_t p = 5;
    std::mt19937_64 rng(12345);
    FpPoly block = ip({1, 0, 0, 0, 1});  // product of two quadratics
    auto parts = equal_degree_split(block, 2, p, rng);
    REQUIRE(parts.size() == 2);
    std::sort(parts.begin(), parts.end());
    CHECK(parts[0] == ip({2, 0, 1}));
    CHECK(parts[1] == ip({3, 0, 1}));
    CHECK(mul(parts[0], parts[1], p) == block);
}

TEST_CASE("full factorization handles multiplicities and inseparability") {
    const std::uint64_t p = 5;
    SUBCASE("x^4 + 1 mod 5") {
        auto fac = factor(ip({1, 0, 0, 0, 1}), p);
        REQUIRE(fac.size() == 2);
        std::sort(fac.begin(), fac.end());
        CHECK(fac[0].first == ip({2, 0, 1}));
        CHECK(fac[0].second == 1);
        CHECK(fac[1].first == ip({3, 0, 1}));
        CHECK(fac[1].second == 1);
    }
    SUBCASE("repeated factors") {
        FpPoly f = ip({1});
        for (int i = 0; i < 3; ++i) f = mul(f, ip({1, 1}), p);
        f = mul(f, ip({2, 0, 1}), p);
        auto fac = factor(f, p);
        REQUIRE(fac.size() == 2);
        std::sort(fac.begin(), fac.end());
        CHECK(fac[0].first == ip({1, 1}));
        CHECK(fac[0].second == 3);
        CHECK(fac[1].first == ip({2, 0, 1}));
        CHECK(fac[1].second == 1);
    }
    SUBCASE("pure p-th power: x^5 + 1 = (x+1)^5 mod 5") {
        auto fac = factor(ip({1, 0, 0, 0, 0, 1}), p);
        REQUIRE(fac.size() == 1);
        CHECK(fac[0].first == ip({1, 1}));
        CHECK(fac[0].second == 5);
    }
    SUBCASE("non-monic input is normalized") {
        FpPoly f = ip({2, 2});  // 2(x+1)
        auto fac = factor(f, p);
        REQUIRE(fac.size() == 1);
        CHECK(fac[0].first == ip({1, 1}));
    }
}

TEST_CASE("degree pattern matches the factor degrees of the squarefree part") {
    const std::uint64_t p = 5;
    auto pat = irreducible_degree_pattern(ip({1, 0, 0, 0, 1}), p);
    CHECK(pat == std::vector<unsigned>({2, 2}));
    // (x)(x+1)^2(x^2+2): squarefree part degrees 1,1,2
    FpPoly f = mul(mul(mul(ip({0, 1}), ip({1, 1}), p), ip({1, 1}), p), ip({2, 0, 1}), p);
    auto pat2 = irreducible_degree_pattern(f, p);
    CHECK(pat2 == std::vector<unsigned>({1, 1, 2}));
    // irreducible quartic over F_2: x^4 + x + 1
    auto pat3 = irreducible_degree_pattern(ip({1, 1, 0, 0, 1}), 2);
    CHECK(pat3 == std::vector<unsigned>({4}));
}
