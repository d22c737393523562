#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monocubic/integers.hpp"

#include <random>

using namespace monocubic;
using namespace monocubic::nt;

TEST_CASE("kronecker symbol values") {
    CHECK(kronecker(1, 5) == 1);
    CHECK(kronecker(-119, 7) == 0);
    // -119 = 1 mod 5 and 1 is a square mod 5
    CHECK(kronecker(-119, 5) == 1);
    CHECK_THROWS_AS(kronecker(3, 0), std::invalid_argument);
}

TEST_CASE("kronecker is completely multiplicative in m") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        integer d = integer(static_cast<long>(rng() % 4001)) - 2000;
        integer m1 = integer(static_cast<long>(rng() % 400)) - 200;
        integer m2 = integer(static_cast<long>(rng() % 400)) - 200;
        if (m1 == 0 || m2 == 0) continue;
        CHECK(kronecker(d, m1 * m2) == kronecker(d, m1) * kronecker(d, m2));
    }
}

TEST_CASE("quadratic residue cross-check mod odd primes") {
    for (long p : {5L, 7L, 11L, 13L, 23L}) {
        std::vector<bool> qr(static_cast<std::size_t>(p), false);
        for (long x = 1; x < p; ++x) qr[static_cast<std::size_t>((x * x) % p)] = true;
        for (long a = 0; a < p; ++a) {
            int expect = (a % p == 0) ? 0 : (qr[static_cast<std::size_t>(a)] ? 1 : -1);
            CHECK(kronecker(a, p) == expect);
        }
    }
}

TEST_CASE("fundamental discriminants") {
    CHECK(is_fundamental_discriminant(-23));
    CHECK_FALSE(is_fundamental_discriminant(-12));  // -12 = 4*(-3), -3 = 1 mod 4
    CHECK(is_fundamental_discriminant(8));
    CHECK(is_fundamental_discriminant(1));
    CHECK(is_fundamental_discriminant(-4));
    CHECK(is_fundamental_discriminant(5));
    CHECK_FALSE(is_fundamental_discriminant(0));
    CHECK_FALSE(is_fundamental_discriminant(-27));
    CHECK_FALSE(is_fundamental_discriminant(25));
    CHECK(is_fundamental_discriminant(-119));
    CHECK_FALSE(is_fundamental_discriminant(4));  // 4 = 4*1, 1 = 1 mod 4
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK(is_prime(integer("9223372036854775783")));  // largest prime < 2^63
    CHECK_FALSE(is_prime(integer("9223372036854775781")));
    // strong pseudoprime to several small bases
    CHECK_FALSE(is_prime(integer("3215031751")));
    auto ps = primes_up_to(1000);
    CHECK(ps.size() == 168);
    for (auto p : ps) CHECK(is_prime_u64(p));
}

TEST_CASE("factor and squarefree") {
    auto f = factor(integer(-2012));
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == 2);
    CHECK(f[0].second == 2);
    CHECK(f[1].first == 503);
    CHECK(f[1].second == 1);

    // two large-ish primes force the rho path
    integer n = integer(1000003) * integer(1000033);
    auto g = factor(n);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 1000003);
    CHECK(g[1].first == 1000033);

    CHECK(is_squarefree(-23));
    CHECK_FALSE(is_squarefree(-12));
    CHECK_FALSE(is_squarefree(integer(1000003) * integer(1000003)));
    CHECK(is_squarefree(1));
    CHECK_FALSE(is_squarefree(0));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        integer n2 = integer(static_cast<unsigned long>(rng() % 1000000 + 2));
        integer prod = 1;
        for (auto& [p, e] : factor(n2))
            for (int j = 0; j < e; ++j) prod *= p;
        CHECK(prod == n2);
    }
}

TEST_CASE("roots and cubes") {
    CHECK(isqrt(integer(24)) == 4);
    CHECK(isqrt(integer(25)) == 5);
    CHECK(isqrt64(99) == 9);
    integer r;
    CHECK(is_cube(integer(-27), &r));
    CHECK(r == -3);
    CHECK_FALSE(is_cube(integer(26)));
    CHECK(is_cube(integer(0), &r));
    CHECK(r == 0);
    CHECK(valuation(integer(972), 3) == 5);
    CHECK(valuation(integer(972), 2) == 2);
}

TEST_CASE("spf sieve factors agree") {
    spf_sieve sieve(10000);
    for (std::uint32_t n = 2; n <= 10000; n += 37) {
        std::uint32_t prod = 1;
        for (auto& [p, e] : sieve.factor(n))
            for (int i = 0; i < e; ++i) prod *= p;
        CHECK(prod == n);
    }
}
