#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hsplab/numtheory.hpp"
#include "hsplab/rng.hpp"

using namespace hsplab::numtheory;
using hsplab::Rng;

TEST_CASE("egcd basics and Bezout identity") {
    auto r = egcd(2, 13);
    CHECK(r.g == 1);
    CHECK(r.u * 2 + r.v * 13 == 1);
    // 2 * 7 == 1 (mod 13), so the inverse of 2 is 7.
    CHECK(mod_inverse(2, 13) == 7);

    CHECK(egcd(21, 21).g == 21);
    CHECK(egcd(9, 6).g == 3);
    CHECK_THROWS_AS(egcd(0, 0), std::invalid_argument);

    // Bezout holds exactly on random pairs up to 2^256.
    Rng rng(20240811);
    for (int i = 0; i < 10000; ++i) {
        BigInt a = 0, b = 0;
        for (int limb = 0; limb < 4; ++limb) {
            a = (a << 64) + BigInt(rng.next_u64());
            b = (b << 64) + BigInt(rng.next_u64());
        }
        if (a == 0 && b == 0) continue;
        auto e = egcd(a, b);
        CHECK(e.u * a + e.v * b == e.g);
        BigInt g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        CHECK(e.g == g);
    }
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(Residue(4, 9), 2).value == 7);  // 7 == 4^2 (mod 9)
    CHECK(mod_pow(Residue(5, 21), 0).value == 1);
    CHECK(mod_pow(Residue(2, 21), 6).value == 1);
    CHECK(mod_pow(BigInt(341), BigInt(1), BigInt(10)) == 1);
}

TEST_CASE("factorize and primality") {
    auto f = factorize(360);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::make_pair(BigInt(2), 3u));
    CHECK(f.factors[1] == std::make_pair(BigInt(3), 2u));
    CHECK(f.factors[2] == std::make_pair(BigInt(5), 1u));
    CHECK(f.product() == 360);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
}

TEST_CASE("euler_phi against both definitions") {
    CHECK(euler_phi(9) == 6);    // 9 * (1 - 1/3)
    CHECK(euler_phi(21) == 12);  // the twelve units mod 21
    CHECK(euler_phi(97) == 96);  // p - 1 for prime p
    CHECK_THROWS_AS(euler_phi(1), std::invalid_argument);

    for (unsigned long n = 2; n <= 1000; ++n) CHECK(euler_phi(n) == euler_phi_bruteforce(n));
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(Residue(4, 9)) == 3);  // the period of 4 in (Z/9Z)^x
    CHECK(multiplicative_order(Residue(1, 17)) == 1);
    CHECK(multiplicative_order(Residue(8, 21)) == 2);
    CHECK_THROWS_AS(multiplicative_order(Residue(6, 21)), std::invalid_argument);

    // Order divides phi(N), and the divisor-descent result matches plain iteration.
    for (unsigned long n = 2; n <= 200; ++n) {
        BigInt phi = euler_phi(n);
        for (unsigned long a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            BigInt r = multiplicative_order(Residue(a, n));
            CHECK(phi % r == 0);
            CHECK(r == multiplicative_order_bruteforce(Residue(a, n)));
        }
    }
}

TEST_CASE("convergents") {
    auto c = convergents(1, 3);
    REQUIRE(c.size() == 2);
    CHECK(c[0].num == 0);
    CHECK(c[0].den == 1);
    CHECK(c[1].num == 1);
    CHECK(c[1].den == 3);

    auto pi = convergents(355, 113);
    CHECK(pi.back().num == 355);
    CHECK(pi.back().den == 113);
    // Denominators strictly increase after the first entry, fractions in lowest terms.
    for (std::size_t i = 0; i < pi.size(); ++i) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), pi[i].num.get_mpz_t(), pi[i].den.get_mpz_t());
        CHECK(g == 1);
        if (i > 0) CHECK(pi[i].den >= pi[i - 1].den);
    }

    // 85/256 has 1/3 among its convergents: |85/256 - 1/3| < 1/(2*3^2).
    auto cf = convergents(85, 256);
    bool has_third = false;
    for (const auto& f : cf) has_third |= (f.num == 1 && f.den == 3);
    CHECK(has_third);
    CHECK(mpq_class(85, 256) - mpq_class(1, 3) < mpq_class(1, 18));
    CHECK(mpq_class(1, 3) - mpq_class(85, 256) < mpq_class(1, 18));

    CHECK_THROWS_AS(convergents(1, 0), std::invalid_argument);
}
