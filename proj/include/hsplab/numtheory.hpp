// Arbitrary-precision modular arithmetic, gcd machinery, Euler phi,
// multiplicative order and continued-fraction convergents. This is the
// classical substrate used by every pipeline and by the brute-force oracles.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hsplab::numtheory {

using BigInt = mpz_class;

/// A residue class: 0 <= value < modulus, modulus >= 2.
struct Residue {
    BigInt value;
    BigInt modulus;

    Residue(BigInt v, BigInt m) : modulus(std::move(m)) {
        if (modulus < 2) throw std::invalid_argument("Residue: modulus must be >= 2");
        mpz_mod(value.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    }

    bool operator==(const Residue& o) const { return value == o.value && modulus == o.modulus; }
};

/// Factorization as (prime, exponent) pairs with strictly increasing primes.
struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> factors;

    BigInt product() const {
        BigInt n = 1;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) n *= p;
        return n;
    }
};

struct EgcdResult {
    BigInt g;  // gcd(a, b) >= 0
    BigInt u;  // u*a + v*b == g
    BigInt v;
};

/// Extended Euclid. Rejects (0, 0).
EgcdResult egcd(const BigInt& a, const BigInt& b);

/// Modular inverse of a mod m; requires gcd(a, m) == 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// a^e mod modulus by square-and-multiply.
Residue mod_pow(const Residue& a, const BigInt& e);
BigInt mod_pow(const BigInt& base, const BigInt& e, const BigInt& modulus);

/// Deterministic trial division up to sqrt(n). Desk scale: n < 2^64.
Factorization factorize(const BigInt& n);

bool is_prime(const BigInt& n);

/// Euler totient via the factored product formula N * prod(1 - 1/p).
BigInt euler_phi(const BigInt& n);

/// Counting definition of phi; test oracle, n <= 10^6.
BigInt euler_phi_bruteforce(const BigInt& n);

/// Smallest r >= 1 with a^r == 1; requires gcd(a.value, a.modulus) == 1.
/// Computed by factoring phi(N) and descending through divisors.
BigInt multiplicative_order(const Residue& a);

/// Plain-iteration order; test oracle, modulus <= 10^6.
BigInt multiplicative_order_bruteforce(const Residue& a);

struct Fraction {
    BigInt num;
    BigInt den;  // > 0, gcd(num, den) == 1
};

/// Continued-fraction convergents p_k/q_k of numerator/denominator,
/// in lowest terms with strictly increasing denominators. Stops after
/// count_limit entries or when the expansion terminates.
std::vector<Fraction> convergents(const BigInt& numerator, const BigInt& denominator,
                                  std::size_t count_limit = 64);

}  // namespace hsplab::numtheory
