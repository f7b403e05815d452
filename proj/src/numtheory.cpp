#include "hsplab/numtheory.hpp"

#include <numeric>

namespace hsplab::numtheory {

EgcdResult egcd(const BigInt& a, const BigInt& b) {
    if (a == 0 && b == 0) throw std::invalid_argument("egcd: gcd(0, 0) is undefined");
    // Iterative extended Euclid on (old_r, r) with Bezout rows.
    BigInt old_r = a, r = b;
    BigInt old_u = 1, u = 0;
    BigInt old_v = 0, v = 1;
    while (r != 0) {
        BigInt q = old_r / r;  // truncated division keeps the identity exact
        BigInt tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_u - q * u; old_u = u; u = tmp;
        tmp = old_v - q * v; old_v = v; v = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_u = -old_u; old_v = -old_v; }
    return {old_r, old_u, old_v};
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    auto [g, u, v] = egcd(a, m);
    if (g != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    BigInt r;
    mpz_mod(r.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt mod_pow(const BigInt& base, const BigInt& e, const BigInt& modulus) {
    if (e < 0) throw std::invalid_argument("mod_pow: negative exponent");
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Residue mod_pow(const Residue& a, const BigInt& e) {
    return Residue(mod_pow(a.value, e, a.modulus), a.modulus);
}

namespace {
constexpr const char* kDeskScaleMsg = "desk-scale bound exceeded: n must be < 2^64";

void check_desk_scale(const BigInt& n) {
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) throw std::invalid_argument(kDeskScaleMsg);
}
}  // namespace

Factorization factorize(const BigInt& n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    check_desk_scale(n);
    Factorization f;
    BigInt m = n;
    auto strip = [&](const BigInt& p) {
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e > 0) f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    // 6k +/- 1 wheel.
    for (BigInt p = 5; p * p <= m; p += 4) {
        strip(p);
        p += 2;
        strip(p);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

BigInt euler_phi(const BigInt& n) {
    if (n < 2) throw std::invalid_argument("euler_phi: n must be >= 2");
    BigInt phi = n;
    for (const auto& [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
    return phi;
}

BigInt euler_phi_bruteforce(const BigInt& n) {
    if (n < 2 || n > 1000000) throw std::invalid_argument("euler_phi_bruteforce: need 2 <= n <= 10^6");
    unsigned long N = n.get_ui();
    unsigned long count = 0;
    for (unsigned long a = 1; a < N; ++a)
        if (std::gcd(a, N) == 1) ++count;
    return BigInt(count);
}

BigInt multiplicative_order(const Residue& a) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.value.get_mpz_t(), a.modulus.get_mpz_t());
    if (g != 1) throw std::invalid_argument("multiplicative_order: element not coprime to modulus");
    BigInt r = euler_phi(a.modulus);
    if (r == 1) return r;
    for (const auto& [p, e] : factorize(r).factors) {
        for (unsigned i = 0; i < e; ++i) {
            BigInt candidate = r / p;
            if (mod_pow(a.value, candidate, a.modulus) == 1)
                r = candidate;
            else
                break;
        }
    }
    return r;
}

BigInt multiplicative_order_bruteforce(const Residue& a) {
    if (a.modulus > 1000000) throw std::invalid_argument("multiplicative_order_bruteforce: modulus <= 10^6");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.value.get_mpz_t(), a.modulus.get_mpz_t());
    if (g != 1) throw std::invalid_argument("multiplicative_order_bruteforce: element not coprime to modulus");
    BigInt acc = a.value % a.modulus;
    BigInt r = 1;
    while (acc != 1) {
        acc = acc * a.value % a.modulus;
        ++r;
    }
    return r;
}

std::vector<Fraction> convergents(const BigInt& numerator, const BigInt& denominator,
                                  std::size_t count_limit) {
    if (denominator <= 0) throw std::invalid_argument("convergents: denominator must be positive");
    if (numerator < 0) throw std::invalid_argument("convergents: numerator must be nonnegative");
    std::vector<Fraction> out;
    BigInt n = numerator, d = denominator;
    BigInt h_prev = 1, h_prev2 = 0;  // p_{-1}=1, p_{-2}=0
    BigInt k_prev = 0, k_prev2 = 1;  // q_{-1}=0, q_{-2}=1
    while (d != 0 && out.size() < count_limit) {
        BigInt a = n / d;
        BigInt rem = n % d;
        BigInt h = a * h_prev + h_prev2;
        BigInt k = a * k_prev + k_prev2;
        out.push_back({h, k});
        h_prev2 = h_prev; h_prev = h;
        k_prev2 = k_prev; k_prev = k;
        n = d; d = rem;
    }
    return out;
}

}  // namespace hsplab::numtheory
