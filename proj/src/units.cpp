#include "hsplab/units.hpp"

#include <cmath>
#include <stdexcept>

#include "hsplab/numtheory.hpp"

namespace hsplab::units {

namespace {

bool is_squarefree(const BigInt& m) {
    BigInt n = abs(m);
    if (n <= 1) return n == 1;
    for (const auto& [p, e] : numtheory::factorize(n).factors)
        if (e > 1) return false;
    return true;
}

int mod4(const BigInt& m) {
    BigInt r;
    mpz_mod_ui(r.get_mpz_t(), m.get_mpz_t(), 4);
    return int(r.get_ui());
}

void check_same_field(const QuadInt& x, const QuadInt& y, const char* who) {
    if (x.m != y.m) throw std::invalid_argument(std::string(who) + ": field mismatch");
}

bool perfect_square(const BigInt& n, BigInt& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

}  // namespace

OmegaBasis ring_basis(const BigInt& m) {
    if (m == 0 || m == 1) throw std::invalid_argument("ring_basis: m must differ from 0 and 1");
    if (!is_squarefree(m)) throw std::invalid_argument("ring_basis: m must be squarefree");
    return mod4(m) == 1 ? OmegaBasis::HalfOnePlus : OmegaBasis::SqrtM;
}

QuadInt::QuadInt(BigInt a_, BigInt b_, BigInt m_)
    : a(std::move(a_)), b(std::move(b_)), m(std::move(m_)), basis(ring_basis(m)) {}

QuadInt add(const QuadInt& x, const QuadInt& y) {
    check_same_field(x, y, "add");
    return QuadInt(x.a + y.a, x.b + y.b, x.m);
}

QuadInt mul(const QuadInt& x, const QuadInt& y) {
    check_same_field(x, y, "mul");
    const BigInt cross = x.a * y.b + x.b * y.a;
    const BigInt bd = x.b * y.b;
    if (x.basis == OmegaBasis::SqrtM) {
        // omega^2 = m
        return QuadInt(x.a * y.a + bd * x.m, cross, x.m);
    }
    // omega^2 = (m-1)/4 + omega
    const BigInt t0 = (x.m - 1) / 4;
    return QuadInt(x.a * y.a + bd * t0, cross + bd, x.m);
}

QuadInt conjugate(const QuadInt& x) {
    if (x.basis == OmegaBasis::SqrtM) return QuadInt(x.a, -x.b, x.m);
    // conj(omega) = 1 - omega
    return QuadInt(x.a + x.b, -x.b, x.m);
}

QuadInt power(const QuadInt& x, std::uint64_t e) {
    QuadInt acc(1, 0, x.m), base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

BigInt norm(const QuadInt& x) {
    QuadInt n = mul(x, conjugate(x));
    if (n.b != 0) throw std::logic_error("norm: conjugate product has an omega part");
    return n.a;
}

bool is_unit(const QuadInt& x) { return abs(norm(x)) == 1; }

void half_coordinates(const QuadInt& x, BigInt& p, BigInt& q) {
    if (x.basis == OmegaBasis::SqrtM) {
        p = 2 * x.a;
        q = 2 * x.b;
    } else {
        p = 2 * x.a + x.b;
        q = x.b;
    }
}

namespace {

// First continued-fraction convergent h/k of sqrt(m) with |h^2 - m k^2| = 1;
// this is the fundamental unit of Z[sqrt(m)].
void cf_unit(const BigInt& m, BigInt& h_out, BigInt& k_out) {
    const BigInt a0 = sqrt(m);
    if (a0 * a0 == m) throw std::invalid_argument("continued fraction: m is a perfect square");
    BigInt p = 0, q = 1, a = a0;
    BigInt h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    for (std::size_t it = 0; it < 1000000; ++it) {
        BigInt h = a * h_prev + h_prev2;
        BigInt k = a * k_prev + k_prev2;
        if (abs(h * h - m * k * k) == 1) { h_out = h; k_out = k; return; }
        h_prev2 = h_prev; h_prev = h;
        k_prev2 = k_prev; k_prev = k;
        // Next state of the quadratic irrational (p + sqrt(m)) / q.
        p = a * q - p;
        q = (m - p * p) / q;
        a = (p + a0) / q;
    }
    throw std::runtime_error("continued fraction: period bound exceeded");
}

}  // namespace

QuadInt fundamental_unit(const BigInt& m) {
    if (m <= 1) throw std::invalid_argument("fundamental_unit: m must be > 1");
    const OmegaBasis basis = ring_basis(m);
    BigInt h, k;
    cf_unit(m, h, k);
    if (basis == OmegaBasis::SqrtM) return QuadInt(h, k, m);

    // m == 1 (mod 4): the ring is larger, so the fundamental unit may be a
    // half-integer (s + t sqrt(m)) / 2 with s^2 - m t^2 = +/-4. Scan t upward;
    // the Z[sqrt(m)] unit (2h, 2k) bounds the search.
    for (BigInt t = 1; t <= 2 * k; ++t) {
        BigInt s;
        bool found = perfect_square(m * t * t - 4, s);  // smaller s wins for the same t
        if (!found) found = perfect_square(m * t * t + 4, s);
        if (found) return QuadInt((s - t) / 2, t, m);  // (s + t sqrt(m))/2 = a + t*omega
    }
    return QuadInt(h - k, 2 * k, m);  // unreachable: t = 2k solves s^2 - m t^2 = +/-4
}

double regulator(const BigInt& m) {
    QuadInt eps = fundamental_unit(m);
    BigInt p, q;
    half_coordinates(eps, p, q);
    const double val = (mpz_get_d(p.get_mpz_t()) + mpz_get_d(q.get_mpz_t()) * std::sqrt(mpz_get_d(m.get_mpz_t()))) / 2.0;
    return std::log(val);
}

std::pair<BigInt, BigInt> pell_fundamental(const BigInt& m) {
    if (m <= 1) throw std::invalid_argument("pell_fundamental: m must be > 1");
    BigInt r = sqrt(m);
    if (r * r == m) throw std::invalid_argument("pell_fundamental: m must not be a perfect square");
    BigInt h, k;
    cf_unit(m, h, k);
    if (h * h - m * k * k == 1) return {h, k};
    // Norm -1 unit: square it for the least +1 solution.
    return {h * h + m * k * k, 2 * h * k};
}

std::string render(const QuadInt& x) {
    const std::string w = x.basis == OmegaBasis::SqrtM
                              ? "sqrt(" + x.m.get_str() + ")"
                              : "(1+sqrt(" + x.m.get_str() + "))/2";
    if (x.b == 0) return x.a.get_str();
    std::string out;
    if (x.a != 0) out += x.a.get_str();
    if (x.b > 0 && !out.empty()) out += "+";
    if (x.b == -1)
        out += "-";
    else if (x.b != 1)
        out += x.b.get_str() + "*";
    out += w;
    return out;
}

}  // namespace hsplab::units
