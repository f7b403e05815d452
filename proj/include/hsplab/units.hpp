// Quadratic number fields Q(sqrt(m)): ring-of-integers basis, exact ring
// arithmetic and norms, unit testing, Pell solutions, and the fundamental
// unit / regulator computed classically with exact integer continued fractions.
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hsplab::units {

using BigInt = mpz_class;

enum class OmegaBasis {
    SqrtM,        // omega = sqrt(m), for m == 2, 3 (mod 4)
    HalfOnePlus,  // omega = (1 + sqrt(m)) / 2, for m == 1 (mod 4)
};

/// Basis descriptor of the ring of integers of Q(sqrt(m)); rejects
/// non-squarefree m and m in {0, 1}.
OmegaBasis ring_basis(const BigInt& m);

/// a + b*omega with rational integers a, b over squarefree m.
struct QuadInt {
    BigInt a;
    BigInt b;
    BigInt m;
    OmegaBasis basis;

    QuadInt(BigInt a_, BigInt b_, BigInt m_);

    bool operator==(const QuadInt& o) const {
        return a == o.a && b == o.b && m == o.m && basis == o.basis;
    }
};

QuadInt add(const QuadInt& x, const QuadInt& y);
QuadInt mul(const QuadInt& x, const QuadInt& y);
QuadInt conjugate(const QuadInt& x);
QuadInt power(const QuadInt& x, std::uint64_t e);

/// Field norm x * conj(x); equals a^2 - m b^2 in the sqrt(m) basis.
BigInt norm(const QuadInt& x);

/// Unit test by |norm| == 1 (both signs; this makes (1+sqrt(5))/2 a unit).
bool is_unit(const QuadInt& x);

/// Coefficients of x in the (1, sqrt(m)) basis, as exact halves:
/// x = (p + q*sqrt(m)) / 2.
void half_coordinates(const QuadInt& x, BigInt& p, BigInt& q);

/// Smallest unit > 1 of the ring of integers, m squarefree > 1 and nonsquare.
/// Found by the exact continued fraction of sqrt(m), with the half-integer
/// norm-equation scan for m == 1 (mod 4).
QuadInt fundamental_unit(const BigInt& m);

/// log(fundamental unit), accurate to well below 1e-9.
double regulator(const BigInt& m);

/// Least positive solution of x^2 - m y^2 = 1 for nonsquare m > 1.
std::pair<BigInt, BigInt> pell_fundamental(const BigInt& m);

/// Rendering "a+b*w" with the basis spelled out, for the CLI.
std::string render(const QuadInt& x);

}  // namespace hsplab::units
