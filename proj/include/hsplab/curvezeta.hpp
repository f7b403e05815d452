// Counting projective zeros N_r of a plane curve over extension fields, and
// exact rational arithmetic on the zeta power series Z_C(T) = exp(sum N_r T^r / r).
#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "hsplab/ffield.hpp"

namespace hsplab::curvezeta {

/// Homogeneous polynomial in X, Y, Z over the base field, as monomials
/// (i, j, k) with i + j + k = degree.
struct Monomial {
    std::uint32_t dx = 0, dy = 0, dz = 0;
    ffield::FieldElement coeff;
};

struct ProjectiveCurve {
    ffield::FieldSpec base;
    std::uint32_t degree = 0;
    std::vector<Monomial> terms;  // nonzero coefficients only

    /// Rejects the zero polynomial and inhomogeneous term lists.
    ProjectiveCurve(ffield::FieldSpec base_field, std::uint32_t d, std::vector<Monomial> t);
};

/// Homogenize affine f(x, y) = y^2 - x^3 - alpha*x - beta (a Weierstrass
/// curve) to Y^2 Z - X^3 - alpha X Z^2 - beta Z^3.
ProjectiveCurve homogenize_weierstrass(const ffield::FieldSpec& base,
                                       const ffield::FieldElement& alpha,
                                       const ffield::FieldElement& beta);

/// Exact number of zeros among the q^2 + q + 1 projective representatives of
/// P^2(F_{q^r}); requires q^r <= 10^6. Coefficients are embedded into
/// F_{q^r} = F_{p^(n*r)}.
std::uint64_t count_points(const ProjectiveCurve& c, std::uint32_t r);

/// Truncated zeta series with exact rational coefficients; z[0] = 1.
struct ZetaSeries {
    std::vector<mpq_class> coeff;  // coeff[i] multiplies T^i, size R+1

    std::size_t truncation_order() const { return coeff.size() - 1; }
};

/// exp(sum_{r=1}^{R} counts[r-1] T^r / r) as an exact truncated series.
ZetaSeries zeta_from_counts(const std::vector<std::uint64_t>& counts);

/// Inverse: recover N_1..N_R from the series (exact log derivative).
std::vector<mpq_class> counts_from_zeta(const ZetaSeries& series);

/// Genus of a nonsingular planar curve of degree d: (d-1)(d-2)/2.
std::uint64_t genus(std::uint32_t degree);

}  // namespace hsplab::curvezeta
