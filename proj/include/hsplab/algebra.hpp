// Finite Abelian groups as direct sums of cyclic groups, their characters
// and dual groups, subgroups/cosets/annihilators, and integer Smith normal
// form used for subgroup reconstruction from character samples.
#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace hsplab::algebra {

using cplx = std::complex<double>;

/// G = Z/m_0 (+) Z/m_1 (+) ... with every m_i >= 2.
struct AbelianGroupSpec {
    std::vector<std::uint64_t> moduli;

    explicit AbelianGroupSpec(std::vector<std::uint64_t> m);

    std::uint64_t order() const { return order_; }
    std::size_t rank() const { return moduli.size(); }
    /// lcm of the moduli (divides the order).
    std::uint64_t exponent() const { return exponent_; }

    bool operator==(const AbelianGroupSpec& o) const { return moduli == o.moduli; }

private:
    std::uint64_t order_ = 1;
    std::uint64_t exponent_ = 1;
};

/// Element as a componentwise-reduced coordinate vector.
struct GroupElement {
    std::vector<std::uint64_t> coords;

    bool operator==(const GroupElement& o) const { return coords == o.coords; }
    bool operator<(const GroupElement& o) const { return coords < o.coords; }
};

/// Character index vector a, identifying Psi_a(x) = exp(2*pi*i * sum a_i x_i / m_i).
struct Character {
    std::vector<std::uint64_t> index;

    bool operator==(const Character& o) const { return index == o.index; }
    bool operator<(const Character& o) const { return index < o.index; }
};

GroupElement identity(const AbelianGroupSpec& g);
GroupElement element(const AbelianGroupSpec& g, std::vector<std::uint64_t> coords);

/// Mixed-radix rank of an element (first coordinate most significant); inverse below.
std::uint64_t rank_of(const AbelianGroupSpec& g, const GroupElement& x);
GroupElement element_of_rank(const AbelianGroupSpec& g, std::uint64_t rank);
Character character_of_rank(const AbelianGroupSpec& g, std::uint64_t rank);

GroupElement add(const AbelianGroupSpec& g, const GroupElement& x, const GroupElement& y);
GroupElement neg(const AbelianGroupSpec& g, const GroupElement& x);
GroupElement scalar_mul(const AbelianGroupSpec& g, std::uint64_t k, const GroupElement& x);

cplx character_eval(const AbelianGroupSpec& g, const Character& a, const GroupElement& x);
/// Exact integer test for Psi_a(x) == 1.
bool character_is_trivial_at(const AbelianGroupSpec& g, const Character& a, const GroupElement& x);
Character character_add(const AbelianGroupSpec& g, const Character& a, const Character& b);

/// Subgroup stored by generators; elements enumerated and cached on demand
/// (closure by BFS, bounded at 10^6 elements).
class Subgroup {
public:
    Subgroup(AbelianGroupSpec spec, std::vector<GroupElement> generators);

    static Subgroup trivial(const AbelianGroupSpec& g);
    static Subgroup full(const AbelianGroupSpec& g);

    const AbelianGroupSpec& spec() const { return spec_; }
    const std::vector<GroupElement>& generators() const { return generators_; }

    /// Sorted ranks of all elements.
    const std::vector<std::uint64_t>& element_ranks() const;
    std::vector<GroupElement> elements() const;
    std::uint64_t order() const { return element_ranks().size(); }
    bool contains(const GroupElement& x) const;

    bool operator==(const Subgroup& o) const;

private:
    AbelianGroupSpec spec_;
    std::vector<GroupElement> generators_;
    mutable std::vector<std::uint64_t> ranks_;  // enumeration cache
};

std::vector<GroupElement> subgroup_enumerate(const Subgroup& h);

/// Coset representatives r with G = disjoint union of r+H, each of size |H|.
std::vector<GroupElement> coset_decomposition(const AbelianGroupSpec& g, const Subgroup& h);

/// (1/|H|) sum_{x in H} Psi_a(x); exactly 1 when Psi_a is trivial on H, else ~0.
cplx character_average_over(const Subgroup& h, const Character& a);

/// perp(H) = { a : Psi_a trivial on H }, as a subgroup of the dual (indices).
Subgroup annihilator(const Subgroup& h);
Subgroup double_annihilator(const Subgroup& h);

enum class KernelMethod { Auto, BruteForce, SmithNormalForm };

/// Intersection kernel { x : Psi_a(x) = 1 for every sampled a }.
/// Empty sample list returns G.
Subgroup subgroup_from_character_samples(const AbelianGroupSpec& g,
                                         const std::vector<Character>& samples,
                                         KernelMethod method = KernelMethod::Auto);

/// Dense integer matrix for the Smith normal form machinery.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    mpz_class& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMat eye(std::size_t n);
    IntMat mul(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// U*M*V = D with D diagonal, d_1 | d_2 | ..., U and V unimodular.
/// v_inv is the exact inverse of V, accumulated during the reduction.
struct SmithResult {
    IntMat u, d, v, v_inv;
};

SmithResult smith_normal_form(const IntMat& m);

}  // namespace hsplab::algebra
