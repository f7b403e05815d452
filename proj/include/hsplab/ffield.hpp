// Prime fields F_p and extensions F_{p^n} as polynomial quotient rings, with
// deterministic irreducible-modulus selection, enumeration, and subfield
// embedding. Elements render as coefficient polynomials ("x+1").
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hsplab::ffield {

/// F_{p^n} = F_p[X] / (modulus), modulus monic irreducible of degree n.
/// modulus is stored as its n low coefficients c_0..c_{n-1} (the X^n
/// coefficient is implicitly 1).
struct FieldSpec {
    std::uint64_t p = 0;
    std::uint32_t degree = 0;
    std::vector<std::uint64_t> modulus_low;

    std::uint64_t size() const;  // q = p^n
    bool operator==(const FieldSpec& o) const {
        return p == o.p && degree == o.degree && modulus_low == o.modulus_low;
    }
};

/// Coefficient vector of length n, entries in [0, p).
struct FieldElement {
    std::vector<std::uint64_t> coeffs;

    bool operator==(const FieldElement& o) const { return coeffs == o.coeffs; }
    bool operator<(const FieldElement& o) const {
        // Compare as little-endian digit vectors of equal length.
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i] != o.coeffs[i]) return coeffs[i] < o.coeffs[i];
        return false;
    }
};

/// Lexicographically smallest monic irreducible polynomial of degree n over
/// F_p (ordered by the base-p value of the low coefficients); returns the low
/// coefficients. Irreducibility by exhaustive trial division.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, std::uint32_t n);

/// Field with the canonical modulus from find_irreducible.
FieldSpec make_field(std::uint64_t p, std::uint32_t n = 1);

FieldElement zero(const FieldSpec& f);
FieldElement one(const FieldSpec& f);
/// Element from the base-p digits of an index in [0, q).
FieldElement element_of_index(const FieldSpec& f, std::uint64_t index);
std::uint64_t index_of(const FieldSpec& f, const FieldElement& a);

FieldElement add(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldSpec& f, const FieldElement& a);
FieldElement mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldSpec& f, const FieldElement& a);  // rejects 0
FieldElement pow(const FieldSpec& f, const FieldElement& a, std::uint64_t e);
bool is_zero(const FieldElement& a);

std::vector<FieldElement> enumerate(const FieldSpec& f);  // q <= 10^6

/// Embedding F_{p^m} -> F_{p^n} for m | n: maps the subfield generator to the
/// lexicographically smallest root of the subfield modulus in the big field.
/// Rejects a non-power relation. Deterministic and cached per spec pair.
FieldElement embed(const FieldSpec& sub, const FieldSpec& big, const FieldElement& a);

/// Fixed textual rendering: "0", "1", "x", "x+1", "2x^2+x+3", ...
std::string render(const FieldSpec& f, const FieldElement& a);

}  // namespace hsplab::ffield
