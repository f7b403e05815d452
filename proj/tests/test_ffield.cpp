#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "hsplab/ffield.hpp"
#include "hsplab/rng.hpp"

using namespace hsplab::ffield;
using hsplab::Rng;

TEST_CASE("find_irreducible picks the canonical modulus") {
    CHECK(find_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1});  // X^2 + X + 1
    CHECK(find_irreducible(2, 1) == std::vector<std::uint64_t>{0});     // X
    CHECK(find_irreducible(3, 2) == std::vector<std::uint64_t>{1, 0});  // X^2 + 1 has no root in F_3
    CHECK(find_irreducible(5, 1) == std::vector<std::uint64_t>{0});
}

TEST_CASE("F4 matches the worked multiplication and addition tables") {
    FieldSpec f4 = make_field(2, 2);
    // Elements 0, 1, x, y with x the modulus root and y = x + 1.
    FieldElement e0 = zero(f4), e1 = one(f4);
    FieldElement ex = element_of_index(f4, 2);  // coefficient vector (0, 1) = x
    FieldElement ey = element_of_index(f4, 3);  // (1, 1) = x + 1
    CHECK(render(f4, e0) == "0");
    CHECK(render(f4, e1) == "1");
    CHECK(render(f4, ex) == "x");
    CHECK(render(f4, ey) == "x+1");

    CHECK(mul(f4, ex, ey) == e1);       // x * y = 1
    CHECK(mul(f4, ex, ex) == ey);       // x^2 = y
    CHECK(mul(f4, ey, ey) == ex);       // y^2 = x
    CHECK(add(f4, e1, ex) == ey);       // 1 + x = y
    CHECK(add(f4, ex, ey) == e1);       // x + y = 1
    CHECK(add(f4, e1, ey) == ex);       // 1 + y = x
    CHECK(add(f4, ex, ex) == e0);       // characteristic 2
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f5 = make_field(5, 1);
    FieldElement two = element_of_index(f5, 2), three = element_of_index(f5, 3);
    CHECK(inv(f5, two) == three);  // 2 * 3 = 6 = 1 (mod 5)
    CHECK(mul(f5, two, three) == one(f5));
    CHECK_THROWS_AS(inv(f5, zero(f5)), std::invalid_argument);
}

TEST_CASE("the six field axioms hold exhaustively for q in {4, 5, 9, 25}") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {5, 1}, {3, 2}, {5, 2}}) {
        FieldSpec f = make_field(p, n);
        auto elems = enumerate(f);
        REQUIRE(elems.size() == f.size());
        for (const auto& a : elems) {
            CHECK(add(f, a, zero(f)) == a);
            CHECK(mul(f, a, one(f)) == a);
            CHECK(add(f, a, neg(f, a)) == zero(f));
            if (!is_zero(a)) CHECK(mul(f, a, inv(f, a)) == one(f));
            for (const auto& b : elems) {
                CHECK(add(f, a, b) == add(f, b, a));
                CHECK(mul(f, a, b) == mul(f, b, a));
                for (const auto& c : elems) {
                    CHECK(add(f, add(f, a, b), c) == add(f, a, add(f, b, c)));
                    CHECK(mul(f, mul(f, a, b), c) == mul(f, a, mul(f, b, c)));
                    CHECK(mul(f, a, add(f, b, c)) == add(f, mul(f, a, b), mul(f, a, c)));
                    CHECK(mul(f, add(f, a, b), c) == add(f, mul(f, a, c), mul(f, b, c)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius is a field homomorphism and x^q = x") {
    for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {3, 2}, {5, 2}, {5, 4}, {2, 4}}) {
        FieldSpec f = make_field(p, n);
        auto elems = enumerate(f);
        for (const auto& a : elems) {
            CHECK(pow(f, a, f.size()) == a);  // little Fermat in F_q
            for (const auto& b : elems) {
                CHECK(pow(f, add(f, a, b), p) == add(f, pow(f, a, p), pow(f, b, p)));
                CHECK(pow(f, mul(f, a, b), p) == mul(f, pow(f, a, p), pow(f, b, p)));
            }
        }
    }
}

TEST_CASE("enumerate yields q distinct elements") {
    FieldSpec f4 = make_field(2, 2);
    auto e = enumerate(f4);
    CHECK(e.size() == 4);
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& x : e) distinct.insert(x.coeffs);
    CHECK(distinct.size() == 4);

    FieldSpec f5 = make_field(5, 1);
    CHECK(enumerate(f5).size() == 5);
}

TEST_CASE("subfield embedding preserves the operations") {
    FieldSpec f2 = make_field(2, 1), f4 = make_field(2, 2), f16 = make_field(2, 4);
    CHECK(embed(f2, f4, one(f2)) == one(f4));

    // F_4 embeds in F_16 (4 | 16 as powers), additively and multiplicatively.
    for (const auto& a : enumerate(f4))
        for (const auto& b : enumerate(f4)) {
            CHECK(embed(f4, f16, add(f4, a, b)) == add(f16, embed(f4, f16, a), embed(f4, f16, b)));
            CHECK(embed(f4, f16, mul(f4, a, b)) == mul(f16, embed(f4, f16, a), embed(f4, f16, b)));
        }

    // Distinct images (the embedding is injective).
    std::set<std::vector<std::uint64_t>> images;
    for (const auto& a : enumerate(f4)) images.insert(embed(f4, f16, a).coeffs);
    CHECK(images.size() == 4);

    // F_4 does not embed in F_8: 8 is not a power of 4.
    FieldSpec f8 = make_field(2, 3);
    CHECK_THROWS_AS(embed(f4, f8, one(f4)), std::invalid_argument);
}

TEST_CASE("rendering format") {
    FieldSpec f9 = make_field(3, 2);
    CHECK(render(f9, element_of_index(f9, 0)) == "0");
    CHECK(render(f9, element_of_index(f9, 1)) == "1");
    CHECK(render(f9, element_of_index(f9, 2)) == "2");
    CHECK(render(f9, element_of_index(f9, 3)) == "x");
    CHECK(render(f9, element_of_index(f9, 4)) == "x+1");
    CHECK(render(f9, element_of_index(f9, 7)) == "2x+1");

    FieldSpec f32 = make_field(2, 5);
    CHECK(render(f32, element_of_index(f32, 0b10110)) == "x^4+x^2+x");
}
