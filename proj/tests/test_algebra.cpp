#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "hsplab/algebra.hpp"
#include "hsplab/rng.hpp"

using namespace hsplab::algebra;
using hsplab::Rng;

namespace {

// Test family of groups with |G| <= 72.
std::vector<AbelianGroupSpec> small_groups() {
    return {
        AbelianGroupSpec({2}),       AbelianGroupSpec({3}),    AbelianGroupSpec({4}),
        AbelianGroupSpec({6}),       AbelianGroupSpec({8}),    AbelianGroupSpec({12}),
        AbelianGroupSpec({72}),      AbelianGroupSpec({2, 3}), AbelianGroupSpec({4, 4}),
        AbelianGroupSpec({2, 2, 2}), AbelianGroupSpec({8, 9}), AbelianGroupSpec({6, 6}),
        AbelianGroupSpec({2, 2, 2, 2}),
    };
}

// Every subgroup, grown by closure from already-found subgroups.
std::vector<Subgroup> all_subgroups(const AbelianGroupSpec& g) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Subgroup> found;
    Subgroup triv = Subgroup::trivial(g);
    seen.insert(triv.element_ranks());
    found.push_back(triv);
    for (std::size_t i = 0; i < found.size(); ++i) {
        Subgroup h = found[i];
        for (std::uint64_t r = 0; r < g.order(); ++r) {
            if (h.contains(element_of_rank(g, r))) continue;
            auto gens = h.generators();
            gens.push_back(element_of_rank(g, r));
            Subgroup bigger(g, gens);
            if (seen.insert(bigger.element_ranks()).second) found.push_back(bigger);
        }
    }
    return found;
}

}  // namespace

TEST_CASE("element arithmetic and canonicalization") {
    AbelianGroupSpec z6({6});
    CHECK(add(z6, element(z6, {3}), element(z6, {3})) == element(z6, {0}));

    AbelianGroupSpec z10({10});
    CHECK(element(z10, {341}).coords[0] == 1);  // 341 == 1 (mod 10)

    AbelianGroupSpec z23({2, 3});
    CHECK(add(z23, element(z23, {1, 2}), element(z23, {1, 2})) == element(z23, {0, 1}));

    CHECK(add(z6, element(z6, {2}), neg(z6, element(z6, {2}))) == identity(z6));
    CHECK_THROWS_AS(add(z6, element(z6, {1}), identity(z23)), std::invalid_argument);
}

TEST_CASE("group axioms exhaustively on the test family") {
    for (const auto& g : small_groups()) {
        if (g.order() > 24) continue;  // keep the triple loop cheap; larger groups covered below
        for (std::uint64_t a = 0; a < g.order(); ++a) {
            GroupElement ea = element_of_rank(g, a);
            CHECK(add(g, ea, identity(g)) == ea);
            CHECK(add(g, ea, neg(g, ea)) == identity(g));
            for (std::uint64_t b = 0; b < g.order(); ++b)
                for (std::uint64_t c = 0; c < g.order(); ++c) {
                    GroupElement eb = element_of_rank(g, b), ec = element_of_rank(g, c);
                    CHECK(add(g, add(g, ea, eb), ec) == add(g, ea, add(g, eb, ec)));
                }
        }
    }
    // Spot-check associativity on random triples for the larger groups.
    Rng rng(7);
    for (const auto& g : small_groups()) {
        for (int i = 0; i < 2000; ++i) {
            GroupElement a = element_of_rank(g, rng.below(g.order()));
            GroupElement b = element_of_rank(g, rng.below(g.order()));
            GroupElement c = element_of_rank(g, rng.below(g.order()));
            CHECK(add(g, add(g, a, b), c) == add(g, a, add(g, b, c)));
        }
    }
}

TEST_CASE("character evaluation") {
    AbelianGroupSpec z4({4});
    CHECK(character_eval(z4, Character{{1}}, element(z4, {1})) == std::complex<double>(0, 1));

    AbelianGroupSpec z6({6});
    // a = 2, x = 3: e^{2 pi i * 6/6} = 1, cross-checked by the raw exponential.
    auto v = character_eval(z6, Character{{2}}, element(z6, {3}));
    CHECK(std::abs(v - std::polar(1.0, 2 * std::numbers::pi * 2.0 * 3.0 / 6.0)) < 1e-12);
    CHECK(std::abs(v - 1.0) < 1e-12);

    for (const auto& g : small_groups()) {
        Rng rng(11);
        for (int i = 0; i < 200; ++i) {
            Character a = character_of_rank(g, rng.below(g.order()));
            Character b = character_of_rank(g, rng.below(g.order()));
            GroupElement x = element_of_rank(g, rng.below(g.order()));
            GroupElement y = element_of_rank(g, rng.below(g.order()));
            // Trivial character, unit modulus, multiplicativity in x, dual-group law.
            CHECK(character_eval(g, character_of_rank(g, 0), x) == std::complex<double>(1, 0));
            CHECK(std::abs(std::abs(character_eval(g, a, x)) - 1.0) < 1e-12);
            CHECK(std::abs(character_eval(g, a, add(g, x, y)) -
                           character_eval(g, a, x) * character_eval(g, a, y)) < 1e-12);
            CHECK(std::abs(character_eval(g, a, x) * character_eval(g, b, x) -
                           character_eval(g, character_add(g, a, b), x)) < 1e-12);
        }
    }
}

TEST_CASE("character orthogonality on groups up to 72") {
    for (const auto& g : small_groups()) {
        for (std::uint64_t a = 0; a < g.order(); ++a)
            for (std::uint64_t b = 0; b < g.order(); ++b) {
                std::complex<double> s = 0;
                for (std::uint64_t x = 0; x < g.order(); ++x)
                    s += character_eval(g, character_of_rank(g, a), element_of_rank(g, x)) *
                         std::conj(character_eval(g, character_of_rank(g, b), element_of_rank(g, x)));
                s /= double(g.order());
                CHECK(std::abs(s - (a == b ? 1.0 : 0.0)) < 1e-12);
            }
    }
}

TEST_CASE("subgroup enumeration and coset decomposition") {
    AbelianGroupSpec z6({6});
    Subgroup h(z6, {element(z6, {3})});
    CHECK(h.element_ranks() == std::vector<std::uint64_t>{0, 3});

    auto reps = coset_decomposition(z6, h);
    REQUIRE(reps.size() == 3);
    // H_0 = {0,3}, H_1 = {1,4}, H_2 = {2,5}: disjoint, each of size |H|, union G.
    std::set<std::uint64_t> covered;
    for (const auto& rep : reps)
        for (auto hr : h.element_ranks()) covered.insert(rank_of(z6, add(z6, rep, element_of_rank(z6, hr))));
    CHECK(covered.size() == 6);

    CHECK(coset_decomposition(z6, Subgroup::full(z6)).size() == 1);

    AbelianGroupSpec z4({4});
    Subgroup h2(z4, {element(z4, {2})});
    auto reps2 = coset_decomposition(z4, h2);
    REQUIRE(reps2.size() == 2);
    // Brute-force check {0,2} and {1,3}.
    CHECK(h2.element_ranks() == std::vector<std::uint64_t>{0, 2});
    CHECK(rank_of(z4, reps2[1]) == 1);
}

TEST_CASE("character averages over a subgroup (the character-sum lemma)") {
    AbelianGroupSpec z6({6});
    Subgroup h(z6, {element(z6, {3})});
    CHECK(std::abs(character_average_over(h, Character{{0}}) - 1.0) < 1e-12);
    // Brute-force sums: a=1 gives (1 + e^{i pi})/2 = 0, a=2 gives 1.
    CHECK(std::abs(character_average_over(h, Character{{1}})) < 1e-12);
    CHECK(std::abs(character_average_over(h, Character{{2}}) - 1.0) < 1e-12);

    // Lemma on the whole family: average is 1 exactly when trivial on H, else 0.
    for (const auto& g : small_groups()) {
        for (const auto& sub : all_subgroups(g)) {
            for (std::uint64_t a = 0; a < g.order(); ++a) {
                Character chi = character_of_rank(g, a);
                bool trivial = true;
                for (auto hr : sub.element_ranks())
                    trivial &= character_is_trivial_at(g, chi, element_of_rank(g, hr));
                auto avg = character_average_over(sub, chi);
                CHECK(std::abs(avg - (trivial ? 1.0 : 0.0)) < 1e-12);
            }
        }
    }
}

TEST_CASE("annihilator and double annihilator") {
    AbelianGroupSpec z6({6});
    Subgroup h(z6, {element(z6, {3})});
    Subgroup perp = annihilator(h);
    CHECK(perp.element_ranks() == std::vector<std::uint64_t>{0, 2, 4});

    CHECK(annihilator(Subgroup::trivial(z6)).order() == 6);
    CHECK(annihilator(Subgroup::full(z6)).element_ranks() == std::vector<std::uint64_t>{0});

    for (const auto& g : small_groups()) {
        for (const auto& sub : all_subgroups(g)) {
            Subgroup perp2 = annihilator(sub);
            // Brute-force oracle: exactly the characters trivial on H.
            std::vector<std::uint64_t> expected;
            for (std::uint64_t a = 0; a < g.order(); ++a) {
                bool trivial = true;
                for (auto hr : sub.element_ranks())
                    trivial &= character_is_trivial_at(g, character_of_rank(g, a), element_of_rank(g, hr));
                if (trivial) expected.push_back(a);
            }
            CHECK(perp2.element_ranks() == expected);
            CHECK(perp2.order() * sub.order() == g.order());
            CHECK(double_annihilator(sub) == sub);
        }
    }
}

TEST_CASE("subgroup reconstruction from character samples") {
    AbelianGroupSpec z6({6});
    CHECK(subgroup_from_character_samples(z6, {}) == Subgroup::full(z6));
    CHECK(subgroup_from_character_samples(z6, {Character{{0}}}) == Subgroup::full(z6));
    CHECK(subgroup_from_character_samples(z6, {Character{{2}}, Character{{4}}}) ==
          Subgroup(z6, {element(z6, {3})}));

    AbelianGroupSpec g89({8, 3});
    // Samples generating perp(<(2,0)>) recover <(2,0)>.
    Subgroup h(g89, {element(g89, {2, 0})});
    Subgroup perp = annihilator(h);
    std::vector<Character> samples;
    for (const auto& e : perp.generators()) samples.push_back(Character{e.coords});
    CHECK(subgroup_from_character_samples(g89, samples) == h);

    // Brute force and the Smith-normal-form kernel agree everywhere they overlap.
    Rng rng(23);
    for (const auto& g : small_groups()) {
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<Character> s;
            for (int i = 0; i < 3; ++i) s.push_back(character_of_rank(g, rng.below(g.order())));
            Subgroup brute = subgroup_from_character_samples(g, s, KernelMethod::BruteForce);
            Subgroup snf = subgroup_from_character_samples(g, s, KernelMethod::SmithNormalForm);
            CHECK(brute == snf);
        }
    }
}

TEST_CASE("smith normal form") {
    IntMat eye = IntMat::eye(3);
    SmithResult r = smith_normal_form(eye);
    CHECK(r.d == eye);

    IntMat m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    SmithResult s = smith_normal_form(m);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 6);
    CHECK(s.u.mul(m).mul(s.v) == s.d);
    CHECK(s.v.mul(s.v_inv) == IntMat::eye(2));

    IntMat one(1, 1);
    one(0, 0) = 6;
    CHECK(smith_normal_form(one).d(0, 0) == 6);

    // Random matrices: U*M*V = D, divisibility chain, V*Vinv = I.
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
        IntMat a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                a(i, j) = mpz_class(long(rng.below(21)) - 10);
        SmithResult sr = smith_normal_form(a);
        CHECK(sr.u.mul(a).mul(sr.v) == sr.d);
        CHECK(sr.v.mul(sr.v_inv) == IntMat::eye(cols));
        for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
            if (sr.d(i + 1, i + 1) != 0) {
                if (sr.d(i, i) != 0) CHECK(sr.d(i + 1, i + 1) % sr.d(i, i) == 0);
            }
            CHECK(sr.d(i, i) >= 0);
        }
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(sr.d(i, j) == 0);
    }
}
