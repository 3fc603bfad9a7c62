#include <doctest.h>

#include "helpers.hpp"

using namespace fqm;
using namespace fqm::test;

namespace {

void check_reconstruction(const Fqm& m, const std::vector<JordanComponent>& comps) {
    Fqm rebuilt = module_of_components(comps);
    CHECK(iso_oracle(rebuilt, m).verdict == IsoVerdict::yes);
}

void check_component_validity(const std::vector<JordanComponent>& comps) {
    for (const auto& c : comps) {
        if (c.tag != JordanComponent::Tag::A) continue;
        CHECK(c.a == a_class(c.p, c.r, c.a));  // canonical representative
    }
}

}  // namespace

TEST_CASE("standard presentation") {
    Fqm a = make_A(3, 2, 1);
    Fqm s = standard_presentation(a, 3);
    CHECK(s.orders() == a.orders());
    CHECK(s.q_gen(0) == a.q_gen(0));

    // 3-part of A_45 is cyclic of order 9 with Q = 5/9
    auto parts = primary_decomposition(make_Am(45));
    REQUIRE(parts[0].first == 3);
    Fqm three_part = standard_presentation(parts[0].second, 3);
    CHECK(three_part.orders() == std::vector<ZZ>{9});
    CHECK(three_part.q_gen(0) == QZ::of(5, 9));

    Fqm b2 = standard_presentation(make_B(2), 2);
    CHECK(b2.orders() == std::vector<ZZ>{4, 4});

    SUBCASE("sorts descending") {
        Fqm m = direct_sum(make_A(3, 1, 1), make_A(3, 2, 1));
        Fqm std_m = standard_presentation(m, 3);
        CHECK(std_m.orders() == std::vector<ZZ>{9, 3});
        CHECK(std_m.q_gen(0) == QZ::of(1, 9));
    }
    CHECK_THROWS_AS(standard_presentation(make_Am(15), 3), invalid_input);
}

TEST_CASE("best pair") {
    BestPair bp = best_pair(make_A(3, 1, 1));
    CHECK(bp.i == 0);
    CHECK(bp.j == 0);
    CHECK(bp.beta == 1);

    bp = best_pair(make_C(1));
    CHECK(bp.i != bp.j);
    CHECK(bp.beta == 1);

    // defect comparison picks the order-9 generator after standardization
    Fqm m = standard_presentation(direct_sum(make_A(3, 1, 1), make_A(3, 2, 1)), 3);
    bp = best_pair(m);
    CHECK(bp.i == 0);
    CHECK(bp.j == 0);
    CHECK(bp.beta == 2);

    SUBCASE("degenerate module is detected") {
        Fqm bad = Fqm::from_presentation({3}, {QZ()}, {{QZ()}});
        CHECK_THROWS_AS(best_pair(bad), degenerate_module);
    }
}

TEST_CASE("decompose odd primary") {
    SUBCASE("sum of two squares over Z/3, both decompositions acceptable") {
        Fqm m = Fqm::from_presentation(
            {3, 3}, {QZ::of(1, 3), QZ::of(1, 3)},
            {{QZ::of(2, 3), QZ()}, {QZ(), QZ::of(2, 3)}});
        auto comps = decompose_odd(m, 3);
        REQUIRE(comps.size() == 2);
        for (const auto& c : comps) {
            CHECK(c.tag == JordanComponent::Tag::A);
            CHECK(c.p == 3);
            CHECK(c.r == 1);
        }
        check_reconstruction(m, comps);
    }
    SUBCASE("already indecomposable") {
        auto comps = decompose_odd(make_A(5, 2, 2), 5);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0] == JordanComponent::A(5, 2, 2));
    }
    SUBCASE("mixed ranks") {
        Fqm m = direct_sum(make_A(3, 1, 1), make_A(3, 2, 1));
        auto comps = decompose_odd(m, 3);
        REQUIRE(comps.size() == 2);
        std::vector<int> rs{comps[0].r, comps[1].r};
        std::sort(rs.begin(), rs.end());
        CHECK(rs == std::vector<int>{1, 2});
        check_reconstruction(m, comps);
    }
    CHECK_THROWS_AS(decompose_odd(make_B(1), 2), invalid_input);
}

TEST_CASE("decompose 2-primary") {
    SUBCASE("C(2) survives") {
        auto comps = decompose_two(make_C(2));
        REQUIRE(comps.size() == 1);
        CHECK(comps[0] == JordanComponent::C(2));
    }
    SUBCASE("B(1) + A(2,1,1)") {
        Rng rng(99);
        Fqm m = direct_sum(make_B(1), make_A(2, 1, 1));
        auto comps = decompose_two(scramble(rng, m));
        check_reconstruction(m, comps);
    }
    SUBCASE("D(2,1,1,1) is B(2)") {
        auto comps = decompose_two(make_D(2, 1, 1, 1));
        REQUIRE(comps.size() == 1);
        CHECK(comps[0] == JordanComponent::B(2));
    }
}

TEST_CASE("jordan decomposition") {
    CHECK(jordan_decomposition(zero_module()).empty());

    auto comps = jordan_decomposition(make_Am(15));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == JordanComponent::A(3, 1, 2));
    CHECK(comps[1] == JordanComponent::A(5, 1, 2));

    comps = jordan_decomposition(make_B(1));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == JordanComponent::B(1));

    SUBCASE("degenerate input") {
        Fqm bad = Fqm::from_presentation({2, 2}, {QZ::of(1, 2), QZ::of(1, 2)},
                                         {{QZ(), QZ()}, {QZ(), QZ()}});
        CHECK_THROWS_AS(jordan_decomposition(bad), degenerate_module);
        // 2-adic rank-1 with no valid split partner
        Fqm bad2 = Fqm::from_presentation({2}, {QZ::of(1, 2)}, {{QZ()}});
        CHECK_THROWS_AS(decompose_two(bad2), degenerate_module);
    }
}

TEST_CASE("randomized reconstruction with scrambled presentations") {
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        Fqm m = random_module(rng, 4, 1000);
        Fqm scrambled = scramble(rng, m);
        auto comps = jordan_decomposition(scrambled);
        check_component_validity(comps);
        Fqm rebuilt = module_of_components(comps);
        CHECK(iso_oracle(rebuilt, m).verdict == IsoVerdict::yes);
        // invariants preserved
        CHECK(elementary_divisors(rebuilt) == elementary_divisors(m));
        CHECK(sigma_exact(rebuilt) == sigma_exact(m));
        CHECK(q_histogram(rebuilt) == q_histogram(m));
    }
}

TEST_CASE("reconstruction beyond the oracle budget") {
    // large modules go through the invariant comparison instead of the
    // exhaustive oracle; deep 2-adic presentations included
    Rng rng(4096);
    for (int t = 0; t < 12; ++t) {
        Fqm m = zero_module();
        for (int i = 0; i < 5; ++i) {
            Fqm part = component_module(random_component(rng, 4096));
            if (m.order() * part.order() > 8192) break;
            m = direct_sum(m, part);
        }
        if (m.order() <= 2000) continue;
        Fqm rebuilt = module_of_components(jordan_decomposition(scramble(rng, m, 30)));
        CHECK(elementary_divisors(rebuilt) == elementary_divisors(m));
        CHECK(sigma_exact(rebuilt) == sigma_exact(m));
        CHECK(q_histogram(rebuilt) == q_histogram(m));
        CHECK(invariants_match(rebuilt, m));
    }
    // a single deep 2-adic chain: 2^7 * 4^3 * ... scrambled hard
    Fqm deep = direct_sum(direct_sum(make_A(2, 7, 5), make_B(3)), make_C(2));
    Fqm rebuilt = module_of_components(jordan_decomposition(scramble(rng, deep, 40)));
    CHECK(invariants_match(rebuilt, deep));
}
