#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "graphcode/code_model.hpp"
#include "graphcode/families.hpp"

using namespace graphcode;

namespace {

// The K = 12 clique on L_6 (closing edge weight 3) at p = 4, d = 3,
// exactly as the search enumerates it.
std::vector<ZpVec> v12_clique() {
    const std::vector<std::vector<i64>> rows = {
        {0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 2, 1}, {0, 2, 3, 0, 1, 3}, {1, 1, 0, 3, 1, 0},
        {1, 2, 1, 3, 3, 1}, {1, 3, 3, 3, 2, 3}, {2, 0, 3, 1, 0, 3}, {2, 1, 3, 2, 1, 1},
        {2, 2, 2, 1, 1, 2}, {2, 3, 0, 2, 3, 0}, {3, 0, 1, 2, 0, 1}, {3, 1, 2, 2, 2, 2}};
    std::vector<ZpVec> out;
    for (const auto& r : rows) out.push_back(ZpVec(4, r));
    return out;
}

} // namespace

TEST_CASE("canonicalize_clique sorts, deduplicates and validates shapes") {
    std::vector<ZpVec> in{ZpVec(3, {1, 0}), ZpVec(3, {0, 0}), ZpVec(3, {1, 0})};
    auto out = canonicalize_clique(in);
    REQUIRE(out.size() == 2);
    CHECK(out[0].is_zero());
    CHECK(out[1].entries() == std::vector<i64>{1, 0});
    CHECK_THROWS_AS(canonicalize_clique({}), InputError);
    CHECK_THROWS_AS(canonicalize_clique({ZpVec(3, 2), ZpVec(4, 2)}), DimensionError);
}

TEST_CASE("make_code validates the clique conditions by default") {
    WeightedGraph g = star_graph(3, 3);
    CHECK_THROWS_WITH_AS(
        make_code(g, {ZpVec(3, 3), ZpVec(3, {0, 1, 0})}, 2),
        doctest::Contains("clique condition 3"), ValidationError);
    // Same clique slips through with validation off.
    GraphCode raw = make_code(g, {ZpVec(3, 3), ZpVec(3, {0, 1, 0})}, 2, false);
    CHECK(raw.K() == 2);
    CHECK_THROWS_AS(make_code(g, {ZpVec(3, 3)}, 5), DimensionError);
}

TEST_CASE("is_group and group_closure") {
    std::vector<ZpVec> grp{ZpVec(4, {0}), ZpVec(4, {1}), ZpVec(4, {2}), ZpVec(4, {3})};
    CHECK(is_group(grp));
    std::vector<ZpVec> notgrp{ZpVec(4, {0}), ZpVec(4, {1})};
    CHECK_FALSE(is_group(notgrp));
    CHECK_FALSE(is_group({ZpVec(4, {1})})); // no zero

    auto closure = group_closure({ZpVec(4, {1})});
    CHECK(closure.size() == 4);
    CHECK(std::is_sorted(closure.begin(), closure.end()));
    CHECK(is_group(closure));

    CHECK_THROWS_AS(group_closure({ZpVec(97, {1})}, 10), ResourceError);
    CHECK_THROWS_AS(group_closure({}), InputError);
}

TEST_CASE("stabilizer module sizes match the catalogue") {
    // [[5,1,3]]_3: S is the dual of <(1,1,1,1,1)>, order 3^4.
    GraphCode c513 = family_5_1_3(3);
    CHECK(c513.stabilizer_size() == 81);

    // ((5,4,3))_4 on L_5.
    GraphCode c543 = family_5_p_3(4);
    CHECK(c543.K() == 4);
    CHECK(c543.stabilizer_size() == 64);

    // ((5,p,3))_p for p = 5, 6, 7.
    CHECK(family_5_p_3(5).stabilizer_size() == 125);
    CHECK(family_5_p_3(6).stabilizer_size() == 648);
    CHECK(family_5_p_3(7).stabilizer_size() == 343);

    // [[4,2,2]]_6 and its nonadditive sibling ((4,36,2))_6.
    CHECK(family_4_2_2_6().stabilizer_size() == 36);
    GraphCode c4366 = family_4_36_2_6();
    CHECK(c4366.K() == 36);
    CHECK(c4366.stabilizer_size() == 6);
}

TEST_CASE("the K = 12 clique on L_6 at p = 4 is valid with |S| = 4") {
    WeightedGraph g = loop_graph(4, 6, 3);
    GraphCode code = make_code(g, v12_clique(), 3);
    CHECK(code.K() == 12);
    CHECK(code.stabilizer_size() == 4);
    classify(code);
    CHECK(code.classification == Classification::Nonadditive);
    CHECK(code_label(code) == "((6,12,3))_4");
}

TEST_CASE("classification trichotomy") {
    GraphCode stab = family_3_1_2(3);
    CHECK(stab.classification == Classification::Stabilizer);
    CHECK(stab.degrees == std::vector<i64>{3});

    GraphCode nonadd = family_5_p_3(4);
    CHECK(nonadd.classification == Classification::Nonadditive);
    CHECK(nonadd.degrees.empty());

    // Generators of the [[6,2,3]]_3 clique group without their sums: the
    // closure is the full coding group, so this is a subcode of a stabilizer
    // code.
    GraphCode full = family_6_2_3(3);
    REQUIRE(full.classification == Classification::Stabilizer);
    std::vector<ZpVec> sub{ZpVec(3, 6), ZpVec(3, {1, 1, 0, 2, 1, 0}), ZpVec(3, {0, 1, 1, 0, 2, 1})};
    GraphCode subcode = make_code(full.graph, sub, 3);
    classify(subcode);
    CHECK(subcode.classification == Classification::SubcodeOfStabilizer);
}

TEST_CASE("stabilizer generators are the Howell generators lifted to operators") {
    GraphCode code = family_3_1_2(3);
    auto gens = stabilizer_generators(code);
    REQUIRE(gens.size() == code.stabilizer.generators.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const ZpVec& s = code.stabilizer.generators[i];
        CHECK(gens[i].x == s);
        CHECK(gens[i].z == mat_vec(code.graph, s));
        CHECK(gens[i].phase == mod_reduce(2 * qform(code.graph, s), 2 * code.p()));
    }
}

TEST_CASE("minimum_distance for bare graph states") {
    // |Gamma_0> on L_5 at p = 3 is the [[5,0,3]] graph state.
    GraphCode l5 = make_code(loop_graph(3, 5), {ZpVec(3, 5)}, 1);
    CHECK(minimum_distance(l5) == 3);

    // Single vertex, no edges: distance 1.
    GraphCode dot1 = make_code(WeightedGraph::empty(3, 1), {ZpVec(3, 1)}, 1);
    CHECK(minimum_distance(dot1) == 1);

    // One edge at p = 2: distance 2.
    WeightedGraph b2 = WeightedGraph::empty(2, 2);
    b2.set_edge(0, 1, 1);
    GraphCode bond = make_code(b2, {ZpVec(2, 2)}, 1);
    CHECK(minimum_distance(bond) == 2);
}

TEST_CASE("minimum_distance for encoding codes") {
    CHECK(minimum_distance(family_3_1_2(3)) == 2);
    CHECK(minimum_distance(family_5_p_3(4)) == 3);
    CHECK(minimum_distance(family_6_2_3(5)) == 3);
    CHECK(minimum_distance(family_8_2_4(3)) == 4);
}

TEST_CASE("singleton_check") {
    CHECK(singleton_check(family_6_2_3(5)) == SingletonStatus::Saturates);
    CHECK(singleton_check(family_5_p_3(5)) == SingletonStatus::Saturates);
    CHECK(singleton_check(family_5_1_3(3)) == SingletonStatus::Saturates);

    // ((6,12,3))_4: 12 * 4^4 < 4^6 strictly.
    GraphCode v12 = make_code(loop_graph(4, 6, 3), v12_clique(), 3);
    CHECK(singleton_check(v12) == SingletonStatus::Satisfies);

    // An (invalid) over-filled code violates the bound.
    GraphCode fake;
    fake.graph = WeightedGraph::empty(3, 2);
    fake.d = 2;
    for (std::size_t i = 0; i < 9; ++i) fake.clique.push_back(decode_index(3, 2, i));
    CHECK(singleton_check(fake) == SingletonStatus::Violates);

    CHECK(singleton_name(SingletonStatus::Saturates) == "saturates");
}

TEST_CASE("code_label distinguishes stabilizer and generic forms") {
    CHECK(code_label(family_3_1_2(3)) == "[[3,1,2]]_3");
    CHECK(code_label(family_6_2_3(5)) == "[[6,2,3]]_5");
    // Nonadditive codes keep the generic form even with K = p or K = p^2.
    CHECK(code_label(family_5_p_3(4)) == "((5,4,3))_4");
    CHECK(code_label(family_4_36_2_6()) == "((4,36,2))_6");
    // Unclassified codes are labeled generically.
    GraphCode raw = make_code(star_graph(3, 3), {ZpVec(3, 3)}, 1, false);
    CHECK(code_label(raw) == "((3,1,1))_3");
}

TEST_CASE("stabilizer size times K equals p^n exactly for stabilizer codes") {
    for (const auto& code : {family_3_1_2(5), family_6_2_3(3), family_2n_2nm2_2(3, 4)}) {
        REQUIRE(code.classification == Classification::Stabilizer);
        std::size_t pn = 1;
        for (int i = 0; i < code.n(); ++i) pn *= static_cast<std::size_t>(code.p());
        CHECK(code.K() * code.stabilizer_size() == pn);
    }
}
