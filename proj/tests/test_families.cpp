#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "graphcode/families.hpp"
#include "graphcode/kl_oracle.hpp"

using namespace graphcode;

TEST_CASE("graph constructors produce the documented edge sets") {
    // S_3: leaves 1 and 3 on center 2.
    WeightedGraph s3 = star_graph(3, 3);
    CHECK(s3.at(0, 1) == 1);
    CHECK(s3.at(1, 2) == 1);
    CHECK(s3.at(0, 2) == 0);

    // S_4 defaults to center 4.
    WeightedGraph s4 = star_graph(5, 4);
    CHECK(s4.at(0, 3) == 1);
    CHECK(s4.at(1, 3) == 1);
    CHECK(s4.at(2, 3) == 1);
    CHECK(s4.at(0, 1) == 0);

    // L_5: cycle, all unit.
    WeightedGraph l5 = loop_graph(3, 5);
    CHECK(l5.at(0, 1) == 1);
    CHECK(l5.at(3, 4) == 1);
    CHECK(l5.at(4, 0) == 1);
    CHECK(l5.at(0, 2) == 0);

    // L_6 with the closing edge reweighted.
    WeightedGraph l6 = loop_graph(7, 6, -1);
    CHECK(l6.at(5, 0) == 6);
    CHECK(l6.at(0, 1) == 1);

    // Matching on 6 vertices: (1,2),(3,4),(5,6).
    WeightedGraph m6 = matching_graph(2, 6);
    CHECK(m6.at(0, 1) == 1);
    CHECK(m6.at(2, 3) == 1);
    CHECK(m6.at(4, 5) == 1);
    CHECK(m6.at(1, 2) == 0);

    // Disjoint union is block diagonal.
    WeightedGraph u = disjoint_union(star_graph(3, 3), matching_graph(3, 2));
    CHECK(u.n == 5);
    CHECK(u.at(0, 1) == 1);
    CHECK(u.at(3, 4) == 1);
    CHECK(u.at(2, 3) == 0);

    CHECK_THROWS_AS(disjoint_union(star_graph(3, 3), matching_graph(5, 2)), DimensionError);
    CHECK_THROWS_AS(star_graph(3, 1), FamilyError);
    CHECK_THROWS_AS(loop_graph(3, 2), FamilyError);
    CHECK_THROWS_AS(matching_graph(3, 5), FamilyError);
}

TEST_CASE("the 8-wheel uses the certified rim ordering") {
    WeightedGraph w8 = wheel_graph(3, 8);
    // hub edges
    for (int v = 0; v < 7; ++v) CHECK(w8.at(7, v) == 1);
    // rim cycle 1-2-6-7-3-4-5-1 (1-based)
    const std::vector<std::pair<int, int>> rim = {{1, 2}, {2, 6}, {6, 7}, {7, 3},
                                               {3, 4}, {4, 5}, {5, 1}};
    int rim_edges = 0;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) rim_edges += w8.at(a, b) != 0;
    CHECK(rim_edges == 7);
    for (auto [a, b] : rim) CHECK(w8.at(a - 1, b - 1) == 1);

    // Smaller wheels fall back to the natural rim.
    WeightedGraph w5 = wheel_graph(3, 5);
    CHECK(w5.at(0, 1) == 1);
    CHECK(w5.at(1, 2) == 1);
    CHECK(w5.at(2, 3) == 1);
    CHECK(w5.at(3, 0) == 1);
}

TEST_CASE("distance-2 families across parameters") {
    GraphCode c312 = family_3_1_2(5);
    CHECK(c312.K() == 5);
    CHECK(c312.classification == Classification::Stabilizer);
    CHECK(code_label(c312) == "[[3,1,2]]_5");

    GraphCode c3p4 = family_3_pm1_2(4);
    CHECK(c3p4.K() == 3);
    CHECK(c3p4.classification != Classification::Stabilizer);

    GraphCode c3p6 = family_3_pm1_2(6);
    CHECK(c3p6.K() == 5);
    CHECK(c3p6.stabilizer_size() == 6);

    GraphCode c422 = family_2n_2nm2_2(2, 3);
    CHECK(code_label(c422) == "[[4,2,2]]_3");
    GraphCode c642 = family_2n_2nm2_2(3, 4);
    CHECK(code_label(c642) == "[[6,4,2]]_4");

    GraphCode c532 = family_2np3_2np1_2(1, 3);
    CHECK(code_label(c532) == "[[5,3,2]]_3");
    CHECK(c532.classification == Classification::Stabilizer);

    // Degenerate n = 0 member of the odd family: [[3,1,2]] again.
    CHECK(family_2np3_2np1_2(0, 3).K() == 3);

    GraphCode rains = family_rains_2np3(1, 4);
    CHECK(rains.K() == 16 * 3); // p^{2n} (p-1)
    CHECK(rains.d == 2);
}

TEST_CASE("p = 6 codes on the weighted 4-star") {
    GraphCode stab = family_4_2_2_6();
    CHECK(code_label(stab) == "[[4,2,2]]_6");
    CHECK(stab.K() == 36);
    CHECK(stab.stabilizer_size() == 36);
    CHECK(stab.classification == Classification::Stabilizer);

    GraphCode nonadd = family_4_36_2_6();
    CHECK(nonadd.K() == 36);
    CHECK(nonadd.stabilizer_size() == 6);
    CHECK(nonadd.classification == Classification::Nonadditive);
    CHECK(code_label(nonadd) == "((4,36,2))_6");

    // Both live on the same frozen graph: weights (1,1,5) on hub 4.
    CHECK(stab.graph == nonadd.graph);
    CHECK(stab.graph.at(0, 3) == 1);
    CHECK(stab.graph.at(1, 3) == 1);
    CHECK(stab.graph.at(2, 3) == 5);
}

TEST_CASE("distance-3 families") {
    GraphCode c513 = family_5_1_3(2);
    CHECK(c513.K() == 2);
    CHECK(minimum_distance(c513) == 3);

    GraphCode c553 = family_5_p_3(5);
    CHECK(c553.K() == 5);
    CHECK(c553.classification == Classification::Nonadditive);

    GraphCode c623 = family_6_2_3(5);
    CHECK(c623.K() == 25);
    CHECK(c623.classification == Classification::Stabilizer);
    CHECK(c623.graph.at(5, 0) == 4); // the -1 edge of L_6

    GraphCode c733 = family_7_3_3(3);
    CHECK(c733.K() == 27);
    CHECK(c733.classification == Classification::Stabilizer);

    GraphCode c843 = family_8_4_3(3);
    CHECK(c843.K() == 81);
    CHECK(c843.classification == Classification::Stabilizer);

    GraphCode c824 = family_8_2_4(3);
    CHECK(c824.K() == 9);
    CHECK(c824.d == 4);
    CHECK(c824.classification == Classification::Stabilizer);
}

TEST_CASE("family constraints are rejected with FamilyError") {
    CHECK_THROWS_AS(family_3_1_2(4), FamilyError);
    CHECK_THROWS_AS(family_3_pm1_2(5), FamilyError);
    CHECK_THROWS_AS(family_3_pm1_2(2), FamilyError);
    CHECK_THROWS_WITH_AS(family_5_p_3(3), doctest::Contains("p > 3"), FamilyError);
    CHECK_THROWS_AS(family_6_2_3(4), FamilyError);
    CHECK_THROWS_AS(family_8_2_4(2), FamilyError);
    CHECK_THROWS_AS(family_2n_2nm2_2(0, 3), FamilyError);
    CHECK_THROWS_AS(family_rains_2np3(1, 3), FamilyError);
    CHECK_THROWS_AS(family_2np3_2np1_2(1, 4), FamilyError);
}

TEST_CASE("family catalog and dispatch") {
    const auto& cat = family_catalog();
    CHECK(cat.size() == 13);
    std::set<std::string> names;
    for (const auto& fs : cat) names.insert(fs.name);
    CHECK(names.size() == cat.size());

    GraphCode via = make_family("6_2_3", 5);
    CHECK(via.clique == family_6_2_3(5).clique);
    GraphCode via_n = make_family("2n_2nm2_2", 3, 2);
    CHECK(via_n.K() == 9);

    CHECK_THROWS_AS(make_family("nope", 3), InputError);
    CHECK_THROWS_AS(make_family("6_2_3", std::nullopt), InputError);
    CHECK_THROWS_AS(make_family("6_2_3", 5, 4), InputError);
    CHECK_THROWS_AS(make_family("4_2_2_6", 6), InputError);
    CHECK_THROWS_AS(make_family("2n_2nm2_2", 3), InputError);
}

TEST_CASE("the nine qutrit catalogue codes") {
    auto codes = table1_codes();
    REQUIRE(codes.size() == 9);
    const std::vector<std::string> labels = {
        "[[3,1,2]]_3", "[[4,2,2]]_3", "[[5,3,2]]_3", "[[5,1,3]]_3", "[[6,4,2]]_3",
        "[[6,2,3]]_3", "[[7,3,3]]_3", "[[8,4,3]]_3", "[[8,2,4]]_3"};
    for (std::size_t i = 0; i < codes.size(); ++i) {
        CHECK(code_label(codes[i]) == labels[i]);
        CHECK(codes[i].classification == Classification::Stabilizer);
        CHECK(codes[i].p() == 3);
        // every constructor validated its clique; cross-check the distance
        CHECK(minimum_distance(codes[i]) == codes[i].d);
    }
}

TEST_CASE("spot oracle checks on family members") {
    // Exhaustive verification of a couple of cheap members at non-tabulated
    // parameters.
    CHECK(kl_verify(family_3_pm1_2(4)).ok);
    CHECK(kl_verify(family_2n_2nm2_2(2, 2)).ok);
    CHECK(kl_verify(family_5_1_3(2)).ok);
    CHECK(kl_verify(family_4_36_2_6()).ok);
}
