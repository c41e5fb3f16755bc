#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "graphcode/composite.hpp"
#include "graphcode/families.hpp"
#include "graphcode/kl_oracle.hpp"

using namespace graphcode;

TEST_CASE("canonical_bezout") {
    BezoutPair b32 = canonical_bezout(3, 2);
    CHECK(b32.alpha == 1);
    CHECK(b32.beta == -1);
    for (auto [p, q] : std::vector<std::pair<i64, i64>>{{3, 2}, {2, 3}, {5, 3}, {7, 4}, {9, 8}}) {
        BezoutPair bz = canonical_bezout(p, q);
        CHECK(bz.alpha * p + bz.beta * q == 1);
        CHECK(bz.alpha >= 0);
        CHECK(bz.alpha < q);
    }
    CHECK_THROWS_AS(canonical_bezout(4, 6), InputError);
    CHECK_THROWS_AS(canonical_bezout(1, 3), InputError);
}

TEST_CASE("crt_split and crt_combine are mutually inverse") {
    WeightedGraph g = loop_graph(6, 5, -1);
    auto [gp, gq] = crt_split(g, 3, 2);
    CHECK(gp.p == 3);
    CHECK(gq.p == 2);
    // entrywise: q * w mod p and p * w mod q
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            CHECK(gp.at(a, b) == mod_reduce(2 * g.at(a, b), 3));
            CHECK(gq.at(a, b) == mod_reduce(3 * g.at(a, b), 2));
        }
    CHECK(crt_combine(gp, gq) == g);

    // combine-then-split round trip
    WeightedGraph hp = star_graph(5, 4), hq = loop_graph(3, 4);
    WeightedGraph h = crt_combine(hp, hq);
    auto [hp2, hq2] = crt_split(h, 5, 3);
    CHECK(hp2 == hp);
    CHECK(hq2 == hq);

    CHECK_THROWS_AS(crt_split(g, 2, 2), InputError);
    CHECK_THROWS_AS(crt_split(g, 4, 3), InputError);
}

TEST_CASE("relabel_digit is a bijection Z_p x Z_q -> Z_pq") {
    for (auto [p, q] : std::vector<std::pair<i64, i64>>{{3, 2}, {4, 3}, {5, 2}}) {
        std::set<i64> seen;
        for (i64 s = 0; s < p; ++s)
            for (i64 t = 0; t < q; ++t) {
                i64 l = relabel_digit(p, q, s, t);
                CHECK(l >= 0);
                CHECK(l < p * q);
                seen.insert(l);
            }
        CHECK(seen.size() == static_cast<std::size_t>(p * q));
    }
    CHECK(relabel_digit(3, 2, 1, 0) == 2);
    CHECK(relabel_digit(3, 2, 0, 1) == 3);
}

TEST_CASE("crt_merge_vector performs componentwise CRT interpolation") {
    ZpVec cp(3, {1, 2, 0});
    ZpVec cq(2, {1, 0, 1});
    ZpVec e = crt_merge_vector(cp, cq);
    CHECK(e.p() == 6);
    for (std::size_t a = 0; a < 3; ++a) {
        CHECK(mod_reduce(e[a], 3) == cp[a]);
        CHECK(mod_reduce(e[a], 2) == cq[a]);
    }
    CHECK_THROWS_AS(crt_merge_vector(ZpVec(3, 2), ZpVec(2, 3)), DimensionError);
}

TEST_CASE("relabel_isometry_index validates inputs") {
    CHECK_THROWS_AS(relabel_isometry_index(ZpVec(3, 2), ZpVec(2, 3)), DimensionError);
    CHECK_THROWS_AS(relabel_isometry_index(ZpVec(4, 2), ZpVec(2, 2)), InputError);
    ZpVec out = relabel_isometry_index(ZpVec(3, {1, 0}), ZpVec(2, {0, 1}));
    CHECK(out.entries() == std::vector<i64>{2, 3});
}

TEST_CASE("combined graph states factor into relabeled products") {
    // fixed (mod 3, mod 2) graph pairs on 2 and 3 vertices
    WeightedGraph a3 = WeightedGraph::empty(3, 2), a2 = WeightedGraph::empty(2, 2);
    a3.set_edge(0, 1, 2);
    a2.set_edge(0, 1, 1);
    Theorem2Report r1 = theorem2_check(a3, a2);
    CHECK(r1.ok);
    CHECK(r1.max_dev < 1e-12);

    WeightedGraph b3 = star_graph(3, 3), b2 = loop_graph(2, 3);
    Theorem2Report r2 = theorem2_check(b3, b2);
    CHECK(r2.ok);
    CHECK(r2.max_dev < 1e-12);

    WeightedGraph c3 = loop_graph(3, 3), c2 = WeightedGraph::empty(2, 3);
    CHECK(theorem2_check(c3, c2).ok);

    CHECK_THROWS_AS(theorem2_check(a3, b2), DimensionError);
}

TEST_CASE("product of the two [[5,1,3]] factors is the mod-6 family member") {
    GraphCode c2 = family_5_1_3(2);
    GraphCode c3 = family_5_1_3(3);
    GraphCode prod = product_code(c3, c2);
    CHECK(prod.p() == 6);
    CHECK(prod.K() == 6);
    CHECK(prod.d == 3);
    CHECK(prod.classification == Classification::Stabilizer);
    CHECK(code_label(prod) == "[[5,1,3]]_6");
    CHECK(prod.clique == family_5_1_3(6).clique);
    // The merged pentagon carries edge weight q*beta^2 + p*alpha^2 = 2 + 3 = 5,
    // a unit-rescaled cousin of the mod-6 family graph rather than a copy of it.
    WeightedGraph pentagon5 = WeightedGraph::empty(6, 5);
    for (int a = 0; a < 5; ++a) pentagon5.set_edge(a, (a + 1) % 5, 5);
    CHECK(prod.graph == pentagon5);

    // argument order does not change the result
    GraphCode swapped = product_code(c2, c3);
    CHECK(swapped.clique == prod.clique);
    CHECK(swapped.graph == prod.graph);
}

TEST_CASE("product_code rejects incompatible factors") {
    CHECK_THROWS_AS(product_code(family_5_1_3(2), family_3_1_2(3)), DimensionError);
    CHECK_THROWS_AS(product_code(family_5_1_3(2), family_5_1_3(4)), InputError);
    GraphCode d2 = family_5_1_3(3);
    GraphCode d3 = family_5_p_3(4);
    CHECK(d2.d == d3.d);
    // 12^5 amplitudes exceed the default dense-state bound
    CHECK_THROWS_AS(product_code(d2, d3), ResourceError);
    GraphCode mixed = product_code(d2, d3, true, std::size_t{1} << 18);
    CHECK(mixed.K() == 12);
    CHECK(mixed.p() == 12);
}

TEST_CASE("the frozen binary [[6,1,3]] factor") {
    GraphCode code = binary_6_1_3();
    CHECK(code.p() == 2);
    CHECK(code.n() == 6);
    CHECK(code.d == 3);
    CHECK(code.K() == 2);
    CHECK(code.classification == Classification::Stabilizer);
    CHECK(code_label(code) == "[[6,1,3]]_2");
    CHECK(code.stabilizer_size() == 32);
    // 5-cycle on 1..5 plus the pendant vertex 6 on 5
    CHECK(code.graph.at(0, 4) == 1);
    CHECK(code.graph.at(4, 5) == 1);
    CHECK(code.graph.at(0, 5) == 0);
    CHECK(kl_verify(code).ok);
}

TEST_CASE("((6,2p^2,3))_2p member at p = 3") {
    GraphCode code = family_6_2p2_3(3);
    CHECK(code.p() == 6);
    CHECK(code.K() == 18);
    CHECK(code.d == 3);
    CHECK(code.classification == Classification::Stabilizer);
    CHECK(code.degrees == std::vector<i64>{3, 3, 2});
    CHECK(code.stabilizer_size() == 2592);
    CHECK(code_label(code) == "((6,18,3))_6");

    // frozen H_6 adjacency
    const std::vector<std::vector<i64>> h6 = {
        {0, 5, 0, 0, 3, 4}, {5, 0, 5, 0, 0, 0}, {0, 5, 0, 5, 0, 0},
        {0, 0, 5, 0, 5, 0}, {3, 0, 0, 5, 0, 5}, {4, 0, 0, 0, 5, 0}};
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(code.graph.at(a, b) == h6[a][b]);

    CHECK_THROWS_AS(family_6_2p2_3(4), FamilyError);
    CHECK_THROWS_AS(family_6_2p2_3(1), FamilyError);
}

TEST_CASE("the combined-graph family equals the direct product construction") {
    GraphCode direct = family_6_2p2_3(3);
    // the merged states have 6^6 amplitudes, above the default bound
    GraphCode prod = product_code(family_6_2_3(3), binary_6_1_3(), true, std::size_t{1} << 16);
    CHECK(prod.graph == direct.graph);
    CHECK(prod.clique == direct.clique);
    CHECK(prod.K() == 18);
    CHECK(prod.classification == Classification::Stabilizer);
}

TEST_CASE("sampled oracle spot check on the mod-6 combined code") {
    GraphCode code = family_6_2p2_3(3);
    KlOptions opts;
    opts.mode = KlMode::Sampled;
    opts.samples = 500;
    opts.seed = 5;
    opts.state_bound = std::size_t{1} << 16; // the code states have 6^6 amplitudes
    KlReport rep = kl_verify(code, opts);
    CHECK(rep.ok);
    CHECK(rep.worst_dev < 1e-9);
}
