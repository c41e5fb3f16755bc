#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "graphcode/zp.hpp"

using namespace graphcode;

TEST_CASE("mod_reduce maps into [0,p)") {
    CHECK(mod_reduce(-1, 5) == 4);
    CHECK(mod_reduce(-7, 5) == 3);
    CHECK(mod_reduce(12, 5) == 2);
    CHECK(mod_reduce(0, 5) == 0);
    CHECK(mod_reduce(-6, 6) == 0);
}

TEST_CASE("pow_size computes p^n and enforces the cap") {
    CHECK(pow_size(3, 4, 1u << 20) == 81);
    CHECK(pow_size(2, 10, 1u << 20) == 1024);
    CHECK(pow_size(7, 0, 16) == 1);
    CHECK_THROWS_AS(pow_size(10, 10, 1u << 20), ResourceError);
}

TEST_CASE("ZpVec reduces entries and does arithmetic mod p") {
    ZpVec v(5, {7, -1, 0});
    CHECK(v[0] == 2);
    CHECK(v[1] == 4);
    CHECK(v[2] == 0);
    CHECK(v.str() == "(2,4,0)");

    ZpVec w(5, {1, 1, 1});
    CHECK((v + w).entries() == std::vector<i64>{3, 0, 1});
    CHECK((v - w).entries() == std::vector<i64>{1, 3, 4});
    CHECK((v * 3).entries() == std::vector<i64>{1, 2, 0});
    CHECK((v * 0).is_zero());
}

TEST_CASE("ZpVec ordering is lexicographic") {
    ZpVec a(3, {0, 1, 2});
    ZpVec b(3, {0, 2, 0});
    ZpVec c(3, {1, 0, 0});
    CHECK(a < b);
    CHECK(b < c);
    CHECK_FALSE(c < a);
    std::vector<ZpVec> vs{c, a, b};
    std::sort(vs.begin(), vs.end());
    CHECK(vs[0] == a);
    CHECK(vs[2] == c);
}

TEST_CASE("dot and support") {
    ZpVec a(7, {1, 2, 3});
    ZpVec b(7, {3, 0, 5});
    CHECK(dot(a, b) == (3 + 0 + 15) % 7);
    CHECK(support(ZpVec(5, {0, 3, 0, 1})) == std::vector<int>{1, 3});
    CHECK(support(ZpVec(5, 4)).empty());
}

TEST_CASE("index codec round-trips with vertex 0 most significant") {
    // (l1, l2, l3) <-> l1*p^2 + l2*p + l3
    ZpVec v(3, {1, 0, 2});
    CHECK(encode_index(v) == 1 * 9 + 0 * 3 + 2);
    CHECK(decode_index(3, 3, 11) == v);
    for (std::size_t idx = 0; idx < 16; ++idx)
        CHECK(encode_index(decode_index(2, 4, idx)) == idx);
}

TEST_CASE("WeightedGraph stores symmetric reduced weights, rejects loops") {
    WeightedGraph g = WeightedGraph::empty(5, 3);
    g.set_edge(0, 2, -1);
    CHECK(g.at(0, 2) == 4);
    CHECK(g.at(2, 0) == 4);
    CHECK(g.at(0, 1) == 0);
    CHECK_THROWS_AS(g.set_edge(1, 1, 2), DimensionError);
    CHECK_THROWS_AS(g.set_edge(0, 3, 2), DimensionError);
    CHECK(g.row(0).entries() == std::vector<i64>{0, 0, 4});
}

TEST_CASE("mat_vec multiplies by the adjacency matrix") {
    WeightedGraph g = WeightedGraph::empty(3, 3);
    g.set_edge(0, 1, 1);
    g.set_edge(1, 2, 2);
    ZpVec s(3, {1, 1, 0});
    // row0*1 + row1*1 = (0,1,0)+(1,0,2) = (1,1,2)
    CHECK(mat_vec(g, s).entries() == std::vector<i64>{1, 1, 2});
}

TEST_CASE("howell_basis of a single vector mod a prime") {
    // <(1,0,2)> in Z_3^3 is cyclic of order 3.
    ZpModuleBasis b = howell_basis({ZpVec(3, {1, 0, 2})});
    CHECK(b.degrees == std::vector<i64>{3});
    CHECK(b.size() == 3);
    auto els = b.elements();
    CHECK(els.size() == 3);
    CHECK(b.contains(ZpVec(3, {2, 0, 1})));
    CHECK_FALSE(b.contains(ZpVec(3, {1, 1, 0})));
}

TEST_CASE("howell_basis handles non-prime moduli and torsion") {
    // (2,0) has additive order 2 mod 4.
    ZpModuleBasis b2 = howell_basis({ZpVec(4, {2, 0})});
    CHECK(b2.degrees == std::vector<i64>{2});

    // (2,1) has order 4 mod 4: 2*(2,1) = (0,2) != 0.
    ZpModuleBasis b4 = howell_basis({ZpVec(4, {2, 1})});
    CHECK(b4.degrees == std::vector<i64>{4});
    CHECK(b4.contains(ZpVec(4, {0, 2})));

    // Z_6^1 generated by 2 and 3 is everything.
    ZpModuleBasis b6 = howell_basis({ZpVec(6, {2}), ZpVec(6, {3})});
    CHECK(b6.size() == 6);
}

TEST_CASE("howell degrees are prime powers sorted descending") {
    // The diagonal module <(2,0),(0,3)> in Z_6^2 has order 2*3 = 6.
    ZpModuleBasis b = howell_basis({ZpVec(6, {2, 0}), ZpVec(6, {0, 3})});
    CHECK(b.size() == 6);
    CHECK(std::is_sorted(b.degrees.rbegin(), b.degrees.rend()));
    for (i64 d : b.degrees) {
        // prime power: only one prime divides it
        int distinct = 0;
        i64 m = d;
        for (i64 q = 2; q * q <= m; ++q)
            if (m % q == 0) {
                ++distinct;
                while (m % q == 0) m /= q;
            }
        if (m > 1) ++distinct;
        CHECK(distinct == 1);
    }
}

TEST_CASE("module elements enumerate exactly the spanned set") {
    ZpModuleBasis b = howell_basis({ZpVec(4, {1, 2}), ZpVec(4, {0, 2})});
    auto els = b.elements();
    std::set<std::vector<i64>> got;
    for (const auto& v : els) got.insert(v.entries());
    CHECK(got.size() == static_cast<std::size_t>(b.size()));
    // brute force: all combinations a*(1,2)+b*(0,2)
    std::set<std::vector<i64>> want;
    for (i64 a = 0; a < 4; ++a)
        for (i64 c = 0; c < 4; ++c)
            want.insert((ZpVec(4, {1, 2}) * a + ZpVec(4, {0, 2}) * c).entries());
    CHECK(got == want);
}

TEST_CASE("solve_orthogonal finds the full dual module") {
    // Dual of <(1,1,1)> in Z_3^3 has order 9.
    ZpModuleBasis d = solve_orthogonal({ZpVec(3, {1, 1, 1})}, 3, 3);
    CHECK(d.size() == 9);
    for (const auto& v : d.elements()) CHECK(dot(v, ZpVec(3, {1, 1, 1})) == 0);

    // Dual over a composite modulus: <(2,0)> in Z_4^2; s.(2,0)=0 iff 2*s0=0 mod 4
    // iff s0 even: 2*4 = 8 solutions.
    ZpModuleBasis d2 = solve_orthogonal({ZpVec(4, {2, 0})}, 4, 2);
    CHECK(d2.size() == 8);

    // Empty constraint list: everything.
    ZpModuleBasis all = solve_orthogonal({}, 5, 2);
    CHECK(all.size() == 25);
}

TEST_CASE("solve_orthogonal cross-checked against brute force") {
    for (i64 p : {2, 3, 4, 6}) {
        std::vector<ZpVec> cons{ZpVec(p, {1, 2, 0}), ZpVec(p, {0, 1, 1})};
        ZpModuleBasis d = solve_orthogonal(cons, p, 3);
        std::size_t brute = 0;
        for (std::size_t idx = 0; idx < pow_size(p, 3, 1u << 20); ++idx) {
            ZpVec s = decode_index(p, 3, idx);
            bool ok = true;
            for (const auto& c : cons) ok = ok && dot(s, c) == 0;
            brute += ok;
        }
        CHECK(static_cast<std::size_t>(d.size()) == brute);
        for (const auto& v : d.elements())
            for (const auto& c : cons) CHECK(dot(v, c) == 0);
    }
}

TEST_CASE("duality |M| * |M_perp| = p^n for random modules") {
    // For modules over Z_p (including composite p) the annihilator satisfies
    // the order identity; verify on a spread of generators.
    struct Case { i64 p; std::vector<std::vector<i64>> gens; int n; };
    std::vector<Case> cases = {
        {3, {{1, 0, 2}}, 3},
        {4, {{2, 0}, {0, 1}}, 2},
        {6, {{2, 3}}, 2},
        {6, {{1, 1, 1}, {0, 2, 4}}, 3},
        {8, {{4, 2}}, 2},
    };
    for (const auto& c : cases) {
        std::vector<ZpVec> gens;
        for (const auto& g : c.gens) gens.push_back(ZpVec(c.p, g));
        ZpModuleBasis m = howell_basis(gens);
        ZpModuleBasis d = solve_orthogonal(gens, c.p, c.n);
        std::size_t total = pow_size(c.p, c.n, 1u << 30);
        CHECK(static_cast<std::size_t>(m.size()) * static_cast<std::size_t>(d.size()) == total);
    }
}
