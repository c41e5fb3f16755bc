#include "graphcode/families.hpp"

namespace graphcode {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw FamilyError(msg);
}

ZpVec vec(i64 p, std::initializer_list<i64> vals) {
    ZpVec v(p, vals.size());
    std::size_t i = 0;
    for (i64 x : vals) v.set(i++, x);
    return v;
}

// Constructions below use 1-based vertex labels; storage is 0-based.
void edge1(WeightedGraph& g, int a, int b, i64 w) { g.set_edge(a - 1, b - 1, w); }

} // namespace

WeightedGraph star_graph(i64 p, int n, int center) {
    require(n >= 2, "star graph needs at least 2 vertices");
    if (center == 0) center = (n == 3) ? 2 : n;
    require(center >= 1 && center <= n, "star center out of range");
    WeightedGraph g = WeightedGraph::empty(p, n);
    for (int v = 1; v <= n; ++v)
        if (v != center) edge1(g, center, v, 1);
    return g;
}

WeightedGraph loop_graph(i64 p, int n, i64 special_edge_weight) {
    require(n >= 3, "loop graph needs at least 3 vertices");
    WeightedGraph g = WeightedGraph::empty(p, n);
    for (int v = 1; v < n; ++v) edge1(g, v, v + 1, 1);
    edge1(g, n, 1, special_edge_weight);
    return g;
}

WeightedGraph wheel_graph(i64 p, int n) {
    require(n >= 4, "wheel graph needs at least 4 vertices");
    WeightedGraph g = WeightedGraph::empty(p, n);
    for (int v = 1; v < n; ++v) edge1(g, n, v, 1);
    std::vector<int> rim;
    if (n == 8)
        rim = {1, 2, 6, 7, 3, 4, 5};
    else
        for (int v = 1; v < n; ++v) rim.push_back(v);
    for (std::size_t i = 0; i < rim.size(); ++i)
        edge1(g, rim[i], rim[(i + 1) % rim.size()], 1);
    return g;
}

WeightedGraph matching_graph(i64 p, int n2) {
    require(n2 >= 2 && n2 % 2 == 0, "matching graph needs an even vertex count");
    WeightedGraph g = WeightedGraph::empty(p, n2);
    for (int v = 1; v < n2; v += 2) edge1(g, v, v + 1, 1);
    return g;
}

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.p != b.p) throw DimensionError("disjoint_union: modulus mismatch");
    WeightedGraph g = WeightedGraph::empty(a.p, a.n + b.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) g.w[static_cast<std::size_t>(i * g.n + j)] = a.at(i, j);
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j)
            g.w[static_cast<std::size_t>((a.n + i) * g.n + (a.n + j))] = b.at(i, j);
    return g;
}

GraphCode family_3_1_2(i64 p) {
    require(p >= 3 && p % 2 == 1, "family 3_1_2 needs odd p >= 3");
    std::vector<ZpVec> clique;
    for (i64 l = 0; l < p; ++l) clique.push_back(vec(p, {l, 0, -l}));
    GraphCode code = make_code(star_graph(p, 3), std::move(clique), 2);
    classify(code);
    return code;
}

GraphCode family_3_pm1_2(i64 p) {
    require(p >= 4 && p % 2 == 0, "family 3_pm1_2 needs even p >= 4");
    const i64 q = p / 2;
    std::vector<ZpVec> clique;
    for (i64 l = 0; l < q; ++l) clique.push_back(vec(p, {l, 0, 2 * l}));
    for (i64 j = 0; j + 1 < q; ++j) clique.push_back(vec(p, {q + j, 0, 2 * j + 1}));
    GraphCode code = make_code(star_graph(p, 3), std::move(clique), 2);
    classify(code);
    return code;
}

GraphCode family_2n_2nm2_2(int n, i64 p) {
    require(n >= 1, "family 2n_2nm2_2 needs n >= 1");
    require(p >= 2, "family 2n_2nm2_2 needs p >= 2");
    const int nv = 2 * n;
    ZpVec odd(p, static_cast<std::size_t>(nv)), even(p, static_cast<std::size_t>(nv));
    for (int a = 0; a < nv; ++a) {
        if (a % 2 == 0)
            odd.set(static_cast<std::size_t>(a), 1); // vertices 1,3,5,...
        else
            even.set(static_cast<std::size_t>(a), 1); // vertices 2,4,6,...
    }
    ZpModuleBasis basis = solve_orthogonal({odd, even}, p, nv);
    GraphCode code = make_code(matching_graph(p, nv), basis.elements(), 2);
    classify(code);
    return code;
}

namespace {

WeightedGraph weighted_star_4_p6() {
    // leaf weights (1,1,5) on hub vertex 4: the unit-weight star rejects the
    // section's cliques at p = 6, this weighting is oracle-certified
    WeightedGraph g = WeightedGraph::empty(6, 4);
    edge1(g, 4, 1, 1);
    edge1(g, 4, 2, 1);
    edge1(g, 4, 3, 5);
    return g;
}

} // namespace

GraphCode family_4_2_2_6() {
    const i64 p = 6;
    std::vector<ZpVec> gens = {vec(p, {1, -1, 0, 0}), vec(p, {1, 0, -1, 0})};
    GraphCode code = make_code(weighted_star_4_p6(), group_closure(gens), 2);
    classify(code);
    return code;
}

GraphCode family_4_36_2_6() {
    const i64 p = 6;
    std::vector<ZpVec> clique;
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
            clique.push_back(vec(p, {a + b, -a, -b, (a == 1 && b == 1) ? 1 : 0}));
    GraphCode code = make_code(weighted_star_4_p6(), std::move(clique), 2);
    classify(code);
    return code;
}

GraphCode family_2np3_2np1_2(int n, i64 p) {
    require(n >= 0, "family 2np3_2np1_2 needs n >= 0");
    require(p >= 3 && p % 2 == 1, "family 2np3_2np1_2 needs odd p");
    const int nv = 2 * n + 3;
    WeightedGraph g = n == 0 ? star_graph(p, 3)
                             : disjoint_union(star_graph(p, 3), matching_graph(p, 2 * n));
    // exponent vectors of the two listed stabilizer generators
    ZpVec v1(p, static_cast<std::size_t>(nv)), v2(p, static_cast<std::size_t>(nv));
    v1.set(1, 1); // (0,1,0 | 1,0,1,0,...)
    v2.set(0, 1);
    v2.set(2, 1); // (1,0,1 | 0,1,0,1,...)
    for (int a = 3; a < nv; ++a) {
        if ((a - 3) % 2 == 0)
            v1.set(static_cast<std::size_t>(a), 1);
        else
            v2.set(static_cast<std::size_t>(a), 1);
    }
    ZpModuleBasis basis = solve_orthogonal({v1, v2}, p, nv);
    GraphCode code = make_code(std::move(g), basis.elements(), 2);
    classify(code);
    return code;
}

GraphCode family_rains_2np3(int n, i64 p) {
    require(n >= 0, "family rains_2np3 needs n >= 0");
    require(p >= 4 && p % 2 == 0, "family rains_2np3 needs even p >= 4");
    const int nv = 2 * n + 3;
    WeightedGraph g = n == 0 ? star_graph(p, 3)
                             : disjoint_union(star_graph(p, 3), matching_graph(p, 2 * n));
    const GraphCode base = family_3_pm1_2(p);
    std::vector<ZpVec> clique;
    std::vector<i64> s(static_cast<std::size_t>(2 * n), 0);
    while (true) {
        i64 sum_odd = 0, sum_even = 0; // 1-based positions within s
        for (int i = 0; i < 2 * n; ++i) {
            if (i % 2 == 0)
                sum_odd += s[static_cast<std::size_t>(i)];
            else
                sum_even += s[static_cast<std::size_t>(i)];
        }
        for (const auto& v : base.clique) {
            ZpVec c(p, static_cast<std::size_t>(nv));
            c.set(0, v[0] + sum_even);
            c.set(1, v[1] + sum_odd);
            c.set(2, v[2] + sum_even);
            for (int i = 0; i < 2 * n; ++i)
                c.set(static_cast<std::size_t>(3 + i), s[static_cast<std::size_t>(i)]);
            clique.push_back(std::move(c));
        }
        int i = 2 * n - 1;
        while (i >= 0) {
            if (++s[static_cast<std::size_t>(i)] < p) break;
            s[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    GraphCode code = make_code(std::move(g), std::move(clique), 2);
    classify(code);
    return code;
}

GraphCode family_5_1_3(i64 p) {
    require(p >= 2, "family 5_1_3 needs p >= 2");
    std::vector<ZpVec> clique;
    for (i64 j = 0; j < p; ++j) clique.push_back(vec(p, {j, j, j, j, j}));
    GraphCode code = make_code(loop_graph(p, 5), std::move(clique), 3);
    classify(code);
    return code;
}

GraphCode family_5_p_3(i64 p) {
    require(p > 3, "family 5_p_3 needs p > 3");
    std::vector<ZpVec> clique;
    for (i64 j = 0; j < p; ++j)
        if (j != 2 && j != p - 1) clique.push_back(vec(p, {j, j, j, j, j}));
    clique.push_back(vec(p, {2, -1, -1, 2, -1}));
    clique.push_back(vec(p, {-1, 2, 2, -1, 2}));
    GraphCode code = make_code(loop_graph(p, 5), std::move(clique), 3);
    classify(code);
    return code;
}

GraphCode family_6_2_3(i64 p) {
    require(p >= 3 && p % 2 == 1, "family 6_2_3 needs odd p >= 3");
    std::vector<ZpVec> clique;
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b) clique.push_back(vec(p, {a, a + b, b, -a, a - b, b}));
    GraphCode code = make_code(loop_graph(p, 6, -1), std::move(clique), 3);
    classify(code);
    return code;
}

GraphCode family_7_3_3(i64 p) {
    require(p >= 3 && p % 2 == 1, "family 7_3_3 needs odd p >= 3");
    std::vector<ZpVec> clique;
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
            for (i64 c = 0; c < p; ++c)
                clique.push_back(vec(p, {a + b + c, a, c, b, a - c, -c, b}));
    GraphCode code = make_code(loop_graph(p, 7), std::move(clique), 3);
    classify(code);
    return code;
}

GraphCode family_8_4_3(i64 p) {
    require(p >= 3 && p % 2 == 1, "family 8_4_3 needs odd p >= 3");
    std::vector<ZpVec> clique;
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
            for (i64 c = 0; c < p; ++c)
                for (i64 e = 0; e < p; ++e)
                    clique.push_back(
                        vec(p, {e, b - c, e - c, e - a, a + b, a - b + c + e, 2 * b, a - c + e}));
    GraphCode code = make_code(loop_graph(p, 8), std::move(clique), 3);
    classify(code);
    return code;
}

GraphCode family_8_2_4(i64 p) {
    require(p >= 3 && p % 2 == 1, "family 8_2_4 needs odd p >= 3");
    std::vector<ZpVec> clique;
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
            clique.push_back(vec(p, {b, a, a - b, 2 * b, 2 * a, b - a, b, b}));
    GraphCode code = make_code(wheel_graph(p, 8), std::move(clique), 4);
    classify(code);
    if (p == 3) {
        // the explicitly listed qutrit generators must span the same group
        std::vector<ZpVec> gens = {vec(p, {0, 1, 1, 0, 2, 2, 0, 0}),
                                   vec(p, {1, 0, 2, 2, 0, 1, 1, 1})};
        if (group_closure(gens) != code.clique)
            throw ValidationError("family 8_2_4: qutrit generator span mismatch");
    }
    return code;
}

const std::vector<FamilySpec>& family_catalog() {
    static const std::vector<FamilySpec> cat = {
        {"3_1_2", "[[3,1,2]]_p on the 3-star, odd p >= 3", true, false},
        {"3_pm1_2", "((3,p-1,2))_p on the 3-star, even p >= 4", true, false},
        {"2n_2nm2_2", "[[2n,2n-2,2]]_p on the 2n-matching, n >= 1, p >= 2", true, true},
        {"4_2_2_6", "[[4,2,2]]_6 on the weighted 4-star", false, false},
        {"4_36_2_6", "((4,36,2))_6 on the weighted 4-star", false, false},
        {"2np3_2np1_2", "[[2n+3,2n+1,2]]_p on star + matching, n >= 0, odd p", true, true},
        {"rains_2np3", "((2n+3,p^{2n}(p-1),2))_p on star + matching, n >= 0, even p", true, true},
        {"5_1_3", "[[5,1,3]]_p on the 5-loop, p >= 2", true, false},
        {"5_p_3", "((5,p,3))_p on the 5-loop, p > 3, nonadditive", true, false},
        {"6_2_3", "[[6,2,3]]_p on the 6-loop with one negative edge, odd p >= 3", true, false},
        {"7_3_3", "[[7,3,3]]_p on the 7-loop, odd p >= 3", true, false},
        {"8_4_3", "[[8,4,3]]_p on the 8-loop, odd p >= 3", true, false},
        {"8_2_4", "[[8,2,4]]_p on the 8-wheel, odd p >= 3", true, false},
    };
    return cat;
}

GraphCode make_family(const std::string& name, std::optional<i64> p, std::optional<int> n) {
    const FamilySpec* spec = nullptr;
    for (const auto& fs : family_catalog())
        if (fs.name == name) {
            spec = &fs;
            break;
        }
    if (!spec) throw InputError("unknown family '" + name + "'");
    if (spec->takes_p && !p) throw InputError("family '" + name + "' needs a modulus p");
    if (!spec->takes_p && p) throw InputError("family '" + name + "' takes no modulus");
    if (spec->takes_n && !n) throw InputError("family '" + name + "' needs a size parameter n");
    if (!spec->takes_n && n) throw InputError("family '" + name + "' takes no size parameter");

    if (name == "3_1_2") return family_3_1_2(*p);
    if (name == "3_pm1_2") return family_3_pm1_2(*p);
    if (name == "2n_2nm2_2") return family_2n_2nm2_2(*n, *p);
    if (name == "4_2_2_6") return family_4_2_2_6();
    if (name == "4_36_2_6") return family_4_36_2_6();
    if (name == "2np3_2np1_2") return family_2np3_2np1_2(*n, *p);
    if (name == "rains_2np3") return family_rains_2np3(*n, *p);
    if (name == "5_1_3") return family_5_1_3(*p);
    if (name == "5_p_3") return family_5_p_3(*p);
    if (name == "6_2_3") return family_6_2_3(*p);
    if (name == "7_3_3") return family_7_3_3(*p);
    if (name == "8_4_3") return family_8_4_3(*p);
    if (name == "8_2_4") return family_8_2_4(*p);
    throw InputError("unknown family '" + name + "'"); // unreachable
}

std::vector<GraphCode> table1_codes() {
    std::vector<GraphCode> out;
    out.push_back(family_3_1_2(3));
    out.push_back(family_2n_2nm2_2(2, 3));   // [[4,2,2]]_3
    out.push_back(family_2np3_2np1_2(1, 3)); // [[5,3,2]]_3
    out.push_back(family_5_1_3(3));
    out.push_back(family_2n_2nm2_2(3, 3));   // [[6,4,2]]_3
    out.push_back(family_6_2_3(3));
    out.push_back(family_7_3_3(3));
    out.push_back(family_8_4_3(3));
    out.push_back(family_8_2_4(3));
    return out;
}

} // namespace graphcode
