#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphcode/code_model.hpp"
#include "graphcode/zp.hpp"

namespace graphcode {

// Standard graphs (1-based vertex labels in the docs; storage is 0-based).
// star_graph: all leaves attach to `center` (default: vertex 2 when n = 3,
// the last vertex otherwise), unit weights.
WeightedGraph star_graph(i64 p, int n, int center = 0);
// loop_graph: cycle 1-2-...-n-1; the closing edge (n,1) carries
// special_edge_weight (default 1).
WeightedGraph loop_graph(i64 p, int n, i64 special_edge_weight = 1);
// wheel_graph: hub = vertex n joined to every rim vertex; rim 1..n-1 in cycle
// order.  For n = 8 the rim cycle order is the build-scanned labeling
// (1,2,6,7,3,4,5) — the unique (up to reflection) order certified at
// distance 4 by the oracle.
WeightedGraph wheel_graph(i64 p, int n);
// matching_graph: perfect matching (1,2),(3,4),...,(n2-1,n2), unit weights.
WeightedGraph matching_graph(i64 p, int n2);
// Block-diagonal disjoint union (same modulus).
WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b);

// Analytic families.  Every constructor validates the clique conditions,
// classifies the result, and throws FamilyError on a constraint violation.
GraphCode family_3_1_2(i64 p);            // odd p >= 3: [[3,1,2]]_p
GraphCode family_3_pm1_2(i64 p);          // even p >= 4: ((3,p-1,2))_p
GraphCode family_2n_2nm2_2(int n, i64 p); // n >= 1, p >= 2: [[2n,2n-2,2]]_p
GraphCode family_4_2_2_6();               // [[4,2,2]]_6
GraphCode family_4_36_2_6();              // ((4,36,2))_6
GraphCode family_2np3_2np1_2(int n, i64 p); // n >= 0, odd p: [[2n+3,2n+1,2]]_p
GraphCode family_rains_2np3(int n, i64 p);  // n >= 0, even p: ((2n+3,p^{2n}(p-1),2))_p
GraphCode family_5_1_3(i64 p);            // p >= 2: [[5,1,3]]_p
GraphCode family_5_p_3(i64 p);            // p > 3: ((5,p,3))_p, nonadditive
GraphCode family_6_2_3(i64 p);            // odd p >= 3: [[6,2,3]]_p
GraphCode family_7_3_3(i64 p);            // odd p >= 3: [[7,3,3]]_p
GraphCode family_8_4_3(i64 p);            // odd p >= 3: [[8,4,3]]_p
GraphCode family_8_2_4(i64 p);            // odd p >= 3: [[8,2,4]]_p

struct FamilySpec {
    std::string name;
    std::string summary;
    bool takes_p = true;
    bool takes_n = false;
};

const std::vector<FamilySpec>& family_catalog();

// Dispatch by catalog name; parameters checked against the family's arity.
GraphCode make_family(const std::string& name, std::optional<i64> p,
                      std::optional<int> n = std::nullopt);

// The nine qutrit catalogue codes: [[3,1,2]], [[4,2,2]], [[5,3,2]], [[5,1,3]],
// [[6,4,2]], [[6,2,3]], [[7,3,3]], [[8,4,3]], [[8,2,4]] at p = 3.
std::vector<GraphCode> table1_codes();

} // namespace graphcode
