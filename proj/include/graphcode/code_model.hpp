#pragma once

#include <string>
#include <vector>

#include "graphcode/clique_search.hpp"
#include "graphcode/graph_state.hpp"
#include "graphcode/pauli.hpp"
#include "graphcode/zp.hpp"

namespace graphcode {

enum class Classification { Unclassified, Stabilizer, Nonadditive, SubcodeOfStabilizer };

std::string classification_name(Classification c);

// A code (G, K, d)_p spanned by the graph-state basis vectors of a coding clique.
struct GraphCode {
    WeightedGraph graph;
    std::vector<ZpVec> clique; // canonical: lex sorted, zero first
    int d = 1;
    Classification classification = Classification::Unclassified;
    ZpModuleBasis stabilizer; // basis of S = {s : s.c = 0 for all clique members}
    std::vector<i64> degrees; // module degrees of the clique (only when it is a group)

    std::size_t K() const { return clique.size(); }
    int n() const { return graph.n; }
    i64 p() const { return graph.p; }
    std::size_t stabilizer_size() const { return stabilizer.size(); }
};

// Sort lex and deduplicate; requires the zero vector to be present.
std::vector<ZpVec> canonicalize_clique(std::vector<ZpVec> vectors);

// Assemble a code and (by default) certify the clique conditions; throws
// ValidationError with the violation message on failure.
GraphCode make_code(WeightedGraph graph, std::vector<ZpVec> clique, int d, bool validate = true,
                    std::size_t cap = kDefaultVectorCap);

// S = {s in Z_p^n : s.c = 0 for all c in the clique}.
ZpModuleBasis stabilizer_set(const GraphCode& code);

// Closed under addition mod p (hence negation) and contains 0.
bool is_group(const std::vector<ZpVec>& vectors);

// Smallest additive group containing the vectors, sorted lex.
std::vector<ZpVec> group_closure(const std::vector<ZpVec>& vectors, std::size_t bound = 1u << 20);

// Theorem-style trichotomy: group -> Stabilizer; closure still a coding clique
// at distance d -> SubcodeOfStabilizer; otherwise Nonadditive. Updates the
// classification and (for groups) the degrees fields.
Classification classify(GraphCode& code, std::size_t cap = kDefaultVectorCap);

// Stabilizer elements G_s for each generator of stabilizer_set, Howell order.
std::vector<PauliOp> stabilizer_generators(const GraphCode& code);

// Largest d for which the clique conditions hold. K = 1 codes use the
// pure-state rule: minimum weight of a nonzero stabilizer element.
int minimum_distance(const GraphCode& code, std::size_t cap = kDefaultVectorCap);

enum class SingletonStatus { Saturates, Satisfies, Violates };

// Compare K against p^{n - 2(d-1)}.
SingletonStatus singleton_check(const GraphCode& code);
std::string singleton_name(SingletonStatus s);

// [[n, k, d]]_p for classified stabilizer codes with K = p^k; the generic
// ((n, K, d))_p form otherwise.
std::string code_label(const GraphCode& code);

} // namespace graphcode
