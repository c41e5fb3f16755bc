#include "graphcode/code_model.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace graphcode {

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Stabilizer: return "Stabilizer";
        case Classification::Nonadditive: return "Nonadditive";
        case Classification::SubcodeOfStabilizer: return "SubcodeOfStabilizer";
        default: return "Unclassified";
    }
}

std::vector<ZpVec> canonicalize_clique(std::vector<ZpVec> vectors) {
    if (vectors.empty()) throw InputError("empty clique");
    const i64 p = vectors.front().p();
    const std::size_t n = vectors.front().size();
    for (const auto& v : vectors)
        if (v.p() != p || v.size() != n) throw DimensionError("clique vectors disagree in p or n");
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    return vectors;
}

GraphCode make_code(WeightedGraph graph, std::vector<ZpVec> clique, int d, bool validate,
                    std::size_t cap) {
    GraphCode code;
    code.graph = std::move(graph);
    code.clique = canonicalize_clique(std::move(clique));
    code.d = d;
    if (d < 1 || d > code.graph.n + 1) throw DimensionError("code distance out of range");
    if (validate) {
        CliqueViolation v;
        if (!is_coding_clique(code.graph, d, code.clique, &v, cap))
            throw ValidationError("clique condition " + std::to_string(v.condition) +
                                  " failed: " + v.message);
    }
    code.stabilizer = solve_orthogonal(code.clique, code.graph.p, code.graph.n);
    return code;
}

ZpModuleBasis stabilizer_set(const GraphCode& code) {
    return solve_orthogonal(code.clique, code.graph.p, code.graph.n);
}

bool is_group(const std::vector<ZpVec>& vectors) {
    if (vectors.empty()) return false;
    std::set<ZpVec> s(vectors.begin(), vectors.end());
    const ZpVec zero(vectors.front().p(), vectors.front().size());
    if (!s.count(zero)) return false;
    for (const auto& a : s) {
        if (!s.count(zero - a)) return false;
        for (const auto& b : s)
            if (!s.count(a + b)) return false;
    }
    return true;
}

std::vector<ZpVec> group_closure(const std::vector<ZpVec>& vectors, std::size_t bound) {
    if (vectors.empty()) throw InputError("group_closure: empty input");
    const ZpVec zero(vectors.front().p(), vectors.front().size());
    std::set<ZpVec> closure;
    closure.insert(zero);
    std::queue<ZpVec> frontier;
    frontier.push(zero);
    while (!frontier.empty()) {
        ZpVec cur = frontier.front();
        frontier.pop();
        for (const auto& gen : vectors) {
            ZpVec nxt = cur + gen;
            if (closure.insert(nxt).second) {
                if (closure.size() > bound) throw ResourceError("group closure exceeds size bound");
                frontier.push(std::move(nxt));
            }
        }
    }
    return {closure.begin(), closure.end()};
}

Classification classify(GraphCode& code, std::size_t cap) {
    if (is_group(code.clique)) {
        code.classification = Classification::Stabilizer;
        code.degrees = howell_basis(code.clique).degrees;
        return code.classification;
    }
    code.degrees.clear();
    std::vector<ZpVec> closure = group_closure(code.clique);
    if (is_coding_clique(code.graph, code.d, closure, nullptr, cap))
        code.classification = Classification::SubcodeOfStabilizer;
    else
        code.classification = Classification::Nonadditive;
    return code.classification;
}

std::vector<PauliOp> stabilizer_generators(const GraphCode& code) {
    std::vector<PauliOp> out;
    out.reserve(code.stabilizer.generators.size());
    for (const auto& s : code.stabilizer.generators)
        out.push_back(stabilizer_element(code.graph, s));
    return out;
}

namespace {

int pair_weight(const ZpVec& s, const ZpVec& z) {
    int w = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
        if (s[a] != 0 || z[a] != 0) ++w;
    return w;
}

} // namespace

int minimum_distance(const GraphCode& code, std::size_t cap) {
    const WeightedGraph& g = code.graph;
    if (code.K() == 1) {
        // Pure (K = 1) codes: minimum weight of a nonzero stabilizer element.
        const std::size_t dim = pow_size(g.p, g.n, cap);
        int best = g.n + 1;
        for (std::size_t idx = 1; idx < dim; ++idx) {
            ZpVec s = decode_index(g.p, g.n, idx);
            best = std::min(best, pair_weight(s, mat_vec(g, s)));
        }
        return best;
    }

    const std::size_t dim = pow_size(g.p, g.n, cap);
    std::vector<std::size_t> diffs;
    for (std::size_t i = 0; i < code.clique.size(); ++i)
        for (std::size_t j = 0; j < code.clique.size(); ++j)
            if (i != j) diffs.push_back(encode_index(code.clique[i] - code.clique[j]));
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());

    VecBitmap cov(g.p, g.n, cap);
    int best = 1;
    for (int d = 2; d <= g.n + 1; ++d) {
        // errors of weight exactly d-1 join the covered set and purity set
        accumulate_covered(g, d - 1, d - 1, cov);
        for (std::size_t idx = 0; idx < dim; ++idx) {
            ZpVec s = decode_index(g.p, g.n, idx);
            if (pair_weight(s, mat_vec(g, s)) != d - 1) continue;
            for (const auto& c : code.clique)
                if (dot(c, s) != 0) return best;
        }
        for (std::size_t t : diffs)
            if (cov.test(t)) return best;
        best = d;
    }
    return best;
}

SingletonStatus singleton_check(const GraphCode& code) {
    // compare K * p^{2(d-1)} against p^n
    unsigned __int128 lhs = code.K();
    unsigned __int128 rhs = 1;
    for (int i = 0; i < code.n(); ++i) rhs *= static_cast<unsigned __int128>(code.p());
    for (int i = 0; i < 2 * (code.d - 1); ++i) {
        lhs *= static_cast<unsigned __int128>(code.p());
        if (lhs > rhs) return SingletonStatus::Violates;
    }
    if (lhs == rhs) return SingletonStatus::Saturates;
    return lhs < rhs ? SingletonStatus::Satisfies : SingletonStatus::Violates;
}

std::string singleton_name(SingletonStatus s) {
    switch (s) {
        case SingletonStatus::Saturates: return "saturates";
        case SingletonStatus::Satisfies: return "satisfies";
        default: return "violates";
    }
}

std::string code_label(const GraphCode& code) {
    // [[n,k,d]]_p for stabilizer codes whose K is a clean power of p;
    // the generic ((n,K,d))_p form otherwise (nonadditive codes keep it
    // even when K happens to be a power of p).
    if (code.classification == Classification::Stabilizer) {
        std::size_t kk = code.K();
        int k = 0;
        while (kk > 1 && kk % static_cast<std::size_t>(code.p()) == 0) {
            kk /= static_cast<std::size_t>(code.p());
            ++k;
        }
        if (kk == 1)
            return "[[" + std::to_string(code.n()) + "," + std::to_string(k) + "," +
                   std::to_string(code.d) + "]]_" + std::to_string(code.p());
    }
    return "((" + std::to_string(code.n()) + "," + std::to_string(code.K()) + "," +
           std::to_string(code.d) + "))_" + std::to_string(code.p());
}

} // namespace graphcode
