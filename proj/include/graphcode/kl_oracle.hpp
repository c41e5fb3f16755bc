#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphcode/code_model.hpp"
#include "graphcode/graph_state.hpp"
#include "graphcode/pauli.hpp"
#include "graphcode/zp.hpp"

namespace graphcode {

// Independent numeric verifier: builds dense basis states and checks
// <c| E |c'> = f(E) * delta_{cc'} for errors E = X^s Z^t below the claimed
// distance.  Shares nothing with the covering/clique machinery.

enum class KlMode { Exhaustive, Sampled };

struct KlOptions {
    KlMode mode = KlMode::Exhaustive;
    int max_weight = -1;             // -1: use code.d - 1
    double tol = 1e-9;
    std::size_t state_bound = 0;     // amplitude cap; 0: default_state_bound()
    std::size_t error_budget = 1u << 24; // exhaustive-mode error-count guard
    std::uint64_t seed = 1;          // sampled mode
    std::size_t samples = 10000;     // sampled: minimum credited error count
    std::size_t pair_budget = 256;   // sampled: max (bra, ket) pairs per error
    int threads = 0;                 // 0: resolve_threads()
    bool check_f = true;             // require nonzero f(E) only for E ~ G_s, s in S
};

struct KlCounterexample {
    PauliOp error;
    std::size_t bra = 0, ket = 0; // clique indices
    cplx value{};
    cplx expected{};
    double dev = 0.0;
    std::string message;
};

struct KlReport {
    bool ok = true;
    KlMode mode = KlMode::Exhaustive;
    int max_weight = 0;
    std::uint64_t seed = 0;           // echoed for reproduction (sampled)
    std::size_t classes_checked = 0;  // (support, s|support) classes processed
    std::size_t errors_checked = 0;   // individual errors covered
    double worst_dev = 0.0;
    double tol = 1e-9;
    std::size_t f_nonzero_count = 0;  // errors with |f(E)| > tol
    std::vector<std::pair<PauliOp, cplx>> f_nonzero; // sample, capped
    std::optional<KlCounterexample> counterexample;
};

KlReport kl_verify(const GraphCode& code, const KlOptions& opts = {});

// Largest d such that every error of weight < d passes the check above
// (deviation only; for K = 1 instead the smallest weight with f(E) != 0).
int oracle_distance(const WeightedGraph& g, const std::vector<ZpVec>& clique,
                    const KlOptions& opts = {});

struct TableOptions {
    double tol = 1e-9;
    std::size_t state_bound = 0; // 0: default_state_bound()
    std::size_t max_states = 0;  // 0: check every basis state; else seeded subset
    std::uint64_t seed = 1;
};

struct TableReport {
    bool ok = true;
    double worst_dev = 0.0;
    std::size_t claimed_span = 0;  // size of the group spanned by the claims' X-parts
    std::size_t expected_span = 0; // |S|
    std::size_t states_checked = 0;
    std::string message;
};

// Claimed generators must stabilize every (selected) basis state numerically,
// and their X-parts must span exactly the orthogonal module S.
TableReport verify_stabilizer_table(const GraphCode& code, const std::vector<PauliOp>& claims,
                                    const TableOptions& opts = {});

} // namespace graphcode
