#pragma once

#include "graphcode/pauli.hpp"

namespace graphcode {

// Dense amplitude vector over the computational basis of n qupits,
// indexed with vertex 0 most significant.
struct DenseState {
    i64 p = 1;
    int n = 0;
    std::vector<cplx> amp;

    std::size_t dim() const { return amp.size(); }
};

// Amplitude bound for dense-state construction: GRAPHCODE_ORACLE_BOUND
// environment override, default 2^15.
std::size_t default_state_bound();

// Quadratic form sum_{a<b} Gamma_ab s_a s_b mod p.
i64 qform(const WeightedGraph& g, const ZpVec& s);

// G_a = X_a * prod_b Z_b^{Gamma_ab}.
PauliOp vertex_stabilizer(const WeightedGraph& g, int a);

// G_s = prod_a G_a^{s_a} in canonical form: phase exponent 2*qform(g,s),
// X part s, Z part s*Gamma.
PauliOp stabilizer_element(const WeightedGraph& g, const ZpVec& s);

// Labeled graph-state basis vector |Gamma_c>: amplitude at index l equal to
// omega^{qform(l) + c.l} / sqrt(p^n).  bound = 0 uses default_state_bound().
DenseState build_state(const WeightedGraph& g, const ZpVec& c, std::size_t bound = 0);

// Compact form of the same state: amplitude at index l is
// omega^{pw[l]} / sqrt(p^n) with pw[l] in [0, p).  Sixteen times smaller
// than DenseState, which matters when an oracle holds every basis state.
struct PhaseState {
    i64 p = 1;
    int n = 0;
    std::vector<std::uint16_t> pw;

    std::size_t dim() const { return pw.size(); }
};

PhaseState build_phase_state(const WeightedGraph& g, const ZpVec& c, std::size_t bound = 0);

// max_l |(e*state)[l] - state[l]| <= tol.
bool check_stabilized(const DenseState& state, const PauliOp& e, double tol = 1e-9);

// <a|b>.
cplx inner(const DenseState& a, const DenseState& b);

// Number of worker threads: explicit request, else GRAPHCODE_THREADS, else 1.
int resolve_threads(int requested = 0);

} // namespace graphcode
