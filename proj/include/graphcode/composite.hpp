#pragma once

#include <utility>

#include "graphcode/code_model.hpp"
#include "graphcode/zp.hpp"

namespace graphcode {

// Composite-modulus machinery: a weighted graph over Z_pq with gcd(p,q)=1
// splits into factor graphs over Z_p and Z_q, and its graph state is the
// relabeled tensor product of the factor states.

struct BezoutPair {
    i64 p = 0, q = 0;
    i64 alpha = 0, beta = 0; // alpha*p + beta*q = 1, alpha in [0, q)
};

BezoutPair canonical_bezout(i64 p, i64 q);

// Entrywise: Gamma_p = q*Gamma mod p, Gamma_q = p*Gamma mod q.
std::pair<WeightedGraph, WeightedGraph> crt_split(const WeightedGraph& g, i64 p, i64 q);

// Entrywise: Gamma = p*alpha^2*Gamma_q + q*beta^2*Gamma_p mod pq.
WeightedGraph crt_combine(const WeightedGraph& gp, const WeightedGraph& gq);

// |s>_p (x) |t>_q  ->  |p*t + q*s>_pq, componentwise.
i64 relabel_digit(i64 p, i64 q, i64 s, i64 t);
ZpVec relabel_isometry_index(const ZpVec& s, const ZpVec& t);

// The unique e mod pq with e = cp (mod p), e = cq (mod q): beta*q*cp + alpha*p*cq.
ZpVec crt_merge_vector(const ZpVec& cp, const ZpVec& cq);

struct Theorem2Report {
    bool ok = true;
    double max_dev = 0.0;
    double tol = 1e-12;
};

// Numeric check that build_state(crt_combine(gp,gq), 0) equals the relabeled
// tensor product of the factor graph states.
Theorem2Report theorem2_check(const WeightedGraph& gp, const WeightedGraph& gq,
                              std::size_t state_bound = 0, double tol = 1e-12);

// Direct product ((n, K*K', d))_pq: combined graph, cliques merged pairwise.
// With certify=true every merged basis state is compared numerically against
// the relabeled tensor product of its factors (tolerance 1e-9).
GraphCode product_code(const GraphCode& cp, const GraphCode& cq, bool certify = true,
                       std::size_t state_bound = 0);

// The frozen binary [[6,1,3]]_2 factor: 5-cycle with a pendant vertex,
// coding group of order 2 (raw record below; oracle-certified in the tests).
const char* binary_6_1_3_text();
GraphCode binary_6_1_3();

// ((6, 2p^2, 3))_{2p} for odd p on the combined graph H_6.
GraphCode family_6_2p2_3(i64 p);

} // namespace graphcode
