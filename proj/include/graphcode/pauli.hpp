#pragma once

#include <complex>
#include <vector>

#include "graphcode/zp.hpp"

namespace graphcode {

using cplx = std::complex<double>;

// Generalized Pauli operator  zeta^phase * X^x * Z^z  on n qupits, where
// zeta = exp(i*pi/p) and phase is tracked modulo 2p (odd exponents arise
// from operator powers at even p).  Canonical order is X to the left of Z.
struct PauliOp {
    i64 p = 1;
    i64 phase = 0; // exponent of exp(i*pi/p), in [0, 2p)
    ZpVec x, z;

    std::size_t n() const { return x.size(); }
    bool operator==(const PauliOp& o) const {
        return p == o.p && phase == o.phase && x == o.x && z == o.z;
    }
};

PauliOp pauli_identity(i64 p, std::size_t n);
PauliOp make_pauli(i64 phase, ZpVec x, ZpVec z);

// Product a*b in canonical form; commuting Z^za past X^xb contributes
// 2 * dot(za, xb) to the phase exponent.
PauliOp multiply(const PauliOp& a, const PauliOp& b);

// a^k for k >= 0.
PauliOp pauli_power(const PauliOp& a, i64 k);

// Number of qupits acted on nontrivially: |sup(x) U sup(z)|.
int weight(const PauliOp& e);

// The phase-flip vector equivalent to the error X^s Z^t modulo the graph's
// vertex stabilizers: t - s*Gamma.
ZpVec covered_vector(const WeightedGraph& g, const ZpVec& s, const ZpVec& t);

// exp(i*pi*k/p), exact in angle.
cplx phase_unit(i64 p, i64 k);

// Apply e to an amplitude vector indexed with vertex 0 most significant:
// out[l] = zeta^phase * omega^{z.(l-x)} * in[l-x].  Pure index permutation
// with phases; never materializes a matrix.
void apply_pauli(const PauliOp& e, const std::vector<cplx>& in, std::vector<cplx>& out);

// Dense matrix (column m maps to row m+x with phase omega^{z.m}); intended
// for small cross-checks only.
std::vector<std::vector<cplx>> to_matrix(const PauliOp& e, std::size_t cap = 1u << 12);

// One token per qupit ("I", "X", "Z2", "XZ", ...), space separated, with a
// leading "w^k" (omega power) or "zeta^k" phase factor when nontrivial.
std::string pauli_str(const PauliOp& e);

} // namespace graphcode
