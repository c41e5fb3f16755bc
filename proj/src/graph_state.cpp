#include "graphcode/graph_state.hpp"

#include <cmath>
#include <cstdlib>

namespace graphcode {

std::size_t default_state_bound() {
    if (const char* env = std::getenv("GRAPHCODE_ORACLE_BOUND")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 15;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GRAPHCODE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(v);
    }
    return 1;
}

i64 qform(const WeightedGraph& g, const ZpVec& s) {
    if (s.p() != g.p || s.size() != static_cast<std::size_t>(g.n))
        throw DimensionError("qform: modulus or length mismatch");
    i64 acc = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            acc = mod_reduce(acc + g.at(a, b) * s[static_cast<std::size_t>(a)] * s[static_cast<std::size_t>(b)], g.p);
    return acc;
}

PauliOp vertex_stabilizer(const WeightedGraph& g, int a) {
    if (a < 0 || a >= g.n) throw DimensionError("vertex_stabilizer: vertex out of range");
    ZpVec x(g.p, static_cast<std::size_t>(g.n));
    x.set(static_cast<std::size_t>(a), 1);
    return make_pauli(0, std::move(x), g.row(a));
}

PauliOp stabilizer_element(const WeightedGraph& g, const ZpVec& s) {
    return make_pauli(2 * qform(g, s), s, mat_vec(g, s));
}

DenseState build_state(const WeightedGraph& g, const ZpVec& c, std::size_t bound) {
    if (c.p() != g.p || c.size() != static_cast<std::size_t>(g.n))
        throw DimensionError("build_state: label mismatch");
    if (bound == 0) bound = default_state_bound();
    const std::size_t dim = pow_size(g.p, g.n, bound);

    DenseState st;
    st.p = g.p;
    st.n = g.n;
    st.amp.resize(dim);

    std::vector<cplx> omega(static_cast<std::size_t>(g.p));
    for (i64 k = 0; k < g.p; ++k) omega[static_cast<std::size_t>(k)] = phase_unit(g.p, 2 * k);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));

    // Incremental digit counter over l; exponent q(l) + c.l recomputed per
    // index from digits (n is tiny compared to p^n).
    std::vector<i64> dg(static_cast<std::size_t>(g.n), 0);
    for (std::size_t l = 0; l < dim; ++l) {
        i64 e = 0;
        for (int a = 0; a < g.n; ++a) {
            i64 da = dg[static_cast<std::size_t>(a)];
            if (da == 0) continue;
            e += c[static_cast<std::size_t>(a)] * da;
            for (int b = a + 1; b < g.n; ++b)
                e += g.at(a, b) * da * dg[static_cast<std::size_t>(b)];
        }
        st.amp[l] = omega[static_cast<std::size_t>(mod_reduce(e, g.p))] * norm;
        for (int a = g.n - 1; a >= 0; --a) {
            if (++dg[static_cast<std::size_t>(a)] < g.p) break;
            dg[static_cast<std::size_t>(a)] = 0;
        }
    }
    return st;
}

PhaseState build_phase_state(const WeightedGraph& g, const ZpVec& c, std::size_t bound) {
    if (c.p() != g.p || c.size() != static_cast<std::size_t>(g.n))
        throw DimensionError("build_phase_state: label mismatch");
    if (g.p >= 65536) throw DimensionError("build_phase_state: modulus too large");
    if (bound == 0) bound = default_state_bound();
    const std::size_t dim = pow_size(g.p, g.n, bound);

    PhaseState st;
    st.p = g.p;
    st.n = g.n;
    st.pw.resize(dim);

    std::vector<i64> dg(static_cast<std::size_t>(g.n), 0);
    for (std::size_t l = 0; l < dim; ++l) {
        i64 e = 0;
        for (int a = 0; a < g.n; ++a) {
            i64 da = dg[static_cast<std::size_t>(a)];
            if (da == 0) continue;
            e += c[static_cast<std::size_t>(a)] * da;
            for (int b = a + 1; b < g.n; ++b)
                e += g.at(a, b) * da * dg[static_cast<std::size_t>(b)];
        }
        st.pw[l] = static_cast<std::uint16_t>(mod_reduce(e, g.p));
        for (int a = g.n - 1; a >= 0; --a) {
            if (++dg[static_cast<std::size_t>(a)] < g.p) break;
            dg[static_cast<std::size_t>(a)] = 0;
        }
    }
    return st;
}

bool check_stabilized(const DenseState& state, const PauliOp& e, double tol) {
    if (state.p != e.p || state.n != static_cast<int>(e.n()))
        throw DimensionError("check_stabilized: state/operator mismatch");
    std::vector<cplx> img;
    apply_pauli(e, state.amp, img);
    double worst = 0.0;
    for (std::size_t l = 0; l < img.size(); ++l)
        worst = std::max(worst, std::abs(img[l] - state.amp[l]));
    return worst <= tol;
}

cplx inner(const DenseState& a, const DenseState& b) {
    if (a.p != b.p || a.n != b.n) throw DimensionError("inner: state mismatch");
    cplx acc{0.0, 0.0};
    for (std::size_t l = 0; l < a.amp.size(); ++l) acc += std::conj(a.amp[l]) * b.amp[l];
    return acc;
}

} // namespace graphcode
