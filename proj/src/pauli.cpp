#include "graphcode/pauli.hpp"

#include <cmath>

namespace graphcode {

PauliOp pauli_identity(i64 p, std::size_t n) {
    PauliOp e;
    e.p = p;
    e.phase = 0;
    e.x = ZpVec(p, n);
    e.z = ZpVec(p, n);
    return e;
}

PauliOp make_pauli(i64 phase, ZpVec x, ZpVec z) {
    if (x.p() != z.p() || x.size() != z.size())
        throw DimensionError("make_pauli: x/z mismatch");
    PauliOp e;
    e.p = x.p();
    e.phase = mod_reduce(phase, 2 * e.p);
    e.x = std::move(x);
    e.z = std::move(z);
    return e;
}

PauliOp multiply(const PauliOp& a, const PauliOp& b) {
    if (a.p != b.p || a.n() != b.n()) throw DimensionError("multiply: operator mismatch");
    PauliOp e;
    e.p = a.p;
    e.phase = mod_reduce(a.phase + b.phase + 2 * dot(a.z, b.x), 2 * a.p);
    e.x = a.x + b.x;
    e.z = a.z + b.z;
    return e;
}

PauliOp pauli_power(const PauliOp& a, i64 k) {
    if (k < 0) throw DimensionError("pauli_power: negative exponent");
    PauliOp r = pauli_identity(a.p, a.n());
    for (i64 i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

int weight(const PauliOp& e) {
    int w = 0;
    for (std::size_t i = 0; i < e.n(); ++i)
        if (e.x[i] != 0 || e.z[i] != 0) ++w;
    return w;
}

ZpVec covered_vector(const WeightedGraph& g, const ZpVec& s, const ZpVec& t) {
    return t - mat_vec(g, s);
}

cplx phase_unit(i64 p, i64 k) {
    k = mod_reduce(k, 2 * p);
    double ang = M_PI * static_cast<double>(k) / static_cast<double>(p);
    return {std::cos(ang), std::sin(ang)};
}

void apply_pauli(const PauliOp& e, const std::vector<cplx>& in, std::vector<cplx>& out) {
    const i64 p = e.p;
    const int n = static_cast<int>(e.n());
    const std::size_t dim = in.size();
    out.resize(dim);

    std::vector<cplx> omega(static_cast<std::size_t>(p));
    for (i64 k = 0; k < p; ++k) omega[static_cast<std::size_t>(k)] = phase_unit(p, 2 * k);
    const cplx global = phase_unit(p, e.phase);

    std::vector<i64> dg(static_cast<std::size_t>(n), 0); // digits of l - x
    for (std::size_t l = 0; l < dim; ++l) {
        std::size_t rem = l;
        i64 zdot = 0;
        std::size_t src = 0;
        for (int a = n - 1; a >= 0; --a) {
            i64 da = static_cast<i64>(rem % static_cast<std::size_t>(p));
            rem /= static_cast<std::size_t>(p);
            dg[static_cast<std::size_t>(a)] = mod_reduce(da - e.x[static_cast<std::size_t>(a)], p);
        }
        std::size_t mul = 1;
        for (int a = n - 1; a >= 0; --a) {
            src += static_cast<std::size_t>(dg[static_cast<std::size_t>(a)]) * mul;
            zdot += e.z[static_cast<std::size_t>(a)] * dg[static_cast<std::size_t>(a)];
            mul *= static_cast<std::size_t>(p);
        }
        out[l] = global * omega[static_cast<std::size_t>(mod_reduce(zdot, p))] * in[src];
    }
}

std::vector<std::vector<cplx>> to_matrix(const PauliOp& e, std::size_t cap) {
    const std::size_t dim = pow_size(e.p, static_cast<int>(e.n()), cap);
    std::vector<std::vector<cplx>> m(dim, std::vector<cplx>(dim, cplx{0.0, 0.0}));
    const cplx global = phase_unit(e.p, e.phase);
    for (std::size_t col = 0; col < dim; ++col) {
        ZpVec v = decode_index(e.p, static_cast<int>(e.n()), col);
        std::size_t row = encode_index(v + e.x);
        m[row][col] = global * phase_unit(e.p, 2 * dot(e.z, v));
    }
    return m;
}

std::string pauli_str(const PauliOp& e) {
    std::string out;
    const i64 ph = mod_reduce(e.phase, 2 * e.p);
    if (ph != 0) {
        if (ph % 2 == 0)
            out += "w^" + std::to_string(ph / 2) + " ";
        else
            out += "zeta^" + std::to_string(ph) + " ";
    }
    for (std::size_t a = 0; a < e.n(); ++a) {
        if (a) out += ' ';
        const i64 xa = e.x[a], za = e.z[a];
        if (xa == 0 && za == 0) {
            out += 'I';
            continue;
        }
        if (xa != 0) {
            out += 'X';
            if (xa > 1) out += std::to_string(xa);
        }
        if (za != 0) {
            out += 'Z';
            if (za > 1) out += std::to_string(za);
        }
    }
    return out;
}

} // namespace graphcode
