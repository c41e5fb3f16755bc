#include "graphcode/zp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace graphcode {

std::size_t pow_size(i64 p, int n, std::size_t cap) {
    if (p < 1 || n < 0) throw DimensionError("pow_size: bad modulus or length");
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > cap / static_cast<std::size_t>(p))
            throw ResourceError("p^n exceeds configured bound of " + std::to_string(cap));
        r *= static_cast<std::size_t>(p);
    }
    if (r > cap) throw ResourceError("p^n exceeds configured bound of " + std::to_string(cap));
    return r;
}

ZpVec::ZpVec(i64 p, std::size_t n) : p_(p), e_(n, 0) {
    if (p < 1) throw DimensionError("ZpVec: modulus must be >= 1");
}

ZpVec::ZpVec(i64 p, std::vector<i64> entries) : p_(p), e_(std::move(entries)) {
    if (p < 1) throw DimensionError("ZpVec: modulus must be >= 1");
    for (auto& v : e_) v = mod_reduce(v, p_);
}

void ZpVec::check_compatible(const ZpVec& o) const {
    if (p_ != o.p_ || e_.size() != o.e_.size())
        throw DimensionError("ZpVec: modulus or length mismatch");
}

bool ZpVec::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](i64 v) { return v == 0; });
}

ZpVec ZpVec::operator+(const ZpVec& o) const {
    check_compatible(o);
    ZpVec r(p_, e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = mod_reduce(e_[i] + o.e_[i], p_);
    return r;
}

ZpVec ZpVec::operator-(const ZpVec& o) const {
    check_compatible(o);
    ZpVec r(p_, e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = mod_reduce(e_[i] - o.e_[i], p_);
    return r;
}

ZpVec ZpVec::operator*(i64 k) const {
    ZpVec r(p_, e_.size());
    k = mod_reduce(k, p_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = mod_reduce(e_[i] * k, p_);
    return r;
}

bool ZpVec::operator<(const ZpVec& o) const {
    check_compatible(o);
    return e_ < o.e_;
}

std::string ZpVec::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) os << ',';
        os << e_[i];
    }
    os << ')';
    return os.str();
}

i64 dot(const ZpVec& a, const ZpVec& b) {
    if (a.p() != b.p() || a.size() != b.size())
        throw DimensionError("dot: modulus or length mismatch");
    i64 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = mod_reduce(acc + a[i] * b[i], a.p());
    return acc;
}

std::vector<int> support(const ZpVec& v) {
    std::vector<int> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

std::size_t encode_index(const ZpVec& v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        idx = idx * static_cast<std::size_t>(v.p()) + static_cast<std::size_t>(v[i]);
    return idx;
}

ZpVec decode_index(i64 p, int n, std::size_t idx) {
    ZpVec v(p, static_cast<std::size_t>(n));
    for (int a = n - 1; a >= 0; --a) {
        v.set(static_cast<std::size_t>(a), static_cast<i64>(idx % static_cast<std::size_t>(p)));
        idx /= static_cast<std::size_t>(p);
    }
    return v;
}

WeightedGraph WeightedGraph::empty(i64 p, int n) {
    if (p < 2 || n < 1) throw DimensionError("WeightedGraph: need p >= 2, n >= 1");
    WeightedGraph g;
    g.p = p;
    g.n = n;
    g.w.assign(static_cast<std::size_t>(n) * n, 0);
    return g;
}

void WeightedGraph::set_edge(int a, int b, i64 weight) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw DimensionError("set_edge: vertex out of range");
    if (a == b) throw DimensionError("set_edge: self-loops are not allowed");
    weight = mod_reduce(weight, p);
    w[static_cast<std::size_t>(a) * n + b] = weight;
    w[static_cast<std::size_t>(b) * n + a] = weight;
}

ZpVec WeightedGraph::row(int a) const {
    std::vector<i64> r(w.begin() + static_cast<std::ptrdiff_t>(a) * n,
                       w.begin() + static_cast<std::ptrdiff_t>(a + 1) * n);
    return ZpVec(p, std::move(r));
}

ZpVec mat_vec(const WeightedGraph& g, const ZpVec& s) {
    if (s.p() != g.p || s.size() != static_cast<std::size_t>(g.n))
        throw DimensionError("mat_vec: modulus or length mismatch");
    ZpVec r(g.p, s.size());
    for (int b = 0; b < g.n; ++b) {
        i64 acc = 0;
        for (int a = 0; a < g.n; ++a) acc = mod_reduce(acc + s[static_cast<std::size_t>(a)] * g.at(a, b), g.p);
        r.set(static_cast<std::size_t>(b), acc);
    }
    return r;
}

i64 ZpModuleBasis::size() const {
    i64 s = 1;
    for (i64 d : degrees) s *= d;
    return s;
}

std::vector<ZpVec> ZpModuleBasis::elements(i64 cap) const {
    if (size() > cap) throw ResourceError("module too large to enumerate");
    std::vector<ZpVec> out;
    out.reserve(static_cast<std::size_t>(size()));
    ZpVec zero(p, static_cast<std::size_t>(n));
    out.push_back(zero);
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        std::vector<ZpVec> next;
        next.reserve(out.size() * static_cast<std::size_t>(degrees[gi]));
        ZpVec step = generators[gi];
        for (const auto& base : out) {
            ZpVec cur = base;
            for (i64 k = 0; k < degrees[gi]; ++k) {
                next.push_back(cur);
                cur = cur + step;
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw ValidationError("module basis is not a direct sum (duplicate elements)");
    return out;
}

bool ZpModuleBasis::contains(const ZpVec& v, i64 cap) const {
    auto all = elements(cap);
    return std::binary_search(all.begin(), all.end(), v);
}

namespace {

// Integer matrix diagonalization by elementary row/column operations,
// tracking the column transform V (B_in * V column-spans as B_out) and its
// inverse.  Only the diagonal and the transforms are needed by the callers.
struct Diagonalized {
    std::vector<i64> diag;               // nonnegative, one per pivot
    std::vector<std::vector<i64>> v;     // c x c
    std::vector<std::vector<i64>> vinv;  // c x c
};

i64 round_div(i64 a, i64 b) {
    i64 q = a / b;
    i64 r = a - q * b;
    if (std::abs(r) * 2 > std::abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

Diagonalized diagonalize(std::vector<std::vector<i64>> m, int cols) {
    const int rows = static_cast<int>(m.size());
    Diagonalized out;
    out.v.assign(cols, std::vector<i64>(cols, 0));
    out.vinv.assign(cols, std::vector<i64>(cols, 0));
    for (int i = 0; i < cols; ++i) out.v[i][i] = out.vinv[i][i] = 1;

    auto swap_cols = [&](int j, int k) {
        if (j == k) return;
        for (int i = 0; i < rows; ++i) std::swap(m[i][j], m[i][k]);
        for (int i = 0; i < cols; ++i) std::swap(out.v[i][j], out.v[i][k]);
        std::swap(out.vinv[j], out.vinv[k]);
    };
    auto add_col = [&](int j, int k, i64 q) { // col_j += q * col_k
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) m[i][j] += q * m[i][k];
        for (int i = 0; i < cols; ++i) out.v[i][j] += q * out.v[i][k];
        for (int i = 0; i < cols; ++i) out.vinv[k][i] -= q * out.vinv[j][i];
    };
    auto negate_col = [&](int j) {
        for (int i = 0; i < rows; ++i) m[i][j] = -m[i][j];
        for (int i = 0; i < cols; ++i) out.v[i][j] = -out.v[i][j];
        for (int i = 0; i < cols; ++i) out.vinv[j][i] = -out.vinv[j][i];
    };

    int t = 0;
    while (t < rows && t < cols) {
        // Locate the minimal-magnitude nonzero pivot in the working block.
        int pi = -1, pj = -1;
        i64 best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pi < 0 || std::abs(m[i][j]) < best)) {
                    best = std::abs(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        swap_cols(t, pj);

        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                i64 q = round_div(m[i][t], m[t][t]);
                for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    changed = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                i64 q = round_div(m[t][j], m[t][t]);
                add_col(j, t, -q);
                if (m[t][j] != 0) {
                    swap_cols(t, j);
                    changed = true;
                }
            }
        }
        if (m[t][t] < 0) negate_col(t);
        out.diag.push_back(m[t][t]);
        ++t;
    }
    return out;
}

void primary_split(i64 p, const ZpVec& gen, i64 mu,
                   std::vector<std::pair<i64, ZpVec>>& accum) {
    // Split a cyclic component of order mu into prime-power components.
    i64 rest = mu;
    for (i64 q = 2; q * q <= rest; ++q) {
        if (rest % q) continue;
        i64 qe = 1;
        while (rest % q == 0) {
            rest /= q;
            qe *= q;
        }
        accum.emplace_back(qe, gen * (mu / qe));
    }
    if (rest > 1) accum.emplace_back(rest, gen * (mu / rest));
    (void)p;
}

ZpModuleBasis finalize_basis(i64 p, int n, std::vector<std::pair<i64, ZpVec>> comps) {
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    ZpModuleBasis basis;
    basis.p = p;
    basis.n = n;
    for (auto& [deg, gen] : comps) {
        basis.degrees.push_back(deg);
        basis.generators.push_back(gen);
    }
    return basis;
}

} // namespace

ZpModuleBasis howell_basis(const std::vector<ZpVec>& vectors) {
    if (vectors.empty()) throw DimensionError("howell_basis: empty input");
    const i64 p = vectors[0].p();
    const int n = static_cast<int>(vectors[0].size());
    for (const auto& v : vectors)
        if (v.p() != p || v.size() != static_cast<std::size_t>(n))
            throw DimensionError("howell_basis: mixed moduli or lengths");

    std::vector<std::vector<i64>> m;
    m.reserve(vectors.size() + static_cast<std::size_t>(n));
    for (const auto& v : vectors) m.push_back(v.entries());
    for (int i = 0; i < n; ++i) {
        std::vector<i64> row(static_cast<std::size_t>(n), 0);
        row[static_cast<std::size_t>(i)] = p;
        m.push_back(std::move(row));
    }
    auto dz = diagonalize(std::move(m), n);

    // Row span of [A; p*I] equals span{ d_i * (row i of Vinv) }; the module
    // over Z_p decomposes as the direct sum of the cyclic groups generated by
    // gcd(d_i, p) * w_i of order p / gcd(d_i, p).
    std::vector<std::pair<i64, ZpVec>> comps;
    for (int i = 0; i < n; ++i) {
        i64 d = (i < static_cast<int>(dz.diag.size())) ? dz.diag[static_cast<std::size_t>(i)] : 0;
        i64 g = std::gcd(p, d);
        i64 mu = p / g;
        if (mu == 1) continue;
        std::vector<i64> gen(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            gen[static_cast<std::size_t>(j)] =
                mod_reduce(g * dz.vinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], p);
        primary_split(p, ZpVec(p, std::move(gen)), mu, comps);
    }
    return finalize_basis(p, n, std::move(comps));
}

ZpModuleBasis solve_orthogonal(const std::vector<ZpVec>& vectors, i64 p, int n) {
    for (const auto& v : vectors)
        if (v.p() != p || v.size() != static_cast<std::size_t>(n))
            throw DimensionError("solve_orthogonal: mixed moduli or lengths");
    std::vector<std::vector<i64>> m;
    if (vectors.empty()) {
        m.push_back(std::vector<i64>(static_cast<std::size_t>(n), 0));
    } else {
        m.reserve(vectors.size());
        for (const auto& v : vectors) m.push_back(v.entries());
    }
    auto dz = diagonalize(std::move(m), n);

    // A s == 0 (mod p)  <=>  d_i z_i == 0 (mod p) with s = V z; the solution
    // set is the direct sum over columns of <(p / gcd(p, d_i)) * V_col_i>,
    // each of order gcd(p, d_i).
    std::vector<std::pair<i64, ZpVec>> comps;
    for (int i = 0; i < n; ++i) {
        i64 d = (i < static_cast<int>(dz.diag.size())) ? dz.diag[static_cast<std::size_t>(i)] : 0;
        i64 g = std::gcd(p, d); // order of the solution component
        if (g == 1) continue;
        std::vector<i64> gen(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            gen[static_cast<std::size_t>(j)] =
                mod_reduce((p / g) * dz.v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], p);
        primary_split(p, ZpVec(p, std::move(gen)), g, comps);
    }
    return finalize_basis(p, n, std::move(comps));
}

ZpModuleBasis solve_orthogonal(const std::vector<ZpVec>& vectors) {
    if (vectors.empty()) throw DimensionError("solve_orthogonal: empty input needs explicit p, n");
    return solve_orthogonal(vectors, vectors[0].p(), static_cast<int>(vectors[0].size()));
}

} // namespace graphcode
