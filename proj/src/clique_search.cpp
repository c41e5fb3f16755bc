#include "graphcode/clique_search.hpp"

#include <algorithm>
#include <chrono>

namespace graphcode {

VecBitmap::VecBitmap(i64 p, int n, std::size_t cap) : p_(p), n_(n) {
    dim_ = pow_size(p, n, cap);
    bits_.assign((dim_ + 63) / 64, 0);
}

std::size_t VecBitmap::count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

VecBitmap VecBitmap::complement() const {
    VecBitmap r = *this;
    for (auto& w : r.bits_) w = ~w;
    // clear padding bits past dim
    std::size_t tail = dim_ & 63;
    if (tail) r.bits_.back() &= (std::uint64_t{1} << tail) - 1;
    return r;
}

std::vector<ZpVec> VecBitmap::members(std::size_t cap) const {
    if (count() > cap) throw ResourceError("bitmap member list over bound");
    std::vector<ZpVec> out;
    out.reserve(count());
    for (std::size_t idx = 0; idx < dim_; ++idx)
        if (test(idx)) out.push_back(decode_index(p_, n_, idx));
    return out;
}

PuritySet purity_set(const WeightedGraph& g, int d, std::size_t cap) {
    if (d < 1 || d > g.n + 1) throw DimensionError("purity_set: need 1 <= d <= n+1");
    const std::size_t dim = pow_size(g.p, g.n, cap);
    PuritySet ps;
    ps.d = d;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        ZpVec s = decode_index(g.p, g.n, idx);
        ZpVec sg = mat_vec(g, s);
        int wt = 0;
        for (int a = 0; a < g.n; ++a)
            if (s[static_cast<std::size_t>(a)] != 0 || sg[static_cast<std::size_t>(a)] != 0) ++wt;
        if (wt < d) ps.members.push_back(std::move(s));
    }
    return ps;
}

namespace {

// Call fn(W) for every size-w subset W of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_support(int n, int w, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(idx);
        int i = w - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - w + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < w; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Call fn(s_local, t_local) for every exact-support local assignment: each
// position runs over (s_a, t_a) in [0,p)^2 minus (0,0), odometer order.
template <typename Fn>
void for_each_local(i64 p, int w, Fn&& fn) {
    const i64 opts = p * p - 1; // per-qupit nonzero (s,t) pairs, code v-1 maps to (v/p, v%p), v in [1, p^2)
    std::vector<i64> code(static_cast<std::size_t>(w), 1);
    std::vector<i64> s(static_cast<std::size_t>(w)), t(static_cast<std::size_t>(w));
    while (true) {
        for (int i = 0; i < w; ++i) {
            s[static_cast<std::size_t>(i)] = code[static_cast<std::size_t>(i)] / p;
            t[static_cast<std::size_t>(i)] = code[static_cast<std::size_t>(i)] % p;
        }
        fn(s, t);
        int i = w - 1;
        while (i >= 0) {
            if (++code[static_cast<std::size_t>(i)] <= opts) break;
            code[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
    }
}

} // namespace

void accumulate_covered(const WeightedGraph& g, int wlo, int whi, VecBitmap& bm) {
    std::vector<i64> c(static_cast<std::size_t>(g.n));
    for (int w = std::max(1, wlo); w <= std::min(whi, g.n); ++w) {
        for_each_support(g.n, w, [&](const std::vector<int>& W) {
            for_each_local(g.p, w, [&](const std::vector<i64>& s, const std::vector<i64>& t) {
                std::fill(c.begin(), c.end(), 0);
                for (int i = 0; i < w; ++i) {
                    const int a = W[static_cast<std::size_t>(i)];
                    c[static_cast<std::size_t>(a)] += t[static_cast<std::size_t>(i)];
                    const i64 sa = s[static_cast<std::size_t>(i)];
                    if (sa == 0) continue;
                    for (int b = 0; b < g.n; ++b)
                        c[static_cast<std::size_t>(b)] -= sa * g.at(a, b);
                }
                std::size_t idx = 0;
                for (int b = 0; b < g.n; ++b)
                    idx = idx * static_cast<std::size_t>(g.p) +
                          static_cast<std::size_t>(mod_reduce(c[static_cast<std::size_t>(b)], g.p));
                bm.set(idx);
            });
        });
    }
}

VecBitmap covered_set(const WeightedGraph& g, int d, std::size_t cap) {
    if (d < 1) throw DimensionError("covered_set: need d >= 1");
    VecBitmap bm(g.p, g.n, cap);
    accumulate_covered(g, 1, d - 1, bm);
    return bm;
}

UncoverableSet uncoverable_set(const WeightedGraph& g, int d, std::size_t cap) {
    UncoverableSet u;
    u.d = d;
    u.members = covered_set(g, d, cap).complement();
    return u;
}

std::optional<CoverWitness> find_covering_error(const WeightedGraph& g, int d, const ZpVec& c) {
    std::optional<CoverWitness> hit;
    std::vector<i64> acc(static_cast<std::size_t>(g.n));
    for (int w = 1; w <= std::min(d - 1, g.n) && !hit; ++w) {
        for_each_support(g.n, w, [&](const std::vector<int>& W) {
            if (hit) return;
            for_each_local(g.p, w, [&](const std::vector<i64>& s, const std::vector<i64>& t) {
                if (hit) return;
                std::fill(acc.begin(), acc.end(), 0);
                for (int i = 0; i < w; ++i) {
                    const int a = W[static_cast<std::size_t>(i)];
                    acc[static_cast<std::size_t>(a)] += t[static_cast<std::size_t>(i)];
                    const i64 sa = s[static_cast<std::size_t>(i)];
                    if (sa == 0) continue;
                    for (int b = 0; b < g.n; ++b)
                        acc[static_cast<std::size_t>(b)] -= sa * g.at(a, b);
                }
                bool eq = true;
                for (int b = 0; b < g.n && eq; ++b)
                    eq = mod_reduce(acc[static_cast<std::size_t>(b)], g.p) == c[static_cast<std::size_t>(b)];
                if (!eq) return;
                ZpVec sv(g.p, static_cast<std::size_t>(g.n)), tv(g.p, static_cast<std::size_t>(g.n));
                for (int i = 0; i < w; ++i) {
                    sv.set(static_cast<std::size_t>(W[static_cast<std::size_t>(i)]), s[static_cast<std::size_t>(i)]);
                    tv.set(static_cast<std::size_t>(W[static_cast<std::size_t>(i)]), t[static_cast<std::size_t>(i)]);
                }
                hit = CoverWitness{std::move(sv), std::move(tv)};
            });
        });
    }
    return hit;
}

SuperGraph build_super_graph(const WeightedGraph& g, int d, std::size_t vector_cap,
                             std::size_t vertex_cap) {
    VecBitmap cov = covered_set(g, d, vector_cap);
    PuritySet ps = purity_set(g, d, vector_cap);

    SuperGraph sg;
    sg.p = g.p;
    sg.n = g.n;
    sg.d = d;
    for (std::size_t idx = 0; idx < cov.dim(); ++idx) {
        if (cov.test(idx)) continue;
        ZpVec v = decode_index(g.p, g.n, idx);
        bool orth = true;
        for (const auto& s : ps.members) {
            if (dot(v, s) != 0) {
                orth = false;
                break;
            }
        }
        if (!orth) continue;
        sg.vertices.push_back(std::move(v));
        if (sg.vertices.size() > vertex_cap)
            throw ResourceError("super graph exceeds vertex bound of " + std::to_string(vertex_cap));
    }

    const std::size_t V = sg.vertices.size();
    sg.words = (V + 63) / 64;
    sg.adj.assign(V * sg.words, 0);
    for (std::size_t i = 0; i < V; ++i) {
        for (std::size_t j = i + 1; j < V; ++j) {
            ZpVec diff = sg.vertices[i] - sg.vertices[j];
            if (!cov.test(encode_index(diff))) {
                sg.adj[i * sg.words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
                sg.adj[j * sg.words + (i >> 6)] |= std::uint64_t{1} << (i & 63);
            }
        }
    }
    return sg;
}

namespace {

struct CliqueSearcher {
    const SuperGraph& sg;
    CliqueMode mode;
    std::size_t target; // for AllOfSize / FirstOfSize: total clique size
    double time_limit_s;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::size_t node_counter = 0;

    std::vector<std::size_t> order;  // global exploration order
    std::vector<std::size_t> cur;    // growing clique (vertex indices), anchor excluded
    std::vector<std::size_t> best;   // best clique found (Max mode), anchor excluded
    std::vector<std::vector<std::size_t>> found; // completed cliques, anchor excluded
    bool done = false;

    explicit CliqueSearcher(const SuperGraph& s) : sg(s), mode(CliqueMode::Max), target(0), time_limit_s(0) {}

    void tick() {
        if (time_limit_s <= 0) return;
        if ((++node_counter & 1023) != 0) return;
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt > time_limit_s) throw ResourceError("clique search time limit exceeded");
    }

    bool cand_adjacent(const std::vector<std::uint64_t>& cand, std::size_t v) const {
        return (cand[v >> 6] >> (v & 63)) & 1u;
    }

    // Greedy coloring of candidates (in global order); returns candidates
    // annotated with color numbers (1-based), sorted by ascending color.
    std::vector<std::pair<int, std::size_t>> color(const std::vector<std::uint64_t>& cand) const {
        std::vector<std::pair<int, std::size_t>> seq;
        std::vector<std::vector<std::uint64_t>> classes; // bitset per color
        for (std::size_t v : order) {
            if (!cand_adjacent(cand, v)) continue;
            int ci = 0;
            for (; ci < static_cast<int>(classes.size()); ++ci) {
                const auto& cls = classes[static_cast<std::size_t>(ci)];
                bool conflict = false;
                const std::size_t row = v * sg.words;
                for (std::size_t w = 0; w < sg.words; ++w)
                    if (cls[w] & sg.adj[row + w]) {
                        conflict = true;
                        break;
                    }
                if (!conflict) break;
            }
            if (ci == static_cast<int>(classes.size()))
                classes.emplace_back(sg.words, 0);
            classes[static_cast<std::size_t>(ci)][v >> 6] |= std::uint64_t{1} << (v & 63);
            seq.emplace_back(ci + 1, v);
        }
        std::stable_sort(seq.begin(), seq.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        return seq;
    }

    void expand(std::vector<std::uint64_t> cand) {
        tick();
        if (done) return;
        auto seq = color(cand);
        // process highest color first
        for (auto it = seq.rbegin(); it != seq.rend() && !done; ++it) {
            auto [ci, v] = *it;
            const std::size_t reached = cur.size() + 1 /*anchor*/;
            if (mode == CliqueMode::Max) {
                if (reached + static_cast<std::size_t>(ci) <= best.size() + 1) return;
            } else {
                if (reached + static_cast<std::size_t>(ci) < target) return;
            }
            cur.push_back(v);
            if (mode != CliqueMode::Max && cur.size() + 1 == target) {
                found.push_back(cur);
                if (mode == CliqueMode::FirstOfSize) done = true;
            } else {
                std::vector<std::uint64_t> next(sg.words);
                const std::size_t row = v * sg.words;
                bool any = false;
                for (std::size_t w = 0; w < sg.words; ++w) {
                    next[w] = cand[w] & sg.adj[row + w];
                    any = any || next[w];
                }
                if (any)
                    expand(std::move(next));
                else if (mode == CliqueMode::Max && cur.size() > best.size())
                    best = cur;
            }
            cur.pop_back();
            cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
        if (mode == CliqueMode::Max && cur.size() > best.size()) best = cur;
    }
};

} // namespace

std::vector<std::vector<ZpVec>> find_cliques(const SuperGraph& sg, CliqueMode mode, int k,
                                             const ZpVec* anchor, double time_limit_s) {
    ZpVec anchor_vec = anchor ? *anchor : ZpVec(sg.p, static_cast<std::size_t>(sg.n));
    auto it = std::lower_bound(sg.vertices.begin(), sg.vertices.end(), anchor_vec);
    if (it == sg.vertices.end() || !(*it == anchor_vec))
        throw InputError("clique anchor is not a super-graph vertex");
    const std::size_t a = static_cast<std::size_t>(it - sg.vertices.begin());
    if (mode != CliqueMode::Max && k < 1) throw InputError("clique size k must be >= 1");

    CliqueSearcher cs(sg);
    cs.mode = mode;
    cs.target = static_cast<std::size_t>(k);
    cs.time_limit_s = time_limit_s;

    const std::size_t V = sg.vertices.size();
    std::vector<std::size_t> deg(V, 0);
    for (std::size_t i = 0; i < V; ++i) {
        std::size_t d = 0;
        for (std::size_t w = 0; w < sg.words; ++w)
            d += static_cast<std::size_t>(__builtin_popcountll(sg.adj[i * sg.words + w]));
        deg[i] = d;
    }
    cs.order.resize(V);
    for (std::size_t i = 0; i < V; ++i) cs.order[i] = i;
    std::sort(cs.order.begin(), cs.order.end(), [&](std::size_t x, std::size_t y) {
        if (deg[x] != deg[y]) return deg[x] > deg[y];
        return sg.vertices[x] < sg.vertices[y];
    });

    std::vector<std::uint64_t> cand(sg.adj.begin() + static_cast<std::ptrdiff_t>(a * sg.words),
                                    sg.adj.begin() + static_cast<std::ptrdiff_t>((a + 1) * sg.words));
    if (mode != CliqueMode::Max && k == 1) {
        // the anchor alone
        return {{sg.vertices[a]}};
    }
    cs.expand(std::move(cand));

    std::vector<std::vector<std::size_t>> raw;
    if (mode == CliqueMode::Max)
        raw.push_back(cs.best);
    else
        raw = std::move(cs.found);

    std::vector<std::vector<ZpVec>> out;
    for (auto& cl : raw) {
        std::vector<ZpVec> vs;
        vs.reserve(cl.size() + 1);
        vs.push_back(sg.vertices[a]);
        for (std::size_t v : cl) vs.push_back(sg.vertices[v]);
        std::sort(vs.begin(), vs.end());
        out.push_back(std::move(vs));
    }
    if (mode == CliqueMode::AllOfSize) std::sort(out.begin(), out.end());
    return out;
}

bool is_coding_clique(const WeightedGraph& g, int d, const std::vector<ZpVec>& vectors,
                      CliqueViolation* violation, std::size_t cap) {
    if (vectors.empty()) throw InputError("is_coding_clique: empty vector set");
    for (const auto& v : vectors)
        if (v.p() != g.p || v.size() != static_cast<std::size_t>(g.n))
            throw DimensionError("is_coding_clique: vector/graph mismatch");
    {
        auto sorted = vectors;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("is_coding_clique: duplicate vectors");
    }

    auto fail = [&](int cond, std::string msg, ZpVec a, ZpVec b,
                    std::optional<CoverWitness> err = std::nullopt) {
        if (violation) {
            violation->condition = cond;
            violation->message = std::move(msg);
            violation->a = std::move(a);
            violation->b = std::move(b);
            violation->error = std::move(err);
        }
        return false;
    };

    const ZpVec zero(g.p, static_cast<std::size_t>(g.n));
    if (std::find(vectors.begin(), vectors.end(), zero) == vectors.end())
        return fail(1, "zero vector missing from clique", zero, zero);

    PuritySet ps = purity_set(g, d, cap);
    for (const auto& c : vectors)
        for (const auto& s : ps.members)
            if (dot(c, s) != 0)
                return fail(2, "clique vector " + c.str() + " not orthogonal to purity vector " + s.str(),
                            c, s);

    VecBitmap cov = covered_set(g, d, cap);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            if (i == j) continue;
            ZpVec diff = vectors[i] - vectors[j];
            if (cov.test(encode_index(diff)))
                return fail(3,
                            "difference " + diff.str() + " of clique vectors " + vectors[i].str() +
                                " and " + vectors[j].str() + " is covered below distance " +
                                std::to_string(d),
                            vectors[i], vectors[j], find_covering_error(g, d, diff));
        }
    return true;
}

} // namespace graphcode
