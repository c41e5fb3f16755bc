#include "graphcode/kl_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <thread>
#include <tuple>

namespace graphcode {

namespace {

constexpr std::size_t kFSampleCap = 64;

struct ErrorClass {
    std::vector<int> support; // ascending vertices, exact support of the error
    std::vector<i64> slocal;  // X exponents on the support (may be 0 there)
};

std::size_t class_t_count(i64 p, const ErrorClass& cls) {
    // admissible Z exponents: t_a != 0 wherever s_a == 0 (exact support)
    std::size_t c = 1;
    for (i64 s : cls.slocal) c *= static_cast<std::size_t>(s == 0 ? p - 1 : p);
    return c;
}

unsigned long long binomial(int n, int w) {
    if (w < 0 || w > n) return 0;
    unsigned long long r = 1;
    for (int i = 0; i < w; ++i) r = r * static_cast<unsigned long long>(n - i) /
                                    static_cast<unsigned long long>(i + 1);
    return r;
}

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

std::vector<int> unrank_support(int n, int w, unsigned long long rank) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(w));
    int next = 0;
    for (int i = 0; i < w; ++i) {
        for (int v = next; v < n; ++v) {
            unsigned long long block = binomial(n - v - 1, w - i - 1);
            if (rank < block) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return out;
}

void append_weight_classes(i64 p, int n, int w, std::vector<ErrorClass>& out) {
    for_each_support(n, w, [&](const std::vector<int>& W) {
        std::vector<i64> s(static_cast<std::size_t>(w), 0);
        while (true) {
            out.push_back(ErrorClass{W, s});
            int i = w - 1;
            while (i >= 0) {
                if (++s[static_cast<std::size_t>(i)] < p) break;
                s[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    });
}

struct PairList {
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // sorted bra-major
    std::size_t ref = 0; // index of the reference diagonal pair
};

PairList all_pairs(std::size_t K) {
    PairList pl;
    pl.pairs.reserve(K * K);
    for (std::size_t b = 0; b < K; ++b)
        for (std::size_t k = 0; k < K; ++k) pl.pairs.emplace_back(b, k);
    pl.ref = 0; // (0,0)
    return pl;
}

PairList sampled_pairs(std::size_t K, std::size_t budget, std::mt19937_64& rng) {
    if (budget == 0) budget = 1;
    if (K * K <= budget) return all_pairs(K);
    PairList pl;
    std::size_t diag_quota = std::min(K, std::max<std::size_t>(budget / 2, 1));
    std::size_t off_quota = std::min(budget - diag_quota, K * K - K);
    std::vector<std::size_t> idx(K);
    for (std::size_t i = 0; i < K; ++i) idx[i] = i;
    for (std::size_t i = 0; i < diag_quota; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng() % (K - i));
        std::swap(idx[i], idx[j]);
    }
    std::set<std::pair<std::size_t, std::size_t>> chosen;
    for (std::size_t i = 0; i < diag_quota; ++i) chosen.emplace(idx[i], idx[i]);
    while (off_quota > 0) {
        std::size_t b = static_cast<std::size_t>(rng() % K);
        std::size_t k = static_cast<std::size_t>(rng() % K);
        if (b == k) continue;
        if (chosen.emplace(b, k).second) --off_quota;
    }
    pl.pairs.assign(chosen.begin(), chosen.end());
    for (std::size_t i = 0; i < pl.pairs.size(); ++i)
        if (pl.pairs[i].first == pl.pairs[i].second) {
            pl.ref = i;
            break;
        }
    return pl;
}

struct EngineAcc {
    double worst = 0.0;
    std::size_t errors = 0;
    std::size_t f_count = 0;
    // (class_idx, t_idx, pair_idx) ordering key for deterministic merging
    std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> fail_key;
    KlCounterexample fail;
    std::vector<std::tuple<std::size_t, std::size_t, PauliOp, cplx>> fs;
};

void engine_run(const WeightedGraph& g, const std::vector<ZpVec>& clique,
                const std::vector<PhaseState>& states, const std::vector<ErrorClass>& classes,
                std::size_t lo, std::size_t hi, const PairList& pl, double tol, bool check_f,
                EngineAcc& acc) {
    const i64 p = g.p;
    const int n = g.n;
    const std::size_t dim = states.front().pw.size();
    const std::uint32_t up = static_cast<std::uint32_t>(p);
    const double inv_dim = 1.0 / static_cast<double>(dim);
    std::vector<cplx> omega(static_cast<std::size_t>(p));
    for (i64 j = 0; j < p; ++j) omega[static_cast<std::size_t>(j)] = phase_unit(p, 2 * j);

    std::vector<std::uint32_t> perm(dim), bucket(dim);
    std::vector<std::uint16_t> negb(dim);
    std::vector<i64> digits(static_cast<std::size_t>(n));

    for (std::size_t ci = lo; ci < hi; ++ci) {
        const ErrorClass& cls = classes[ci];
        const int w = static_cast<int>(cls.support.size());
        std::size_t pw = 1;
        for (int i = 0; i < w; ++i) pw *= static_cast<std::size_t>(p);

        ZpVec s_full(p, static_cast<std::size_t>(n));
        for (int i = 0; i < w; ++i)
            s_full.set(static_cast<std::size_t>(cls.support[static_cast<std::size_t>(i)]),
                       cls.slocal[static_cast<std::size_t>(i)]);

        // index tables: perm[m] = enc(m + s), bucket[m] = enc(m restricted to support)
        std::fill(digits.begin(), digits.end(), 0);
        for (std::size_t m = 0; m < dim; ++m) {
            std::size_t pi = 0, bi = 0;
            int wi = 0;
            for (int a = 0; a < n; ++a) {
                const i64 da = digits[static_cast<std::size_t>(a)];
                pi = pi * static_cast<std::size_t>(p) +
                     static_cast<std::size_t>(mod_reduce(da + s_full[static_cast<std::size_t>(a)], p));
                if (wi < w && cls.support[static_cast<std::size_t>(wi)] == a) {
                    bi = bi * static_cast<std::size_t>(p) + static_cast<std::size_t>(da);
                    ++wi;
                }
            }
            perm[m] = static_cast<std::uint32_t>(pi);
            bucket[m] = static_cast<std::uint32_t>(bi);
            for (int a = n - 1; a >= 0; --a) {
                if (++digits[static_cast<std::size_t>(a)] < p) break;
                digits[static_cast<std::size_t>(a)] = 0;
            }
        }

        // accumulate the bucketed inner products for every requested pair;
        // conj(bra[perm[m]]) * ket[m] = omega^{ket_pw[m] - bra_pw[perm[m]]} / dim
        // with the 1/dim normalization deferred to matrix_entry
        std::vector<cplx> accbuf(pl.pairs.size() * pw, cplx{0.0, 0.0});
        std::size_t pi = 0;
        while (pi < pl.pairs.size()) {
            const std::size_t b = pl.pairs[pi].first;
            const auto& gb = states[b].pw;
            for (std::size_t m = 0; m < dim; ++m) {
                const std::uint32_t v = up - gb[perm[m]];
                negb[m] = static_cast<std::uint16_t>(v == up ? 0 : v);
            }
            while (pi < pl.pairs.size() && pl.pairs[pi].first == b) {
                const auto& gk = states[pl.pairs[pi].second].pw;
                cplx* a = accbuf.data() + pi * pw;
                for (std::size_t m = 0; m < dim; ++m) {
                    std::uint32_t v = negb[m] + gk[m];
                    if (v >= up) v -= up;
                    a[bucket[m]] += omega[v];
                }
                ++pi;
            }
        }

        // digit table for the bucket labels
        std::vector<i64> ydig(pw * static_cast<std::size_t>(w));
        for (std::size_t y = 0; y < pw; ++y) {
            std::size_t v = y;
            for (int i = w - 1; i >= 0; --i) {
                ydig[y * static_cast<std::size_t>(w) + static_cast<std::size_t>(i)] =
                    static_cast<i64>(v % static_cast<std::size_t>(p));
                v /= static_cast<std::size_t>(p);
            }
        }

        // sweep every admissible t for this class
        std::vector<i64> t(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i)
            t[static_cast<std::size_t>(i)] = cls.slocal[static_cast<std::size_t>(i)] == 0 ? 1 : 0;
        std::vector<cplx> ompow(pw);
        std::size_t t_idx = 0;
        while (true) {
            for (std::size_t y = 0; y < pw; ++y) {
                i64 d = 0;
                for (int i = 0; i < w; ++i)
                    d += t[static_cast<std::size_t>(i)] *
                         ydig[y * static_cast<std::size_t>(w) + static_cast<std::size_t>(i)];
                ompow[y] = omega[static_cast<std::size_t>(mod_reduce(d, p))];
            }
            auto matrix_entry = [&](std::size_t pair_idx) {
                const cplx* a = accbuf.data() + pair_idx * pw;
                cplx m{0.0, 0.0};
                for (std::size_t y = 0; y < pw; ++y) m += a[y] * ompow[y];
                return m * inv_dim;
            };
            auto full_error = [&]() {
                ZpVec t_full(p, static_cast<std::size_t>(n));
                for (int i = 0; i < w; ++i)
                    t_full.set(static_cast<std::size_t>(cls.support[static_cast<std::size_t>(i)]),
                               t[static_cast<std::size_t>(i)]);
                return make_pauli(0, s_full, t_full);
            };

            const cplx f = matrix_entry(pl.ref);
            if (std::abs(f) > tol) {
                ++acc.f_count;
                if (acc.fs.size() < kFSampleCap) acc.fs.emplace_back(ci, t_idx, full_error(), f);
                if (check_f) {
                    bool prop = std::abs(std::abs(f) - 1.0) <= tol;
                    if (prop)
                        for (const auto& c : clique)
                            if (dot(s_full, c) != 0) {
                                prop = false;
                                break;
                            }
                    if (prop) {
                        const ZpVec want = mat_vec(g, s_full);
                        PauliOp e = full_error();
                        prop = (e.z == want);
                    }
                    if (!prop) {
                        auto key = std::make_tuple(ci, t_idx, pl.ref);
                        if (!acc.fail_key || key < *acc.fail_key) {
                            acc.fail_key = key;
                            const auto& pr = pl.pairs[pl.ref];
                            acc.fail = KlCounterexample{
                                full_error(), pr.first, pr.second, f, cplx{0.0, 0.0}, std::abs(f),
                                "nonzero f(E) for an error not proportional to a stabilizer element"};
                        }
                    }
                }
            }
            for (std::size_t pj = 0; pj < pl.pairs.size(); ++pj) {
                const cplx m = matrix_entry(pj);
                const bool diag = pl.pairs[pj].first == pl.pairs[pj].second;
                const cplx expected = diag ? f : cplx{0.0, 0.0};
                const double dev = std::abs(m - expected);
                if (dev > acc.worst) acc.worst = dev;
                if (dev > tol) {
                    auto key = std::make_tuple(ci, t_idx, pj);
                    if (!acc.fail_key || key < *acc.fail_key) {
                        acc.fail_key = key;
                        acc.fail = KlCounterexample{
                            full_error(), pl.pairs[pj].first, pl.pairs[pj].second, m, expected, dev,
                            diag ? "diagonal entry deviates from the common f(E)"
                                 : "off-diagonal matrix element is nonzero"};
                    }
                }
            }

            ++t_idx;
            int i = w - 1;
            while (i >= 0) {
                i64& ti = t[static_cast<std::size_t>(i)];
                ++ti;
                if (ti < p) break;
                ti = cls.slocal[static_cast<std::size_t>(i)] == 0 ? 1 : 0;
                // a zero X exponent forbids t = 0 (exact support); p >= 2 keeps this nonempty
                --i;
            }
            if (i < 0) break;
        }
        acc.errors += t_idx;
    }
}

EngineAcc engine_parallel(const WeightedGraph& g, const std::vector<ZpVec>& clique,
                          const std::vector<PhaseState>& states,
                          const std::vector<ErrorClass>& classes, const PairList& pl, double tol,
                          bool check_f, int threads) {
    const std::size_t T =
        std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                       std::max<std::size_t>(classes.size(), 1)));
    std::vector<EngineAcc> parts(T);
    if (T == 1) {
        engine_run(g, clique, states, classes, 0, classes.size(), pl, tol, check_f, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < T; ++i) {
            const std::size_t lo = classes.size() * i / T;
            const std::size_t hi = classes.size() * (i + 1) / T;
            pool.emplace_back([&, i, lo, hi] {
                engine_run(g, clique, states, classes, lo, hi, pl, tol, check_f, parts[i]);
            });
        }
        for (auto& th : pool) th.join();
    }
    EngineAcc merged;
    for (auto& part : parts) {
        merged.worst = std::max(merged.worst, part.worst);
        merged.errors += part.errors;
        merged.f_count += part.f_count;
        if (part.fail_key && (!merged.fail_key || *part.fail_key < *merged.fail_key)) {
            merged.fail_key = part.fail_key;
            merged.fail = part.fail;
        }
        for (auto& t : part.fs)
            if (merged.fs.size() < kFSampleCap) merged.fs.push_back(std::move(t));
    }
    return merged;
}

std::vector<PhaseState> build_basis(const WeightedGraph& g, const std::vector<ZpVec>& clique,
                                    std::size_t bound) {
    std::vector<PhaseState> states;
    states.reserve(clique.size());
    for (const auto& c : clique) states.push_back(build_phase_state(g, c, bound));
    return states;
}

} // namespace

KlReport kl_verify(const GraphCode& code, const KlOptions& opts) {
    const WeightedGraph& g = code.graph;
    KlReport report;
    report.mode = opts.mode;
    report.tol = opts.tol;
    const int maxw = std::min(opts.max_weight < 0 ? code.d - 1 : opts.max_weight, g.n);
    report.max_weight = maxw;
    if (opts.mode == KlMode::Sampled) report.seed = opts.seed;
    if (maxw <= 0) return report; // nothing below the distance to check

    const std::size_t bound = opts.state_bound ? opts.state_bound : default_state_bound();
    const std::vector<PhaseState> states = build_basis(g, code.clique, bound);
    const std::size_t K = code.clique.size();

    std::vector<ErrorClass> classes;
    PairList pl;
    if (opts.mode == KlMode::Exhaustive) {
        std::size_t total = 0;
        for (int w = 1; w <= maxw; ++w) {
            std::size_t per = 1;
            for (int i = 0; i < w; ++i) per *= static_cast<std::size_t>(g.p * g.p - 1);
            total += static_cast<std::size_t>(binomial(g.n, w)) * per;
        }
        if (total > opts.error_budget)
            throw ResourceError("exhaustive error count " + std::to_string(total) +
                                " exceeds budget " + std::to_string(opts.error_budget));
        for (int w = 1; w <= maxw; ++w) append_weight_classes(g.p, g.n, w, classes);
        pl = all_pairs(K);
    } else {
        std::mt19937_64 rng(opts.seed);
        pl = sampled_pairs(K, opts.pair_budget, rng);
        // per-weight totals of exact-weight errors
        std::vector<std::size_t> totals(static_cast<std::size_t>(maxw) + 1, 0);
        std::size_t total = 0;
        for (int w = 1; w <= maxw; ++w) {
            std::size_t per = 1;
            for (int i = 0; i < w; ++i) per *= static_cast<std::size_t>(g.p * g.p - 1);
            totals[static_cast<std::size_t>(w)] = static_cast<std::size_t>(binomial(g.n, w)) * per;
            total += totals[static_cast<std::size_t>(w)];
        }
        if (total == 0) return report;
        std::size_t credited = 0;
        while (credited < opts.samples) {
            std::size_t r = static_cast<std::size_t>(rng() % total);
            int w = 1;
            while (r >= totals[static_cast<std::size_t>(w)]) {
                r -= totals[static_cast<std::size_t>(w)];
                ++w;
            }
            const unsigned long long srank = rng() % binomial(g.n, w);
            ErrorClass cls;
            cls.support = unrank_support(g.n, w, srank);
            cls.slocal.resize(static_cast<std::size_t>(w));
            for (int i = 0; i < w; ++i)
                cls.slocal[static_cast<std::size_t>(i)] = static_cast<i64>(rng() % static_cast<std::uint64_t>(g.p));
            credited += class_t_count(g.p, cls);
            classes.push_back(std::move(cls));
        }
    }

    EngineAcc acc = engine_parallel(g, code.clique, states, classes, pl, opts.tol, opts.check_f,
                                    resolve_threads(opts.threads));
    report.classes_checked = classes.size();
    report.errors_checked = acc.errors;
    report.worst_dev = acc.worst;
    report.f_nonzero_count = acc.f_count;
    for (auto& t : acc.fs) report.f_nonzero.emplace_back(std::get<2>(t), std::get<3>(t));
    if (acc.fail_key) {
        report.ok = false;
        report.counterexample = acc.fail;
    }
    return report;
}

int oracle_distance(const WeightedGraph& g, const std::vector<ZpVec>& clique,
                    const KlOptions& opts) {
    std::vector<ZpVec> canon = canonicalize_clique(clique);
    const std::size_t bound = opts.state_bound ? opts.state_bound : default_state_bound();
    const std::vector<PhaseState> states = build_basis(g, canon, bound);
    const PairList pl = all_pairs(canon.size());
    const int threads = resolve_threads(opts.threads);

    std::size_t spent = 0;
    for (int w = 1; w <= g.n; ++w) {
        std::vector<ErrorClass> classes;
        append_weight_classes(g.p, g.n, w, classes);
        std::size_t per = 1;
        for (int i = 0; i < w; ++i) per *= static_cast<std::size_t>(g.p * g.p - 1);
        spent += static_cast<std::size_t>(binomial(g.n, w)) * per;
        if (spent > opts.error_budget)
            throw ResourceError("oracle_distance error budget exceeded at weight " +
                                std::to_string(w));
        EngineAcc acc =
            engine_parallel(g, canon, states, classes, pl, opts.tol, /*check_f=*/false, threads);
        if (canon.size() == 1) {
            // pure state: distance is the smallest weight carrying a nonzero f
            if (acc.f_count > 0) return w;
        } else if (acc.fail_key) {
            return w;
        }
    }
    return g.n + 1;
}

TableReport verify_stabilizer_table(const GraphCode& code, const std::vector<PauliOp>& claims,
                                    const TableOptions& opts) {
    if (claims.empty()) throw InputError("verify_stabilizer_table: no claimed generators");
    const WeightedGraph& g = code.graph;
    TableReport report;
    for (const auto& e : claims)
        if (e.p != g.p || e.n() != static_cast<std::size_t>(g.n))
            throw DimensionError("claimed generator has wrong modulus or length");

    const std::size_t bound = opts.state_bound ? opts.state_bound : default_state_bound();
    std::vector<std::size_t> which(code.clique.size());
    for (std::size_t i = 0; i < which.size(); ++i) which[i] = i;
    if (opts.max_states != 0 && opts.max_states < which.size()) {
        std::mt19937_64 rng(opts.seed);
        for (std::size_t i = 0; i < opts.max_states; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng() % (which.size() - i));
            std::swap(which[i], which[j]);
        }
        which.resize(opts.max_states);
        std::sort(which.begin(), which.end());
    }

    std::vector<cplx> out;
    for (std::size_t idx : which) {
        const DenseState st = build_state(g, code.clique[idx], bound);
        out.resize(st.amp.size());
        for (std::size_t ei = 0; ei < claims.size(); ++ei) {
            apply_pauli(claims[ei], st.amp, out);
            double dev = 0.0;
            for (std::size_t m = 0; m < out.size(); ++m)
                dev = std::max(dev, std::abs(out[m] - st.amp[m]));
            report.worst_dev = std::max(report.worst_dev, dev);
            if (dev > opts.tol && report.ok) {
                report.ok = false;
                report.message = "claimed generator " + std::to_string(ei + 1) +
                                 " fails to stabilize basis state " + std::to_string(idx + 1) +
                                 " (deviation " + std::to_string(dev) + ")";
            }
        }
        ++report.states_checked;
    }

    std::vector<ZpVec> xparts;
    xparts.reserve(claims.size());
    for (const auto& e : claims) xparts.push_back(e.x);
    report.claimed_span = howell_basis(xparts).size();
    report.expected_span = code.stabilizer.size();
    if (report.claimed_span != report.expected_span && report.ok) {
        report.ok = false;
        report.message = "claimed generators span a group of size " +
                         std::to_string(report.claimed_span) + " but the stabilizer has size " +
                         std::to_string(report.expected_span);
    }
    return report;
}

} // namespace graphcode
