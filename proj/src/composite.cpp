#include "graphcode/composite.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graphcode/families.hpp"
#include "graphcode/graph_state.hpp"
#include "graphcode/io.hpp"

namespace graphcode {

BezoutPair canonical_bezout(i64 p, i64 q) {
    if (p < 2 || q < 2) throw InputError("bezout: moduli must be at least 2");
    if (std::gcd(p, q) != 1) throw InputError("bezout: moduli are not coprime");
    // extended gcd: x*p + y*q = 1
    i64 r0 = p, r1 = q, x0 = 1, x1 = 0;
    while (r1 != 0) {
        const i64 quot = r0 / r1;
        r0 -= quot * r1;
        std::swap(r0, r1);
        x0 -= quot * x1;
        std::swap(x0, x1);
    }
    BezoutPair bz;
    bz.p = p;
    bz.q = q;
    bz.alpha = mod_reduce(x0, q);
    bz.beta = (1 - bz.alpha * p) / q;
    return bz;
}

std::pair<WeightedGraph, WeightedGraph> crt_split(const WeightedGraph& g, i64 p, i64 q) {
    if (p * q != g.p) throw InputError("crt_split: factors do not multiply to the modulus");
    canonical_bezout(p, q); // coprimality check
    WeightedGraph gp = WeightedGraph::empty(p, g.n);
    WeightedGraph gq = WeightedGraph::empty(q, g.n);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            gp.w[static_cast<std::size_t>(a * g.n + b)] = mod_reduce(q * g.at(a, b), p);
            gq.w[static_cast<std::size_t>(a * g.n + b)] = mod_reduce(p * g.at(a, b), q);
        }
    return {std::move(gp), std::move(gq)};
}

WeightedGraph crt_combine(const WeightedGraph& gp, const WeightedGraph& gq) {
    if (gp.n != gq.n) throw DimensionError("crt_combine: vertex counts differ");
    const BezoutPair bz = canonical_bezout(gp.p, gq.p);
    const i64 pq = gp.p * gq.p;
    WeightedGraph g = WeightedGraph::empty(pq, gp.n);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            g.w[static_cast<std::size_t>(a * g.n + b)] =
                mod_reduce(bz.p * bz.alpha * bz.alpha * gq.at(a, b) +
                               bz.q * bz.beta * bz.beta * gp.at(a, b),
                           pq);
    return g;
}

i64 relabel_digit(i64 p, i64 q, i64 s, i64 t) { return mod_reduce(p * t + q * s, p * q); }

ZpVec relabel_isometry_index(const ZpVec& s, const ZpVec& t) {
    if (s.size() != t.size()) throw DimensionError("relabel: length mismatch");
    const i64 p = s.p(), q = t.p();
    canonical_bezout(p, q);
    ZpVec out(p * q, s.size());
    for (std::size_t a = 0; a < s.size(); ++a) out.set(a, relabel_digit(p, q, s[a], t[a]));
    return out;
}

ZpVec crt_merge_vector(const ZpVec& cp, const ZpVec& cq) {
    if (cp.size() != cq.size()) throw DimensionError("crt_merge: length mismatch");
    const BezoutPair bz = canonical_bezout(cp.p(), cq.p());
    ZpVec out(bz.p * bz.q, cp.size());
    for (std::size_t a = 0; a < cp.size(); ++a)
        out.set(a, bz.beta * bz.q * cp[a] + bz.alpha * bz.p * cq[a]);
    return out;
}

Theorem2Report theorem2_check(const WeightedGraph& gp, const WeightedGraph& gq,
                              std::size_t state_bound, double tol) {
    if (gp.n != gq.n) throw DimensionError("theorem2_check: vertex counts differ");
    const std::size_t bound = state_bound ? state_bound : default_state_bound();
    const WeightedGraph g = crt_combine(gp, gq);
    const ZpVec zp(gp.p, static_cast<std::size_t>(gp.n));
    const ZpVec zq(gq.p, static_cast<std::size_t>(gq.n));
    const ZpVec zpq(g.p, static_cast<std::size_t>(g.n));
    const DenseState sp = build_state(gp, zp, bound);
    const DenseState sq = build_state(gq, zq, bound);
    const DenseState spq = build_state(g, zpq, bound);

    Theorem2Report rep;
    rep.tol = tol;
    for (std::size_t si = 0; si < sp.amp.size(); ++si) {
        const ZpVec s = decode_index(gp.p, gp.n, si);
        for (std::size_t ti = 0; ti < sq.amp.size(); ++ti) {
            const ZpVec t = decode_index(gq.p, gq.n, ti);
            const std::size_t li = encode_index(relabel_isometry_index(s, t));
            const double dev = std::abs(spq.amp[li] - sp.amp[si] * sq.amp[ti]);
            rep.max_dev = std::max(rep.max_dev, dev);
        }
    }
    rep.ok = rep.max_dev <= tol;
    return rep;
}

GraphCode product_code(const GraphCode& cp, const GraphCode& cq, bool certify,
                       std::size_t state_bound) {
    if (cp.n() != cq.n()) throw DimensionError("product_code: vertex counts differ");
    if (cp.d != cq.d) throw InputError("product_code: factor distances differ");
    WeightedGraph g = crt_combine(cp.graph, cq.graph);
    std::vector<ZpVec> clique;
    clique.reserve(cp.K() * cq.K());
    for (const auto& a : cp.clique)
        for (const auto& b : cq.clique) clique.push_back(crt_merge_vector(a, b));
    GraphCode code = make_code(std::move(g), std::move(clique), cp.d);
    if (code.K() != cp.K() * cq.K())
        throw ValidationError("product_code: merged clique lost vectors");
    classify(code);

    if (certify) {
        // every merged basis vector must equal the relabeled product state
        const std::size_t bound = state_bound ? state_bound : default_state_bound();
        std::vector<DenseState> sps, sqs;
        for (const auto& a : cp.clique) sps.push_back(build_state(cp.graph, a, bound));
        for (const auto& b : cq.clique) sqs.push_back(build_state(cq.graph, b, bound));
        double worst = 0.0;
        for (std::size_t i = 0; i < cp.clique.size(); ++i)
            for (std::size_t j = 0; j < cq.clique.size(); ++j) {
                const ZpVec e = crt_merge_vector(cp.clique[i], cq.clique[j]);
                const DenseState se = build_state(code.graph, e, bound);
                for (std::size_t si = 0; si < sps[i].amp.size(); ++si) {
                    const ZpVec s = decode_index(cp.p(), cp.n(), si);
                    for (std::size_t ti = 0; ti < sqs[j].amp.size(); ++ti) {
                        const ZpVec t = decode_index(cq.p(), cq.n(), ti);
                        const std::size_t li = encode_index(relabel_isometry_index(s, t));
                        worst = std::max(worst,
                                         std::abs(se.amp[li] - sps[i].amp[si] * sqs[j].amp[ti]));
                    }
                }
            }
        if (worst > 1e-9)
            throw ValidationError("product_code: merged state deviates from the factor product by " +
                                  std::to_string(worst));
    }
    return code;
}

const char* binary_6_1_3_text() {
    // frozen record: certified against the exhaustive oracle at 2^6 amplitudes
    return "code 2 6 3\n"
           "edge 1 2 1\n"
           "edge 2 3 1\n"
           "edge 3 4 1\n"
           "edge 4 5 1\n"
           "edge 1 5 1\n"
           "edge 5 6 1\n"
           "clique\n"
           "0,0,0,0,0,0\n"
           "1,1,1,1,1,0\n";
}

GraphCode binary_6_1_3() {
    const ParsedCode pc = parse_code_text(binary_6_1_3_text());
    GraphCode code = make_code(pc.graph, pc.clique, pc.d);
    classify(code);
    return code;
}

GraphCode family_6_2p2_3(i64 p) {
    if (p < 3 || p % 2 == 0) throw FamilyError("family 6_2p2_3 needs odd p >= 3");
    const GraphCode binary = binary_6_1_3();
    const WeightedGraph h6 = crt_combine(loop_graph(p, 6, -1), binary.graph);
    const i64 pq = 2 * p;
    std::vector<ZpVec> clique;
    clique.reserve(static_cast<std::size_t>(2 * p * p));
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b)
            for (i64 c = 0; c < 2; ++c) {
                ZpVec v(pq, 6);
                const i64 base[6] = {a, a + b, b, -a, a - b, b};
                const i64 leaf[6] = {c, c, c, c, c, 0};
                for (std::size_t i = 0; i < 6; ++i)
                    v.set(i, (p + 1) * base[i] + p * leaf[i]);
                clique.push_back(std::move(v));
            }
    GraphCode code = make_code(h6, std::move(clique), 3);
    classify(code);
    return code;
}

} // namespace graphcode
