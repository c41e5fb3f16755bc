#pragma once

#include <optional>
#include <string>

#include "graphcode/zp.hpp"

namespace graphcode {

// Membership bitmap over Z_p^n, mixed-radix encoded (vertex 0 most
// significant).
class VecBitmap {
  public:
    VecBitmap() = default;
    VecBitmap(i64 p, int n, std::size_t cap);

    i64 p() const { return p_; }
    int n() const { return n_; }
    std::size_t dim() const { return dim_; }
    bool test(std::size_t idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1u; }
    void set(std::size_t idx) { bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63); }
    std::size_t count() const;
    VecBitmap complement() const;
    std::vector<ZpVec> members(std::size_t cap = std::size_t{1} << 20) const;

  private:
    i64 p_ = 1;
    int n_ = 0;
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline constexpr std::size_t kDefaultVectorCap = std::size_t{1} << 24;

struct PuritySet {
    int d = 1;
    std::vector<ZpVec> members; // lexicographic, includes 0
};

struct UncoverableSet {
    int d = 1;
    VecBitmap members;
};

// {s : |sup(s) U sup(s*Gamma)| < d}, exact enumeration.
PuritySet purity_set(const WeightedGraph& g, int d, std::size_t cap = kDefaultVectorCap);

// Bitmap of {t - s*Gamma : 0 < |sup(s) U sup(t)| < d}.
VecBitmap covered_set(const WeightedGraph& g, int d, std::size_t cap = kDefaultVectorCap);

// Insert covered vectors for errors of support weight in [wlo, whi] into bm.
void accumulate_covered(const WeightedGraph& g, int wlo, int whi, VecBitmap& bm);

UncoverableSet uncoverable_set(const WeightedGraph& g, int d, std::size_t cap = kDefaultVectorCap);

struct CoverWitness {
    ZpVec s, t;
};

// First (deterministic) error of weight < d covering c, if any.
std::optional<CoverWitness> find_covering_error(const WeightedGraph& g, int d, const ZpVec& c);

struct SuperGraph {
    i64 p = 1;
    int n = 0;
    int d = 1;
    std::vector<ZpVec> vertices;          // lexicographic
    std::vector<std::uint64_t> adj;       // V rows of ceil(V/64) words
    std::size_t words = 0;

    bool adjacent(std::size_t i, std::size_t j) const {
        return (adj[i * words + (j >> 6)] >> (j & 63)) & 1u;
    }
};

// Vertices = uncoverable vectors orthogonal to the whole purity set; edges
// between pairs whose difference is uncoverable.
SuperGraph build_super_graph(const WeightedGraph& g, int d,
                             std::size_t vector_cap = kDefaultVectorCap,
                             std::size_t vertex_cap = std::size_t{1} << 14);

enum class CliqueMode { Max, AllOfSize, FirstOfSize };

// Branch-and-bound clique search restricted to cliques containing `anchor`
// (default: the zero vector).  Vertices are explored in degree-descending
// order with lexicographic ties; greedy coloring provides the bound.
// time_limit_s = 0 means no limit; exceeding it throws ResourceError.
std::vector<std::vector<ZpVec>> find_cliques(const SuperGraph& sg, CliqueMode mode, int k = 0,
                                             const ZpVec* anchor = nullptr,
                                             double time_limit_s = 0.0);

struct CliqueViolation {
    int condition = 0; // 1, 2 or 3
    std::string message;
    ZpVec a, b;                        // witnessing vectors
    std::optional<CoverWitness> error; // covering error for condition 3
};

// Conditions: i) 0 present;  ii) every vector orthogonal to the d-purity
// set;  iii) every difference of distinct vectors d-uncoverable.
bool is_coding_clique(const WeightedGraph& g, int d, const std::vector<ZpVec>& vectors,
                      CliqueViolation* violation = nullptr,
                      std::size_t cap = kDefaultVectorCap);

} // namespace graphcode
