#pragma once

#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "graphcode/errors.hpp"

namespace graphcode {

using i64 = std::int64_t;

// Reduce v into [0, p).
inline i64 mod_reduce(i64 v, i64 p) {
    i64 r = v % p;
    return r < 0 ? r + p : r;
}

// p^n as a size;  throws ResourceError if the result would exceed `cap`.
std::size_t pow_size(i64 p, int n, std::size_t cap);

// A vector over Z_p with fixed length.  All entries are kept in [0, p).
class ZpVec {
  public:
    ZpVec() = default;
    ZpVec(i64 p, std::size_t n);
    ZpVec(i64 p, std::vector<i64> entries); // entries reduced mod p
    // Braced entry lists must mean entries, never a length, so single-element
    // lists don't silently bind to the (p, n) constructor above.
    ZpVec(i64 p, std::initializer_list<i64> entries)
        : ZpVec(p, std::vector<i64>(entries)) {}

    i64 p() const { return p_; }
    std::size_t size() const { return e_.size(); }
    i64 operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, i64 v) { e_[i] = mod_reduce(v, p_); }
    const std::vector<i64>& entries() const { return e_; }

    bool is_zero() const;
    ZpVec operator+(const ZpVec& o) const;
    ZpVec operator-(const ZpVec& o) const;
    ZpVec operator*(i64 k) const; // scalar multiple
    bool operator==(const ZpVec& o) const { return p_ == o.p_ && e_ == o.e_; }
    bool operator!=(const ZpVec& o) const { return !(*this == o); }
    bool operator<(const ZpVec& o) const; // lexicographic, same p/size only

    std::string str() const; // "(1,0,2)"

  private:
    void check_compatible(const ZpVec& o) const;
    i64 p_ = 1;
    std::vector<i64> e_;
};

// Inner product a.b mod p.
i64 dot(const ZpVec& a, const ZpVec& b);

// Indices of nonzero entries, ascending.
std::vector<int> support(const ZpVec& v);

// Encode a vector as a mixed-radix index with vertex 0 most significant.
std::size_t encode_index(const ZpVec& v);
ZpVec decode_index(i64 p, int n, std::size_t idx);

// Symmetric Z_p-weighted graph with zero diagonal, stored densely.
struct WeightedGraph {
    i64 p = 1;
    int n = 0;
    std::vector<i64> w; // n*n row-major, symmetric, zero diagonal

    static WeightedGraph empty(i64 p, int n);
    i64 at(int a, int b) const { return w[static_cast<std::size_t>(a) * n + b]; }
    void set_edge(int a, int b, i64 weight); // 0-based; throws on a==b
    ZpVec row(int a) const;
    bool operator==(const WeightedGraph& o) const {
        return p == o.p && n == o.n && w == o.w;
    }
};

// s * Gamma (row vector times adjacency matrix) over Z_p.
ZpVec mat_vec(const WeightedGraph& g, const ZpVec& s);

// Basis of a finite Z_p-module (subgroup of Z_p^n) in primary-decomposition
// form: generators g_i of prime-power additive order mu_i = degrees[i],
// with the module equal to the internal direct sum of the <g_i>.
// degrees are sorted descending, ties broken by generator lex order.
struct ZpModuleBasis {
    i64 p = 1;
    int n = 0;
    std::vector<ZpVec> generators;
    std::vector<i64> degrees;

    i64 size() const; // product of degrees (1 for the trivial module)
    // All module elements in deterministic order (sorted lex).
    // Throws ResourceError if size() > cap.
    std::vector<ZpVec> elements(i64 cap = i64{1} << 20) const;
    bool contains(const ZpVec& v, i64 cap = i64{1} << 20) const;
};

// Canonical basis of the module generated by `vectors` inside Z_p^n.
ZpModuleBasis howell_basis(const std::vector<ZpVec>& vectors);

// Basis of {s in Z_p^n : dot(s, v) == 0 for every v in `vectors`}.
ZpModuleBasis solve_orthogonal(const std::vector<ZpVec>& vectors, i64 p, int n);
ZpModuleBasis solve_orthogonal(const std::vector<ZpVec>& vectors); // nonempty

} // namespace graphcode
