#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "rootsys.hpp"

namespace a1lie {

// Coefficient vectors over the Chevalley basis, by ring.
using ZVec = std::vector<long long>;
using QVec = std::vector<BigRat>;

struct FpVec {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> c;
};

// Chevalley basis of the simple Lie algebra of the given type, with integer
// structure constants fixed by the extraspecial-pair convention: for each
// non-simple positive root, the special pair (alpha, beta) with alpha minimal
// in the root ordering gets N(alpha, beta) = q + 1 > 0.
//
// Basis layout (matching the weight grading of the principal torus action,
// lowest weight first):
//   0 .. N-1        f of the positive roots in reverse root order
//   N .. N+r-1      h_1 .. h_r
//   N+r .. N+r+N-1  e of the positive roots in root order
class ChevalleyBasis {
public:
    // Builds the constants, runs the internal consistency checks, and
    // persists them under cache_dir (unless empty). A pre-existing cache file
    // is compared entry-by-entry; any difference raises CacheCorruptionError.
    static const ChevalleyBasis& get(LieType t, const std::string& cache_dir = "");

    const RootSystem& roots() const { return *rs_; }
    LieType type() const { return rs_->type(); }
    int dim() const { return dim_; }
    int rank() const { return rs_->rank(); }
    int num_positive() const { return npos_; }

    int e_index(int root_idx) const { return npos_ + rank() + root_idx; }
    int f_index(int root_idx) const { return npos_ - 1 - root_idx; }
    int h_index(int i) const { return npos_ + i; }
    bool is_e(int basis_idx) const { return basis_idx >= npos_ + rank(); }
    bool is_f(int basis_idx) const { return basis_idx < npos_; }
    bool is_h(int basis_idx) const { return !is_e(basis_idx) && !is_f(basis_idx); }
    int root_of(int basis_idx) const;  // root index of an e/f basis vector

    // Twice the height grading: 2 ht on e_alpha, -2 ht on f_alpha, 0 on h.
    int weight(int basis_idx) const { return weights_[basis_idx]; }

    std::string basis_name(int basis_idx) const;

    // N(alpha, beta) for positive roots with alpha + beta a positive root.
    long long structure_constant(int root_a, int root_b) const;

    const std::vector<std::pair<int, int>>& bracket_basis(int i, int j, int& sign) const;

    ZVec bracket(const ZVec& a, const ZVec& b) const;
    QVec bracket(const QVec& a, const QVec& b) const;
    FpVec bracket(const FpVec& a, const FpVec& b) const;

    std::vector<ZVec> ad_matrix(const ZVec& a) const;  // column j = [a, basis_j]

    ZVec zero_z() const { return ZVec(dim_, 0); }
    QVec zero_q() const { return QVec(dim_, BigRat(0)); }
    FpVec zero_fp(std::uint32_t p) const { return FpVec{p, std::vector<std::uint32_t>(dim_, 0)}; }

    FpVec reduce_mod_p(const QVec& a, std::uint32_t p) const;
    FpVec reduce_mod_p(const ZVec& a, std::uint32_t p) const;

    // Exhaustive Jacobi check over all unordered basis triples; throws
    // ConsistencyError naming the first offending triple.
    void verify_jacobi() const;

    // Stable text serialization of the structure constants (also the cache
    // file format; see README).
    std::string serialize() const;
    std::uint64_t constants_hash() const;  // FNV-1a of serialize()

private:
    explicit ChevalleyBasis(const RootSystem& rs);
    void compute_constants();
    void build_table();
    void write_or_check_cache(const std::string& cache_dir) const;

    const RootSystem* rs_;
    int dim_ = 0;
    int npos_ = 0;
    std::vector<int> weights_;
    std::map<std::pair<int, int>, long long> npos_table_;  // (a<b) -> N(a,b)
    // bracket term lists for unordered pairs i<j
    std::vector<std::vector<std::pair<int, int>>> table_;
    int pair_slot(int i, int j) const { return i * dim_ + j; }
};

}  // namespace a1lie
