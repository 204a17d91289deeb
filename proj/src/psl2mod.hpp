#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace a1lie {

// Indecomposable modules of PSL2(p) in defining characteristic, as symbolic
// shapes:
//   Simple(i)   L(i), even i in [0, p-1], dimension i+1
//   ProjU       the projective cover of the trivial module, dimension p
//   ProjW(i)    the projective cover of L(i), even i in [2, p-3], dim 2p
//   Window      reducible non-projective indecomposable described by a
//               contiguous window of the master tuple [1, p-2, 3, p-4, ...]
//               plus the parity of the socle positions inside the window.
struct Shape {
    enum class Kind { Simple, ProjU, ProjW, Window };
    Kind kind = Kind::Simple;
    int hw = 0;                // Simple / ProjW highest weight
    int start = 0, len = 0;    // Window: 1-based positions in the master tuple
    bool socle_odd = true;     // Window: socle factors at odd relative positions

    auto key() const { return std::tuple((int)kind, hw, start, len, (int)socle_odd); }
    bool operator==(const Shape& o) const { return key() == o.key(); }
    bool operator<(const Shape& o) const { return key() < o.key(); }
};

int master_tuple_entry(int k, std::uint32_t p);  // k in [1, p-1]

Shape make_simple(int i, std::uint32_t p);
Shape make_proj_u();
Shape make_proj_w(int i, std::uint32_t p);
Shape make_window(int start, int len, bool socle_odd, std::uint32_t p);  // canonicalized

int shape_dim(const Shape& s, std::uint32_t p);
std::vector<int> shape_jordan_blocks(const Shape& s, std::uint32_t p);  // descending
std::vector<int> shape_factors(const Shape& s, std::uint32_t p);        // highest weights
std::vector<int> socle_weights(const Shape& s, std::uint32_t p);
std::vector<int> head_weights(const Shape& s, std::uint32_t p);
Shape dual_shape(const Shape& s, std::uint32_t p);
std::string shape_to_string(const Shape& s, std::uint32_t p);

struct ShapeProfile {
    int dim = 0;
    std::vector<int> jordan_blocks;
    std::vector<int> socle;
    std::vector<int> head;
    Shape dual;
};
ShapeProfile shape_profile(const Shape& s, std::uint32_t p);

enum class EigenMode { Safe, Paper };

// Exponents (mod p-1) of the torus element on the x-fixed space of the
// shape. Windows are heuristic: Paper mode reports the socle weights (padded
// with wildcards up to the Jordan block count), Safe mode only wildcards.
struct FixedExponents {
    std::vector<int> exps;  // residues in [0, p-1)
    int wildcards = 0;
};
FixedExponents fixed_eigen_exponents(const Shape& s, std::uint32_t p, EigenMode mode);

int trace_order2(const Shape& s, std::uint32_t p);
int trace_order3(const Shape& s, std::uint32_t p);

// Multiset of shapes with p and the ambient dimension they must fill.
struct Decomposition {
    std::uint32_t p = 0;
    std::vector<Shape> parts;  // kept sorted

    void sort_parts();
    int dim() const;
    bool operator==(const Decomposition& o) const { return p == o.p && parts == o.parts; }
    bool operator<(const Decomposition& o) const;
    std::string to_string() const;
};

std::vector<int> decomposition_jordan(const Decomposition& d);  // descending

// residue mod m -> eigenvalue multiplicity of the order-m torus class of
// PSL2(p) acting via the composition factors' weight strings
std::map<int, long long> eigen_multiplicities_order_m(const Decomposition& d, int m);
std::map<int, long long> shape_eigen_multiplicities_order_m(const Shape& s, std::uint32_t p,
                                                            int m);

// Hardcoded highest-weight lists of the adjoint tilting module per type;
// input to decompose_tilting.
// (declared in adjoint_data.hpp)

// Greedy highest-weight peeling of a tilting-module weight list into
// indecomposable summands: c <= p-1 gives L(c); p <= c <= 2p-2 gives the
// projective W(2p-2-c), consuming the constituent weight 2p-2-c as well.
Decomposition decompose_tilting(const std::vector<int>& weights, std::uint32_t p);

}  // namespace a1lie
