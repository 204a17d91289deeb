#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chevalley.hpp"
#include "exactalg.hpp"

namespace a1lie {

// exp(ad(gamma*y)) mod p for y an integer combination of root vectors of one
// sign. The series is computed over exact rationals (denominators j!) and
// reduced term by term; every term is checked to be p-integral, which turns
// the Chevalley p-integrality theorem into an executable assertion.
class NilpotentExp {
public:
    NilpotentExp(const ChevalleyBasis& cb, const ZVec& y, std::uint32_t p);

    std::uint32_t p() const { return p_; }
    int truncation_order() const { return (int)terms_.size() - 1; }

    FpMatrix at(std::uint32_t gamma) const;
    const FpMatrix& term(int j) const { return terms_[j]; }

private:
    std::uint32_t p_;
    std::vector<FpMatrix> terms_;  // terms_[j] = (ad y)^j / j!  mod p
};

struct TorusAction {
    std::uint32_t p = 0;
    std::uint32_t xi = 0;           // smallest primitive root mod p
    std::vector<int> weight;        // 2*ht on e, -2*ht on f, 0 on Cartan
};

TorusAction make_torus_action(const ChevalleyBasis& cb, std::uint32_t p);

// Diagonal action of t(c) on the Chevalley basis.
FpMatrix torus_matrix(const TorusAction& ta, std::uint32_t c);

struct Sl2TripleZ {
    ZVec e, h, f;
    std::vector<long long> f_coeffs;  // over the simple f's, Bourbaki order
};

// The principal triple: e = sum of simple e's, h the unique Cartan element
// with alpha_j(h) = 2 for all j, f the matching combination of simple f's.
// Relations are verified over Z before returning.
Sl2TripleZ principal_sl2_Z(const ChevalleyBasis& cb);

ZVec regular_nilpotent_e(const ChevalleyBasis& cb);

FpMatrix exp_ad(const ChevalleyBasis& cb, const ZVec& y, std::uint32_t gamma,
                std::uint32_t p);

FpMatrix regular_unipotent(const ChevalleyBasis& cb, std::uint32_t p);

struct WeightedFixedBasis {
    std::vector<FpVec> vectors;   // basis of ker(x-1), one eigenvector each
    std::vector<int> exponents;   // torus exponent mod (p-1), in [0, p-1)
};

WeightedFixedBasis fixed_space_weights(const ChevalleyBasis& cb, const FpMatrix& x,
                                       const TorusAction& ta);

// Z-lift of a solved triple mod p with e = sum of simple e's and f supported
// on the simple f's. Over Z the relations force alpha_j([e,f]) = 2 for all j,
// so the Cartan solve pins the only candidate; it is accepted when it is
// congruent to the input mod p and lies in the window [0, 10p).
std::optional<Sl2TripleZ> integral_lift_check(const ChevalleyBasis& cb,
                                              const FpVec& e, const FpVec& f);

}  // namespace a1lie
