#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chevalley.hpp"
#include "exactalg.hpp"
#include "fppoly.hpp"
#include "oneparam.hpp"

namespace a1lie {

// Standard-basis ansatz for the socle summand L(2) (wdim 3) or L(4)
// (wdim 5): slot k holds the weight-(wdim-1-2k) element, constrained to
// ker((x-1)^(k+1)) intersected with the matching eigenspace of s.
struct Ansatz {
    std::uint32_t p = 0;
    int wdim = 0;
    FpMatrix x;
    std::vector<std::vector<FpVec>> slot_basis;
    std::vector<int> slot_var_offset;
    int nvars = 0;
    std::vector<std::string> var_names;
    std::string dim_note;  // non-fatal mismatch vs expected slot dimensions
};

Ansatz build_ansatz(const ChevalleyBasis& cb, std::uint32_t p, int wdim,
                    const std::vector<int>* expected_slot_dims = nullptr);

// Linear x-action constraints plus the abelian-centralizer cubic; the
// x'-propagation constraints are branch-dependent and added during solving.
PolySystem impose_constraints(const ChevalleyBasis& cb, const Ansatz& az);

struct ClassifiedFamily {
    enum class Class { SL2, NILPOTENT_POSITIVE, OTHER };
    SolutionFamily sol;
    Class cls = Class::OTHER;
    bool sl2_relations_identical = false;
    std::optional<Sl2TripleZ> lift;
    bool has_deformation = false;
    bool deformation_ok = false;
    bool positive_support = false;
    bool bracket_closure = false;
    int certificate_samples = 0;
    std::string detail;
};

struct BranchOutcome {
    std::string label;
    std::vector<ClassifiedFamily> families;
};

// Runs the scaling branch plan over the top slot's coefficients, imposes the
// constraints to a fixpoint (x-action, abelian centralizer, x'-propagation),
// solves, and classifies every family.
std::vector<BranchOutcome> solve_and_classify(const ChevalleyBasis& cb, const Ansatz& az,
                                              long long budget = 2000000);

// Concrete slot vectors of a solved family at the given free-variable values.
std::vector<FpVec> evaluate_family(const ChevalleyBasis& cb, const Ansatz& az,
                                   const SolutionFamily& fam,
                                   const std::vector<std::uint32_t>& free_values);

// Prop-style deformation certificate: y has weight p-1 and centralizes e
// over Z, the z-chain matches, and (e, h + g*y, f + g*z1 + g^2*z2) satisfies
// the sl2 relations for every sampled g.
bool deformation_check(const ChevalleyBasis& cb, std::uint32_t p, const Sl2TripleZ& base,
                       const FpVec& y, const FpVec& z1, const FpVec& z2,
                       std::string* why = nullptr);

// The 1-dimensional subalgebra certificate used when the decomposition has a
// U summand: C_V(x) on the zero eigenspace of s is a line inside the span of
// the positive root vectors.
struct LineCertificate {
    bool ok = false;
    FpVec generator;
    std::string detail;
};
LineCertificate u_line_certificate(const ChevalleyBasis& cb, std::uint32_t p);

}  // namespace a1lie
