#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "rootsys.hpp"

namespace a1lie {

// Known traces of order-2 and order-3 elements of the adjoint group on the
// adjoint module, per exceptional type.
std::set<int> adjoint_trace_set_order2(LieType t);
std::set<int> adjoint_trace_set_order3(LieType t);

// For E6 only: the traces realizable by order-3 elements lifting to order 3
// in the simply connected cover; used by the elimination filter.
std::set<int> adjoint_trace_filter_order3(LieType t);

// Per-type order used by the higher-order eigenvalue filter (0 = none).
int eigenvalue_filter_order(LieType t);

// Torus exponents d_1 > ... > d_r of t(c) on the fixed space of a regular
// unipotent element (twice the exponents of the Weyl group).
const std::vector<int>& centralizer_weights(LieType t);

// Highest-weight list of the adjoint module as a tilting module for a
// principal A1 (same integers as centralizer_weights).
const std::vector<int>& adjoint_tilting_weights(LieType t);

struct ReductionException {
    LieType type;
    std::uint32_t p;
    // decompositions given as lists of (kind, parameter): kind 'W' / 'L' / 'U'
    std::vector<std::vector<std::pair<char, int>>> survivors;
};
const std::vector<ReductionException>& reduction_exception_table();

// (type, p) rows swept by run_all: every special row of the adjoint tilting
// table plus one generic representative per type.
const std::vector<std::pair<LieType, std::uint32_t>>& sweep_cases();

}  // namespace a1lie
