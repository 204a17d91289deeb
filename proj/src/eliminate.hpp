#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chevalley.hpp"
#include "psl2mod.hpp"

namespace a1lie {

struct FilterConfig {
    EigenMode eigen_mode = EigenMode::Paper;
    bool use_full_weights = true;
    bool use_fixed_eigen = true;
    bool use_self_duality = true;
    bool use_trace2 = true;
    bool use_trace3 = true;
    bool use_order_m = true;  // per-type order from eigenvalue_filter_order
    long long candidate_budget = 20000000;
};

struct FilterReport {
    std::string filter;
    bool pass = false;
    std::string computed;
    std::string allowed;
};

struct EliminationResult {
    std::vector<Decomposition> survivors;                 // canonically sorted
    std::vector<std::vector<FilterReport>> traces;        // parallel to survivors
    std::map<std::string, long long> killed_by;           // filter -> count
    long long candidates = 0;
};

// Step 1: enumerate all decompositions of the adjoint module consistent with
// the filter battery. The search tiles the Jordan partition of the regular
// unipotent element exactly, then applies the remaining filters.
EliminationResult enumerate_survivors(const ChevalleyBasis& cb, std::uint32_t p,
                                      const FilterConfig& cfg);

// Per-filter verdict lines for one candidate (no short-circuit).
std::vector<FilterReport> explain(const ChevalleyBasis& cb, std::uint32_t p,
                                  const Decomposition& d, const FilterConfig& cfg);

}  // namespace a1lie
