#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eliminate.hpp"
#include "extend.hpp"
#include "psl2mod.hpp"
#include "rootsys.hpp"

namespace a1lie {

inline constexpr const char* kLibraryVersion = "1.0.0";

enum class Verdict { A1_CONTAINED, REDUCTION_EXCEPTION, INCONCLUSIVE };
std::string to_string(Verdict v);

enum class RunStage { Eliminate, Extend, Full };

struct RunOptions {
    RunStage stage = RunStage::Full;
    std::string cache_dir;
    bool timing = false;
    long long budget = 2000000;
};

struct FamilyReport {
    std::string classification;  // SL2 | NILPOTENT_POSITIVE | OTHER
    std::vector<std::string> free_vars;
    bool sl2_relations = false;
    std::optional<std::vector<long long>> lift_coeffs;
    bool deformation_ok = false;
    bool positive_support = false;
    bool bracket_closure = false;
    int certificate_samples = 0;
    std::string detail;
};

struct BranchReport {
    std::string label;
    std::vector<FamilyReport> families;
};

struct SurvivorExtension {
    std::string survivor;
    std::string route;  // standard-basis-3 | standard-basis-5 | invariant-line | none
    std::vector<BranchReport> branches;
    bool sl2_verified = false;        // SL2 relations + Z-lift or deformation
    bool nilpotent_certified = false;
    std::string note;
};

struct ModeReport {
    std::vector<std::string> survivors;
    std::vector<std::vector<FilterReport>> traces;
    std::map<std::string, long long> killed_by;
    long long candidates = 0;
};

struct CaseReport {
    LieType group;
    std::uint32_t p = 0;
    std::vector<int> jordan;
    std::vector<int> d_weights;       // descending, as residues mod p-1
    ModeReport paper_mode;
    ModeReport safe_mode;
    std::string tilting_row;
    std::vector<SurvivorExtension> extension;
    Verdict verdict = Verdict::INCONCLUSIVE;
    bool modes_agree = false;
    std::string library_version;
    std::string constants_hash;
    long long timing_ms = -1;  // emitted only when requested
    RunStage stage = RunStage::Full;
};

CaseReport run_case(LieType group, std::uint32_t p, const RunOptions& opts = {});
std::vector<CaseReport> run_all(const RunOptions& opts = {}, int workers = 0);

std::string report_to_json(const CaseReport& r);
std::string report_to_text(const CaseReport& r);
std::string sweep_to_json(const std::vector<CaseReport>& rs);

struct Expectation {
    std::string group;
    std::uint32_t p;
    std::string verdict;
    std::vector<std::string> survivors;
};
std::vector<Expectation> builtin_expectations();
std::vector<Expectation> load_expectations(const std::string& path);
// 0 = all match, 1 = mismatch (mismatches described in `out`)
int compare_to_expectations(const std::vector<CaseReport>& rs,
                            const std::vector<Expectation>& exp, std::string& out);

}  // namespace a1lie
