#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "adjoint_data.hpp"
#include "errors.hpp"
#include "exactalg.hpp"
#include "oneparam.hpp"
#include "report.hpp"
#include "torsion.hpp"

using namespace a1lie;

namespace {

int cmd_case(const std::string& group, std::uint32_t p, const std::string& stage,
             const std::string& eigen_mode, const std::string& format,
             const RunOptions& base) {
    RunOptions opts = base;
    if (stage == "eliminate")
        opts.stage = RunStage::Eliminate;
    else if (stage == "extend")
        opts.stage = RunStage::Extend;
    else
        opts.stage = RunStage::Full;
    CaseReport r = run_case(parse_lie_type(group), p, opts);
    if (format == "json") {
        std::cout << report_to_json(r);
        return 0;
    }
    if (eigen_mode == "both") {
        std::cout << report_to_text(r);
    } else {
        const ModeReport& mr = eigen_mode == "safe" ? r.safe_mode : r.paper_mode;
        std::cout << to_string(r.group) << " p=" << r.p << " (" << eigen_mode
                  << " eigen mode)\n";
        for (const auto& s : mr.survivors) std::cout << "  " << s << "\n";
    }
    return 0;
}

int cmd_sweep(const std::string& format, const std::string& expect_path,
              const RunOptions& opts, int workers) {
    std::vector<CaseReport> rs = run_all(opts, workers);
    if (format == "json") {
        std::cout << sweep_to_json(rs);
    } else {
        for (const auto& r : rs) std::cout << report_to_text(r) << "\n";
        std::cout << "summary:\n";
        for (const auto& r : rs) {
            std::ostringstream line;
            line << "  " << to_string(r.group) << " p=" << r.p;
            std::string head = line.str();
            head.resize(14, ' ');
            std::cout << head << " " << to_string(r.verdict) << "  ("
                      << r.paper_mode.survivors.size() << " survivor"
                      << (r.paper_mode.survivors.size() == 1 ? "" : "s") << ")\n";
        }
    }
    std::vector<Expectation> exp =
        expect_path.empty() ? builtin_expectations() : load_expectations(expect_path);
    std::string diffs;
    int rc = compare_to_expectations(rs, exp, diffs);
    if (rc) {
        std::cerr << "expectation mismatches:\n" << diffs;
    } else {
        std::cerr << "all " << exp.size() << " case verdicts match expectations\n";
    }
    return rc;
}

int cmd_chevalley(const std::string& group, const std::string& emit,
                  const std::string& cache_dir) {
    const ChevalleyBasis& cb = ChevalleyBasis::get(parse_lie_type(group), cache_dir);
    std::string body = cb.serialize();
    if (emit.empty() || emit == "-") {
        std::cout << body;
    } else {
        std::ofstream out(emit, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + emit);
        out << body;
    }
    std::ostringstream hx;
    hx << std::hex << cb.constants_hash();
    std::cerr << to_string(cb.type()) << ": " << cb.roots().num_positive()
              << " positive roots, constants hash 0x" << hx.str() << "\n";
    return 0;
}

int cmd_kac(const std::string& group, int order) {
    const RootSystem& rs = RootSystem::get(parse_lie_type(group));
    auto classes = enumerate_order_m(rs, order);
    std::cout << to_string(rs.type()) << " order " << order << ": " << classes.size()
              << " classes\n";
    for (const auto& kc : classes) {
        std::cout << "  (";
        for (size_t i = 0; i < kc.labels.size(); ++i)
            std::cout << (i ? "," : "") << kc.labels[i];
        std::cout << ")  eigenvalues:";
        for (auto [r, c] : adjoint_eigen_multiplicities(rs, kc))
            std::cout << " " << r << ":" << c;
        std::cout << "\n";
    }
    return 0;
}

int cmd_jordan(const std::string& group, std::uint32_t p, const std::string& cache_dir) {
    const ChevalleyBasis& cb = ChevalleyBasis::get(parse_lie_type(group), cache_dir);
    auto part = jordan_partition(regular_unipotent(cb, p));
    std::cout << to_string(cb.type()) << " p=" << p << ": [";
    for (size_t i = 0; i < part.size(); ++i) std::cout << (i ? "," : "") << part[i];
    std::cout << "]\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic case checker for regular unipotent PSL2(p) "
                 "subgroups of exceptional Lie algebras"};
    app.require_subcommand(1);

    RunOptions opts;
    int workers = 0;
    app.add_option("--cache-dir", opts.cache_dir, "structure-constant cache directory");
    app.add_flag("--timing", opts.timing, "include wall-clock timing in reports");
    app.add_option("--budget", opts.budget, "solver enumeration budget");

    auto* c_case = app.add_subcommand("case", "run one (group, p) case");
    std::string group, stage = "full", eigen = "both", format = "text";
    std::uint32_t p = 0;
    c_case->add_option("--group", group, "G2|F4|E6|E7|E8")->required();
    c_case->add_option("--p", p, "prime")->required();
    c_case->add_option("--stage", stage, "eliminate|extend|full")
        ->check(CLI::IsMember({"eliminate", "extend", "full"}));
    c_case->add_option("--eigen-mode", eigen, "safe|paper|both")
        ->check(CLI::IsMember({"safe", "paper", "both"}));
    c_case->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* c_sweep = app.add_subcommand("sweep", "run the full case table");
    std::string sweep_format = "text", expect_path;
    c_sweep->add_option("--format", sweep_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    c_sweep->add_option("--expect", expect_path, "expectations JSON (default: built-in)");
    c_sweep->add_option("--workers", workers, "parallel workers (default: hardware)");

    auto* c_chev = app.add_subcommand("chevalley", "emit structure constants");
    std::string chev_group, emit_path;
    c_chev->add_option("--group", chev_group, "G2|F4|E6|E7|E8")->required();
    c_chev->add_option("--emit", emit_path, "output path (default: stdout)");

    auto* c_kac = app.add_subcommand("kac", "enumerate order-m torsion classes");
    std::string kac_group;
    int kac_order = 0;
    c_kac->add_option("--group", kac_group, "G2|F4|E6|E7|E8")->required();
    c_kac->add_option("--order", kac_order, "element order m")->required();

    auto* c_jordan = app.add_subcommand("jordan", "Jordan form of the regular unipotent");
    std::string j_group;
    std::uint32_t j_p = 0;
    c_jordan->add_option("--group", j_group, "G2|F4|E6|E7|E8")->required();
    c_jordan->add_option("--p", j_p, "prime")->required();

    try {
        app.parse(argc, argv);
        if (*c_case) return cmd_case(group, p, stage, eigen, format, opts);
        if (*c_sweep) return cmd_sweep(sweep_format, expect_path, opts, workers);
        if (*c_chev) return cmd_chevalley(chev_group, emit_path, opts.cache_dir);
        if (*c_kac) return cmd_kac(kac_group, kac_order);
        if (*c_jordan) return cmd_jordan(j_group, j_p, opts.cache_dir);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
