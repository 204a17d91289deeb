#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <algorithm>

#include "errors.hpp"
#include "report.hpp"

using namespace a1lie;

TEST_SUITE_BEGIN("report");

TEST_CASE("unsupported cases are rejected") {
    CHECK_THROWS_AS(run_case(LieType::G2, 5, {}), UnsupportedCaseError);
    CHECK_THROWS_AS(run_case(LieType::E8, 29, {}), UnsupportedCaseError);
    CHECK_THROWS_AS(run_case(LieType::F4, 15, {}), UnsupportedCaseError);
}

TEST_CASE("G2 p=7 full case") {
    CaseReport r = run_case(LieType::G2, 7, {});
    CHECK(r.jordan == std::vector<int>{7, 7});
    CHECK(r.d_weights == std::vector<int>{4, 2});
    CHECK(r.paper_mode.survivors == std::vector<std::string>{"W(2)"});
    CHECK(r.modes_agree);
    CHECK(r.verdict == Verdict::A1_CONTAINED);
    REQUIRE(r.extension.size() == 1);
    CHECK(r.extension[0].route == "standard-basis-3");
    CHECK(r.extension[0].sl2_verified);
}

TEST_CASE("F4 p=13 is a reduction exception with both branch outcomes") {
    CaseReport r = run_case(LieType::F4, 13, {});
    CHECK(r.verdict == Verdict::REDUCTION_EXCEPTION);
    REQUIRE(r.extension.size() == 1);
    CHECK(r.extension[0].sl2_verified);
    CHECK(r.extension[0].nilpotent_certified);
}

TEST_CASE("reports are byte-identical across runs") {
    CaseReport a = run_case(LieType::G2, 11, {});
    CaseReport b = run_case(LieType::G2, 11, {});
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_json(a).find("timing") == std::string::npos);
}

TEST_CASE("stage control") {
    RunOptions opts;
    opts.stage = RunStage::Eliminate;
    CaseReport r = run_case(LieType::G2, 7, opts);
    CHECK(r.extension.empty());
    std::string j = report_to_json(r);
    CHECK(j.find("\"verdict\"") == std::string::npos);
}

TEST_CASE("expectations round-trip through JSON") {
    auto exp = builtin_expectations();
    REQUIRE(exp.size() == 27);
    // write, re-load, compare
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "a1lie_expect_test.json";
    {
        std::ofstream out(tmp);
        out << "{\n  \"schema_version\": 1,\n  \"cases\": [\n";
        for (size_t i = 0; i < exp.size(); ++i) {
            out << "    {\"group\": \"" << exp[i].group << "\", \"p\": " << exp[i].p
                << ", \"verdict\": \"" << exp[i].verdict << "\", \"survivors\": [";
            for (size_t k = 0; k < exp[i].survivors.size(); ++k)
                out << (k ? ", " : "") << "\"" << exp[i].survivors[k] << "\"";
            out << "]}" << (i + 1 < exp.size() ? "," : "") << "\n";
        }
        out << "  ]\n}\n";
    }
    auto loaded = load_expectations(tmp.string());
    REQUIRE(loaded.size() == exp.size());
    for (size_t i = 0; i < exp.size(); ++i) {
        CHECK(loaded[i].group == exp[i].group);
        CHECK(loaded[i].p == exp[i].p);
        CHECK(loaded[i].verdict == exp[i].verdict);
        CHECK(loaded[i].survivors == exp[i].survivors);
    }
    fs::remove(tmp);
}

TEST_CASE("expectation comparison flags verdict mismatches") {
    CaseReport r = run_case(LieType::G2, 7, {});
    Expectation e;
    e.group = "G2";
    e.p = 7;
    e.verdict = "REDUCTION_EXCEPTION";  // wrong on purpose
    e.survivors = {"W(2)"};
    std::string out;
    CHECK(compare_to_expectations({r}, {e}, out) == 1);
    e.verdict = "A1_CONTAINED";
    CHECK(compare_to_expectations({r}, {e}, out) == 0);
}

TEST_CASE("shipped expectations file matches the built-in table") {
    // keeps data/expectations.json from drifting
    auto file = load_expectations(std::string(A1LIE_SOURCE_DIR) + "/data/expectations.json");
    auto builtin = builtin_expectations();
    REQUIRE(file.size() == builtin.size());
    for (size_t i = 0; i < builtin.size(); ++i) {
        CHECK(file[i].group == builtin[i].group);
        CHECK(file[i].p == builtin[i].p);
        CHECK(file[i].verdict == builtin[i].verdict);
        std::vector<std::string> a = file[i].survivors, b = builtin[i].survivors;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("structure constant cache is written and re-verified") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "a1lie_cache_test";
    fs::remove_all(dir);
    RunOptions opts;
    opts.cache_dir = dir.string();
    run_case(LieType::G2, 7, opts);
    CHECK(fs::exists(dir / "chev_G2_v1.txt"));
    // tamper and expect the corruption error
    {
        std::ofstream out(dir / "chev_G2_v1.txt", std::ios::app);
        out << "tamper\n";
    }
    CHECK_THROWS_AS(run_case(LieType::G2, 7, opts), CacheCorruptionError);
    fs::remove_all(dir);
}

TEST_SUITE_END();
