#include <doctest.h>

#include <set>
#include "errors.hpp"
#include "fppoly.hpp"

using namespace a1lie;

TEST_SUITE_BEGIN("fppoly");

namespace {
FpPoly var(std::uint32_t p, int n, int v) { return FpPoly::variable(p, n, v); }
FpPoly cst(std::uint32_t p, int n, long long c) {
    return FpPoly::constant(p, n, (std::uint32_t)(((c % p) + p) % p));
}
}  // namespace

TEST_CASE("single linear equation") {
    PolySystem sys;
    sys.p = 13;
    sys.var_names = {"a"};
    sys.eqs.push_back(var(13, 1, 0) - cst(13, 1, 1));
    auto fams = solve_poly_system(sys, {});
    REQUIRE(fams.size() == 1);
    CHECK(fams[0].free_vars.empty());
    CHECK(fams[0].assignment[0].constant_value() == 1);
}

TEST_CASE("F4-style cubic system resolves to the zero branch") {
    // a2 + 8 a6 = 0, 7 a2 + 11 a6 = 0, 11 a2 + 5 a6 = 0,
    // 4 a8 + 8 a2^2 + 7 a2 a6 = 0  (p = 13, after the a1 = 1 substitution)
    std::uint32_t p = 13;
    int n = 3;  // a2, a6, a8
    auto a2 = var(p, n, 0), a6 = var(p, n, 1), a8 = var(p, n, 2);
    PolySystem sys;
    sys.p = p;
    sys.var_names = {"a2", "a6", "a8"};
    sys.eqs.push_back(a2 + a6.scaled(8));
    sys.eqs.push_back(a2.scaled(7) + a6.scaled(11));
    sys.eqs.push_back(a2.scaled(11) + a6.scaled(5));
    sys.eqs.push_back(a8.scaled(4) + (a2 * a2).scaled(8) + (a2 * a6).scaled(7));
    auto fams = solve_poly_system(sys, {});
    REQUIRE(fams.size() == 1);
    CHECK(fams[0].free_vars.empty());
    for (int v = 0; v < n; ++v) CHECK(fams[0].assignment[v].constant_value() == 0);
}

TEST_CASE("free parameters survive elimination") {
    std::uint32_t p = 19;
    int n = 3;
    auto a = var(p, n, 0), b = var(p, n, 1), g = var(p, n, 2);
    PolySystem sys;
    sys.p = p;
    sys.var_names = {"a", "b", "g"};
    // a = 2 g, b = 13 g^2
    sys.eqs.push_back(a - g.scaled(2));
    sys.eqs.push_back(b - (g * g).scaled(13));
    auto fams = solve_poly_system(sys, {});
    REQUIRE(fams.size() == 1);
    REQUIRE(fams[0].free_vars == std::vector<int>{2});
    std::vector<std::uint32_t> pt{0, 0, 5};
    CHECK(fams[0].assignment[0].evaluate(pt) == 10);
    CHECK(fams[0].assignment[1].evaluate(pt) == (13 * 25) % 19);
}

TEST_CASE("branch plans and enumeration fallback agree with brute force") {
    // all solutions of x^2 + y^2 = z, x y = 1 over small primes
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u}) {
        int n = 3;
        auto x = var(p, n, 0), y = var(p, n, 1), z = var(p, n, 2);
        PolySystem sys;
        sys.p = p;
        sys.var_names = {"x", "y", "z"};
        sys.eqs.push_back(x * x + y * y - z);
        sys.eqs.push_back(x * y - cst(p, n, 1));
        auto fams = solve_poly_system(sys, {});
        std::set<std::vector<std::uint32_t>> got;
        for (const auto& f : fams)
            for (auto& sol : f.expand(100000)) got.insert(sol);
        std::set<std::vector<std::uint32_t>> want;
        for (std::uint32_t xv = 0; xv < p; ++xv)
            for (std::uint32_t yv = 0; yv < p; ++yv)
                for (std::uint32_t zv = 0; zv < p; ++zv)
                    if ((xv * xv + yv * yv) % p == zv && (xv * yv) % p == 1)
                        want.insert({xv, yv, zv});
        CHECK(got == want);
    }
}

TEST_CASE("contradictions kill the branch") {
    std::uint32_t p = 7;
    PolySystem sys;
    sys.p = p;
    sys.var_names = {"a"};
    sys.eqs.push_back(var(p, 1, 0));
    sys.eqs.push_back(var(p, 1, 0) - cst(p, 1, 1));
    CHECK(solve_poly_system(sys, {}).empty());
}

TEST_CASE("budget is enforced") {
    std::uint32_t p = 19;
    int n = 6;
    PolySystem sys;
    sys.p = p;
    sys.var_names = {"a", "b", "c", "d", "e", "f"};
    FpPoly prod = cst(p, n, 1);
    for (int v = 0; v < n; ++v) prod = prod * var(p, n, v);
    sys.eqs.push_back(prod - cst(p, n, 1));
    CHECK_THROWS_AS(solve_poly_system(sys, {}, 1000), SolverBudgetError);
}

TEST_SUITE_END();
