#include <doctest.h>

#include "adjoint_data.hpp"
#include "torsion.hpp"

using namespace a1lie;

TEST_SUITE_BEGIN("torsion");

TEST_CASE("class counts") {
    CHECK(enumerate_order_m(RootSystem::get(LieType::F4), 2).size() == 2);
    CHECK(enumerate_order_m(RootSystem::get(LieType::E8), 3).size() == 4);
    CHECK(enumerate_order_m(RootSystem::get(LieType::G2), 1).size() == 1);
}

TEST_CASE("identity class has all eigenvalues at zero") {
    const RootSystem& rs = RootSystem::get(LieType::F4);
    auto classes = enumerate_order_m(rs, 1);
    REQUIRE(classes.size() == 1);
    auto m = adjoint_eigen_multiplicities(rs, classes[0]);
    CHECK(m[0] == rs.dim());
}

TEST_CASE("eigenvalue maps are symmetric and sum to dim") {
    for (LieType t : {LieType::G2, LieType::F4, LieType::E6, LieType::E7, LieType::E8}) {
        const RootSystem& rs = RootSystem::get(t);
        for (int m : {2, 3, 5, 7}) {
            for (const auto& kc : enumerate_order_m(rs, m)) {
                auto mult = adjoint_eigen_multiplicities(rs, kc);
                long long total = 0;
                for (auto [r, c] : mult) {
                    total += c;
                    CHECK(mult[(m - r) % m] == c);
                }
                CHECK(total == rs.dim());
                CHECK(mult[0] >= rs.rank());
            }
        }
    }
}

TEST_CASE("E8 order 3: the A8 class") {
    const RootSystem& rs = RootSystem::get(LieType::E8);
    bool found = false;
    for (const auto& kc : enumerate_order_m(rs, 3)) {
        auto m = adjoint_eigen_multiplicities(rs, kc);
        if (m[0] == 80) {
            found = true;
            CHECK(m[1] == 84);
            CHECK(m[2] == 84);
        }
    }
    CHECK(found);  // trace 80 - 84 = -4
}

TEST_CASE("trace sets match the adjoint trace table") {
    auto as_set = [](const std::set<long long>& s) {
        std::set<int> r;
        for (long long v : s) r.insert((int)v);
        return r;
    };
    for (LieType t : {LieType::G2, LieType::F4, LieType::E8}) {
        CHECK(as_set(trace_set(RootSystem::get(t), 2)) == adjoint_trace_set_order2(t));
        CHECK(as_set(trace_set(RootSystem::get(t), 3)) == adjoint_trace_set_order3(t));
    }
    for (LieType t : {LieType::E6, LieType::E7}) {
        auto t2 = as_set(trace_set(RootSystem::get(t), 2));
        auto t3 = as_set(trace_set(RootSystem::get(t), 3));
        for (int v : t2) CHECK(adjoint_trace_set_order2(t).count(v) == 1);
        for (int v : t3) CHECK(adjoint_trace_set_order3(t).count(v) == 1);
    }
}

TEST_CASE("canonicalization removes diagram-symmetric duplicates") {
    const RootSystem& rs = RootSystem::get(LieType::E6);
    auto classes = enumerate_order_m(rs, 2);
    CHECK(classes.size() == 2);
}

TEST_SUITE_END();
