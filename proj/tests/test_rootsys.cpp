#include <doctest.h>

#include "rootsys.hpp"

using namespace a1lie;

TEST_SUITE_BEGIN("rootsys");

TEST_CASE("root counts and Coxeter numbers") {
    struct Row { LieType t; int npos, rank, h; };
    for (auto [t, npos, rank, h] : {Row{LieType::G2, 6, 2, 6},
                                    Row{LieType::F4, 24, 4, 12},
                                    Row{LieType::E6, 36, 6, 12},
                                    Row{LieType::E7, 63, 7, 18},
                                    Row{LieType::E8, 120, 8, 30}}) {
        const RootSystem& rs = RootSystem::get(t);
        CHECK(rs.num_positive() == npos);
        CHECK(rs.rank() == rank);
        CHECK(rs.coxeter_number() == h);
        CHECK(rs.dim() == 2 * npos + rank);
        CHECK(rs.highest_root().height + 1 == h);
    }
}

TEST_CASE("G2 positive roots come out in the expected order") {
    const RootSystem& rs = RootSystem::get(LieType::G2);
    std::vector<std::vector<int>> want{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    REQUIRE(rs.num_positive() == 6);
    for (int i = 0; i < 6; ++i) CHECK(rs.root(i).coeffs == want[i]);
}

TEST_CASE("highest roots match the standard coefficient vectors") {
    CHECK(RootSystem::get(LieType::E8).highest_root().coeffs ==
          std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(RootSystem::get(LieType::F4).highest_root().coeffs ==
          std::vector<int>{2, 3, 4, 2});
    CHECK(RootSystem::get(LieType::E6).highest_root().coeffs ==
          std::vector<int>{1, 2, 2, 3, 2, 1});
    CHECK(RootSystem::get(LieType::E7).highest_root().coeffs ==
          std::vector<int>{2, 2, 3, 4, 3, 2, 1});
}

TEST_CASE("root_index membership") {
    const RootSystem& rs = RootSystem::get(LieType::F4);
    CHECK(rs.root_index({1, 2, 3, 1}).has_value());
    CHECK(!rs.root_index({1, 0, 1, 0}).has_value());
    CHECK(!rs.root_index({2, 3, 4, 3}).has_value());
    const RootSystem& g2 = RootSystem::get(LieType::G2);
    CHECK(g2.root_index({1, 0}).value() == 0);
    const RootSystem& e8 = RootSystem::get(LieType::E8);
    CHECK(e8.root_index({2, 3, 4, 6, 5, 4, 3, 2}).value() == e8.highest_root_index());
}

TEST_CASE("height is additive on root sums") {
    for (LieType t : {LieType::G2, LieType::F4, LieType::E6}) {
        const RootSystem& rs = RootSystem::get(t);
        for (int a = 0; a < rs.num_positive(); ++a)
            for (int b = 0; b < rs.num_positive(); ++b) {
                std::vector<int> sum(rs.rank());
                for (int i = 0; i < rs.rank(); ++i)
                    sum[i] = rs.root(a).coeffs[i] + rs.root(b).coeffs[i];
                if (auto idx = rs.root_index(sum))
                    CHECK(rs.root(*idx).height == rs.root(a).height + rs.root(b).height);
            }
    }
}

TEST_CASE("affine marks extend the highest root by 1") {
    const RootSystem& rs = RootSystem::get(LieType::E7);
    std::vector<int> want{1, 2, 2, 3, 4, 3, 2, 1};
    CHECK(rs.affine_marks() == want);
    long long total = 0;
    for (size_t i = 1; i < rs.affine_marks().size(); ++i)
        total += rs.affine_marks()[i];
    CHECK(total == rs.highest_root().height);
}

TEST_CASE("unsupported labels are rejected") {
    CHECK_THROWS(parse_lie_type("B3"));
    CHECK(to_string(parse_lie_type("E6")) == "E6");
}

TEST_SUITE_END();
