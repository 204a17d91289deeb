#include <doctest.h>

#include <numeric>
#include <set>

#include "adjoint_data.hpp"
#include "psl2mod.hpp"

using namespace a1lie;

TEST_SUITE_BEGIN("psl2mod");

TEST_CASE("shape profiles") {
    std::uint32_t p = 13;
    Shape s10 = make_simple(10, p);
    CHECK(shape_dim(s10, p) == 11);
    CHECK(shape_jordan_blocks(s10, p) == std::vector<int>{11});
    CHECK(dual_shape(s10, p) == s10);

    Shape w14 = make_proj_w(14, 19);
    CHECK(shape_dim(w14, 19) == 38);
    CHECK(shape_jordan_blocks(w14, 19) == std::vector<int>{19, 19});
    CHECK(socle_weights(w14, 19) == std::vector<int>{14});
    CHECK(dual_shape(w14, 19) == w14);

    Shape u = make_proj_u();
    CHECK(shape_dim(u, 19) == 19);
    CHECK(shape_factors(u, 19) == std::vector<int>{0, 16, 0});
}

TEST_CASE("window shapes and the structure tuple") {
    std::uint32_t p = 19;
    // master tuple [1, 17, 3, 15, 5, 13, 7, 11, 9, 9, 11, 7, 13, 5, 15, 3, 17, 1]
    CHECK(master_tuple_entry(1, p) == 1);
    CHECK(master_tuple_entry(2, p) == 17);
    CHECK(master_tuple_entry(9, p) == 9);
    CHECK(master_tuple_entry(10, p) == 9);
    CHECK(master_tuple_entry(18, p) == 1);

    // [7,11,9,9,11] at positions 7..11: dim 47, [J_19^2, J_9], socle {6,8,10}
    Shape w = make_window(7, 5, true, p);
    CHECK(shape_dim(w, p) == 47);
    CHECK(shape_jordan_blocks(w, p) == std::vector<int>{19, 19, 9});
    std::vector<int> soc = socle_weights(w, p);
    std::sort(soc.begin(), soc.end());
    CHECK(soc == std::vector<int>{6, 8, 10});
    std::vector<int> head = head_weights(w, p);
    std::sort(head.begin(), head.end());
    CHECK(head == std::vector<int>{8, 10});
}

TEST_CASE("dual is an involution and odd windows are never self-dual") {
    std::uint32_t p = 17;
    std::set<Shape> all;
    for (int st = 1; st <= (int)p - 2; ++st)
        for (int len = 2; st + len - 1 <= (int)p - 1; ++len)
            for (bool par : {true, false}) all.insert(make_window(st, len, par, p));
    for (const auto& s : all) {
        CHECK(dual_shape(dual_shape(s, p), p) == s);
        if (s.len % 2 == 1) CHECK(!(dual_shape(s, p) == s));
        std::vector<int> sw = socle_weights(s, p), hw = head_weights(s, p);
        CHECK(sw.size() + hw.size() == (size_t)s.len);
    }
    // the middle 4-window [7,9,9,7] is self-dual
    Shape mid = make_window(7, 4, true, p);
    CHECK(dual_shape(mid, p) == mid);
}

TEST_CASE("fixed-space eigenvalue exponents") {
    CHECK(fixed_eigen_exponents(make_simple(2, 13), 13, EigenMode::Paper).exps ==
          std::vector<int>{2});
    CHECK(fixed_eigen_exponents(make_proj_u(), 13, EigenMode::Paper).exps ==
          std::vector<int>{0});
    auto w10 = fixed_eigen_exponents(make_proj_w(10, 17), 17, EigenMode::Paper);
    CHECK(w10.exps == std::vector<int>{6, 10});  // {10, -10} mod 16
    auto win = fixed_eigen_exponents(make_window(7, 5, true, 19), 19, EigenMode::Safe);
    CHECK(win.exps.empty());
    CHECK(win.wildcards == 3);
}

TEST_CASE("order-2 and order-3 traces against the closed forms") {
    CHECK(trace_order2(make_simple(2, 13), 13) == -1);
    CHECK(trace_order2(make_proj_u(), 19) == 3);   // 19 = 3 mod 4
    CHECK(trace_order2(make_proj_u(), 13) == 1);   // 13 = 1 mod 4
    CHECK(trace_order2(make_proj_w(14, 19), 19) == -2);  // 14 = 2 mod 4
    CHECK(trace_order2(make_proj_w(12, 19), 19) == 2);
    CHECK(trace_order3(make_proj_w(10, 13), 13) == -1);  // i=1, p=1 mod 3
    CHECK(trace_order3(make_proj_u(), 17) == 2);          // 17 = 2 mod 3
}

TEST_CASE("trace cross-check via weight strings at small roots of unity") {
    for (std::uint32_t p : {13u, 17u, 19u}) {
        std::vector<Shape> shapes;
        for (int i = 0; i <= (int)p - 1; i += 2) shapes.push_back(make_simple(i, p));
        shapes.push_back(make_proj_u());
        for (int i = 2; i <= (int)p - 3; i += 2) shapes.push_back(make_proj_w(i, p));
        for (int st = 1; st <= (int)p - 2; ++st)
            for (bool par : {true, false}) shapes.push_back(make_window(st, 2, par, p));
        for (const auto& s : shapes) {
            // the involution lifts to diag(i, -i) of order 4 in SL2, acting
            // on a weight-k vector by (-1)^(k/2)
            auto m4 = shape_eigen_multiplicities_order_m(s, p, 4);
            REQUIRE(m4[1] == 0);
            REQUIRE(m4[3] == 0);
            CHECK(trace_order2(s, p) == m4[0] - m4[2]);
            auto m3 = shape_eigen_multiplicities_order_m(s, p, 3);
            REQUIRE(m3[1] == m3[2]);
            CHECK(trace_order3(s, p) == m3[0] - m3[1]);
        }
    }
}

TEST_CASE("tilting rows reproduce the adjoint restriction table") {
    auto row = [](LieType t, std::uint32_t p) {
        return decompose_tilting(adjoint_tilting_weights(t), p).to_string();
    };
    CHECK(row(LieType::G2, 7) == "W(2)");
    CHECK(row(LieType::G2, 11) == "L(10)+L(2)");
    CHECK(row(LieType::F4, 23) == "L(22)+L(14)+L(10)+L(2)");
    CHECK(row(LieType::F4, 19) == "W(14)+L(10)+L(2)");
    CHECK(row(LieType::F4, 17) == "W(10)+L(14)+L(2)");
    CHECK(row(LieType::F4, 13) == "W(10)+W(2)");
    CHECK(row(LieType::E6, 23) == "L(22)+L(16)+L(14)+L(10)+L(8)+L(2)");
    CHECK(row(LieType::E6, 19) == "W(14)+L(16)+L(10)+L(8)+L(2)");
    CHECK(row(LieType::E6, 17) == "W(10)+L(16)+L(14)+L(8)+L(2)");
    CHECK(row(LieType::E6, 13) == "W(10)+W(8)+W(2)");
    CHECK(row(LieType::E7, 37) == "L(34)+L(26)+L(22)+L(18)+L(14)+L(10)+L(2)");
    CHECK(row(LieType::E7, 31) == "W(26)+L(22)+L(18)+L(14)+L(10)+L(2)");
    CHECK(row(LieType::E7, 29) == "W(22)+L(26)+L(18)+L(14)+L(10)+L(2)");
    CHECK(row(LieType::E7, 23) == "W(18)+W(10)+L(22)+L(14)+L(2)");
    CHECK(row(LieType::E7, 19) == "W(14)+W(10)+W(2)+L(18)");
    CHECK(row(LieType::E8, 59) ==
          "L(58)+L(46)+L(38)+L(34)+L(26)+L(22)+L(14)+L(2)");
    CHECK(row(LieType::E8, 53) == "W(46)+L(38)+L(34)+L(26)+L(22)+L(14)+L(2)");
    CHECK(row(LieType::E8, 47) == "W(34)+L(46)+L(38)+L(26)+L(22)+L(14)+L(2)");
    CHECK(row(LieType::E8, 43) == "W(38)+W(26)+L(34)+L(22)+L(14)+L(2)");
    CHECK(row(LieType::E8, 41) == "W(34)+W(22)+L(38)+L(26)+L(14)+L(2)");
    CHECK(row(LieType::E8, 37) == "W(34)+W(26)+W(14)+L(22)+L(2)");
    CHECK(row(LieType::E8, 31) == "W(26)+W(22)+W(14)+W(2)");
}

TEST_CASE("order-m eigenvalue multiplicities") {
    // E7 p=19 candidate W(16)+W(4)+W(8)+L(18) at m=5: [25, 27, 27, 27, 27]
    std::uint32_t p = 19;
    Decomposition d;
    d.p = p;
    d.parts = {make_proj_w(16, p), make_proj_w(4, p), make_proj_w(8, p),
               make_simple(18, p)};
    d.sort_parts();
    auto m = eigen_multiplicities_order_m(d, 5);
    CHECK(m[0] == 25);
    CHECK(m[1] == 27);
    CHECK(m[2] == 27);
    CHECK(m[3] == 27);
    CHECK(m[4] == 27);
    // negation symmetry on a random mixed decomposition
    Decomposition d2;
    d2.p = 13;
    d2.parts = {make_proj_w(10, 13), make_proj_u(), make_simple(6, 13),
                make_window(3, 4, true, 13)};
    d2.sort_parts();
    for (int mm : {5, 7, 11}) {
        auto mult = eigen_multiplicities_order_m(d2, mm);
        long long total = 0;
        for (auto [r, c] : mult) {
            CHECK(mult[(mm - r) % mm] == c);
            total += c;
        }
        CHECK(total == d2.dim());
    }
    CHECK(eigen_multiplicities_order_m(d2, 1)[0] == d2.dim());
    Decomposition triv;
    triv.p = 13;
    triv.parts = {make_simple(0, 13)};
    CHECK(shape_eigen_multiplicities_order_m(triv.parts[0], 13, 5)[0] == 1);
}

TEST_CASE("jordan consistency of tilting rows") {
    // block multisets of the tilting decomposition must be partitions of dim
    for (LieType t : {LieType::G2, LieType::F4, LieType::E6, LieType::E7, LieType::E8})
        for (std::uint32_t p : {31u, 37u, 41u}) {
            Decomposition d = decompose_tilting(adjoint_tilting_weights(t), p);
            auto blocks = decomposition_jordan(d);
            CHECK(std::accumulate(blocks.begin(), blocks.end(), 0) == d.dim());
        }
}

TEST_CASE("shape_profile bundles the per-shape data") {
    std::uint32_t p = 19;
    ShapeProfile pr = shape_profile(make_proj_w(14, p), p);
    CHECK(pr.dim == 38);
    CHECK(pr.jordan_blocks == std::vector<int>{19, 19});
    CHECK(pr.socle == std::vector<int>{14});
    CHECK(pr.head == std::vector<int>{14});
    CHECK(pr.dual == make_proj_w(14, p));
    ShapeProfile w = shape_profile(make_window(1, 5, true, p), p);
    CHECK(w.dim == 1 + 17 + 3 + 15 + 5);
    CHECK(w.jordan_blocks == std::vector<int>{19, 19, 3});
    CHECK(!(w.dual == make_window(1, 5, true, p)));
}

TEST_SUITE_END();
