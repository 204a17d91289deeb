#include <doctest.h>

#include "chevalley.hpp"
#include "errors.hpp"

using namespace a1lie;

TEST_SUITE_BEGIN("chevalley");

TEST_CASE("defining relations [e_i, f_i] = h_i") {
    for (LieType t : {LieType::G2, LieType::F4, LieType::E6}) {
        const ChevalleyBasis& cb = ChevalleyBasis::get(t);
        for (int i = 0; i < cb.rank(); ++i) {
            ZVec e = cb.zero_z(), f = cb.zero_z();
            e[cb.e_index(i)] = 1;
            f[cb.f_index(i)] = 1;
            ZVec h = cb.bracket(e, f);
            for (int k = 0; k < cb.dim(); ++k)
                CHECK(h[k] == (k == cb.h_index(i) ? 1 : 0));
        }
    }
}

TEST_CASE("G2 simple-root bracket has unit coefficient") {
    const ChevalleyBasis& cb = ChevalleyBasis::get(LieType::G2);
    long long n = cb.structure_constant(0, 1);
    CHECK((n == 1 || n == -1));
}

TEST_CASE("structure constants act on both signs of root vectors") {
    const ChevalleyBasis& cb = ChevalleyBasis::get(LieType::F4);
    const RootSystem& rs = cb.roots();
    for (int a = 0; a < rs.num_positive(); ++a)
        for (int b = a + 1; b < rs.num_positive(); ++b) {
            std::vector<int> sum(rs.rank());
            for (int i = 0; i < rs.rank(); ++i)
                sum[i] = rs.root(a).coeffs[i] + rs.root(b).coeffs[i];
            auto s = rs.root_index(sum);
            if (!s) continue;
            long long n = cb.structure_constant(a, b);
            ZVec ea = cb.zero_z(), eb = cb.zero_z(), fa = cb.zero_z(), fb = cb.zero_z();
            ea[cb.e_index(a)] = 1;
            eb[cb.e_index(b)] = 1;
            fa[cb.f_index(a)] = 1;
            fb[cb.f_index(b)] = 1;
            CHECK(cb.bracket(ea, eb)[cb.e_index(*s)] == n);
            CHECK(cb.bracket(fa, fb)[cb.f_index(*s)] == -n);
        }
}

TEST_CASE("bilinearity and alternation") {
    const ChevalleyBasis& cb = ChevalleyBasis::get(LieType::G2);
    unsigned long long st = 42;
    auto rnd = [&]() {
        st ^= st << 13; st ^= st >> 7; st ^= st << 17;
        return (long long)(st % 19) - 9;
    };
    for (int rep = 0; rep < 50; ++rep) {
        ZVec a = cb.zero_z(), b = cb.zero_z();
        for (int i = 0; i < cb.dim(); ++i) { a[i] = rnd(); b[i] = rnd(); }
        long long m = rnd();
        ZVec ma = a;
        for (auto& c : ma) c *= m;
        ZVec lhs = cb.bracket(ma, b);
        ZVec rhs = cb.bracket(a, b);
        for (auto& c : rhs) c *= m;
        CHECK(lhs == rhs);
        CHECK(cb.bracket(a, a) == cb.zero_z());
        ZVec ab = cb.bracket(a, b), ba = cb.bracket(b, a);
        for (auto& c : ba) c = -c;
        CHECK(ab == ba);
    }
}

TEST_CASE("exhaustive Jacobi for the smaller types") {
    // E7/E8 are covered by the acceptance suite
    for (LieType t : {LieType::G2, LieType::F4, LieType::E6}) {
        const ChevalleyBasis& cb = ChevalleyBasis::get(t);
        CHECK_NOTHROW(cb.verify_jacobi());
    }
}

TEST_CASE("reduce_mod_p on rational vectors") {
    const ChevalleyBasis& cb = ChevalleyBasis::get(LieType::G2);
    QVec v = cb.zero_q();
    v[cb.h_index(0)] = BigRat(1);
    v[cb.e_index(0)] = BigRat(BigInt(1), BigInt(2));
    FpVec r = cb.reduce_mod_p(v, 7);
    CHECK(r.c[cb.h_index(0)] == 1);
    CHECK(r.c[cb.e_index(0)] == 4);  // 1/2 = 4 mod 7
    QVec bad = cb.zero_q();
    bad[cb.h_index(0)] = BigRat(BigInt(1), BigInt(3));
    CHECK_THROWS_AS(cb.reduce_mod_p(bad, 3), PIntegralityError);
}

TEST_CASE("serialization is stable and cache verifies") {
    const ChevalleyBasis& cb = ChevalleyBasis::get(LieType::G2);
    std::string s1 = cb.serialize(), s2 = cb.serialize();
    CHECK(s1 == s2);
    CHECK(s1.find("type G2") != std::string::npos);
    CHECK(cb.constants_hash() == cb.constants_hash());
}

TEST_CASE("ring mismatch raises") {
    const ChevalleyBasis& cb = ChevalleyBasis::get(LieType::G2);
    FpVec a = cb.zero_fp(7), b = cb.zero_fp(11);
    CHECK_THROWS_AS(cb.bracket(a, b), RingMismatchError);
}

TEST_SUITE_END();
