#include "torsion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace a1lie {

namespace {

// Node permutations of the affine diagram (index 0 = affine node).
std::vector<std::vector<int>> affine_symmetries(LieType t) {
    auto identity = [](int n) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        return id;
    };
    switch (t) {
        case LieType::G2:
        case LieType::F4:
        case LieType::E8:
            return {identity(t == LieType::G2 ? 3 : (t == LieType::F4 ? 5 : 9))};
        case LieType::E6: {
            // three legs hanging off node 4: (tip, inner) = (1,3), (6,5), (0,2)
            const int legs[3][2] = {{1, 3}, {6, 5}, {0, 2}};
            std::vector<int> perm3{0, 1, 2};
            std::vector<std::vector<int>> out;
            std::sort(perm3.begin(), perm3.end());
            do {
                std::vector<int> p(7);
                p[4] = 4;
                for (int l = 0; l < 3; ++l) {
                    p[legs[l][0]] = legs[perm3[l]][0];
                    p[legs[l][1]] = legs[perm3[l]][1];
                }
                out.push_back(p);
            } while (std::next_permutation(perm3.begin(), perm3.end()));
            return out;
        }
        case LieType::E7: {
            std::vector<int> id(8);
            std::iota(id.begin(), id.end(), 0);
            // chain 0-1-3-4-5-6-7 flipped, nodes 2 and 4 fixed
            std::vector<int> flip{7, 6, 2, 5, 4, 3, 1, 0};
            return {id, flip};
        }
    }
    return {};
}

std::vector<int> canonical_labels(const std::vector<int>& s,
                                  const std::vector<std::vector<int>>& syms) {
    std::vector<int> best = s;
    std::vector<int> img(s.size());
    for (const auto& perm : syms) {
        for (size_t i = 0; i < s.size(); ++i) img[perm[i]] = s[i];
        if (img < best) best = img;
    }
    return best;
}

}  // namespace

std::vector<KacClass> enumerate_order_m(const RootSystem& rs, int m) {
    if (m < 1) throw std::invalid_argument("enumerate_order_m: order must be positive");
    const std::vector<int>& marks = rs.affine_marks();
    int n = (int)marks.size();
    auto syms = affine_symmetries(rs.type());

    std::set<std::vector<int>> canon;
    std::vector<int> s(n, 0);
    // enumerate all labelings with sum marks[i]*s[i] == m
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == n - 1) {
            if (remaining % marks[idx] != 0) return;
            s[idx] = remaining / marks[idx];
            int g = 0;
            for (int v : s) g = std::gcd(g, v);
            if (g == 1) canon.insert(canonical_labels(s, syms));
            return;
        }
        for (int v = 0; v * marks[idx] <= remaining; ++v) {
            s[idx] = v;
            rec(idx + 1, remaining - v * marks[idx]);
        }
        s[idx] = 0;
    };
    rec(0, m);

    std::vector<KacClass> out;
    for (const auto& labels : canon) out.push_back(KacClass{m, labels});
    return out;
}

std::map<int, long long> adjoint_eigen_multiplicities(const RootSystem& rs,
                                                      const KacClass& kc) {
    int m = kc.order;
    std::map<int, long long> mult;
    mult[0] += rs.rank();
    for (const Root& alpha : rs.positive_roots()) {
        long long k = 0;
        for (int i = 0; i < rs.rank(); ++i) k += (long long)kc.labels[i + 1] * alpha.coeffs[i];
        int r = (int)(((k % m) + m) % m);
        mult[r] += 1;
        mult[(m - r) % m] += 1;
    }
    return mult;
}

std::set<long long> trace_set(const RootSystem& rs, int m) {
    if (m != 2 && m != 3) throw std::invalid_argument("trace_set: order must be 2 or 3");
    std::set<long long> out;
    for (const auto& kc : enumerate_order_m(rs, m)) {
        auto mult = adjoint_eigen_multiplicities(rs, kc);
        // Z[zeta_m] with zeta_2 = -1; for m = 3 use 1 + zeta + zeta^2 = 0.
        long long trace = 0;
        if (m == 2) {
            trace = mult[0] - mult[1];
        } else {
            if (mult[1] != mult[2])
                throw ConsistencyError("order-3 eigenvalue map is not self-dual");
            trace = mult[0] - mult[1];
        }
        out.insert(trace);
    }
    return out;
}

}  // namespace a1lie
