#pragma once

#include <map>
#include <set>
#include <vector>

#include "rootsys.hpp"

namespace a1lie {

// Order-m semisimple class of the adjoint group, as Kac coordinates on the
// untwisted affine diagram: labels s_0..s_r >= 0, gcd 1, sum a_i s_i = m
// with a_i the affine marks; canonical under the affine-diagram symmetries.
struct KacClass {
    int order = 0;
    std::vector<int> labels;  // size rank+1
    bool operator<(const KacClass& o) const { return labels < o.labels; }
    bool operator==(const KacClass& o) const { return labels == o.labels; }
};

// Complete, duplicate-free enumeration up to affine-diagram symmetry,
// ordered lexicographically by labels.
std::vector<KacClass> enumerate_order_m(const RootSystem& rs, int m);

// residue mod m -> eigenvalue multiplicity on the adjoint module: root alpha
// contributes sum_i s_i c_i(alpha); the Cartan contributes rank at zero.
std::map<int, long long> adjoint_eigen_multiplicities(const RootSystem& rs,
                                                      const KacClass& kc);

// Exact traces (cyclotomic sums, rational for m <= 3) over all order-m
// classes; m in {2, 3}.
std::set<long long> trace_set(const RootSystem& rs, int m);

}  // namespace a1lie
