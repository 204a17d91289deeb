#include "rootsys.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace a1lie {

LieType parse_lie_type(const std::string& label) {
    if (label == "G2") return LieType::G2;
    if (label == "F4") return LieType::F4;
    if (label == "E6") return LieType::E6;
    if (label == "E7") return LieType::E7;
    if (label == "E8") return LieType::E8;
    throw std::invalid_argument("unsupported type label: " + label);
}

std::string to_string(LieType t) {
    switch (t) {
        case LieType::G2: return "G2";
        case LieType::F4: return "F4";
        case LieType::E6: return "E6";
        case LieType::E7: return "E7";
        case LieType::E8: return "E8";
    }
    return "?";
}

namespace {

// Gram matrices (alpha_i, alpha_j) in Bourbaki numbering, short roots of
// norm 2. The Cartan matrix is derived as <a_i, a_j^vee> = 2(a_i,a_j)/(a_j,a_j).
std::vector<std::vector<int>> gram_for(LieType t) {
    switch (t) {
        case LieType::G2:
            return {{2, -3}, {-3, 6}};
        case LieType::F4:
            return {{4, -2, 0, 0},
                    {-2, 4, -2, 0},
                    {0, -2, 2, -1},
                    {0, 0, -1, 2}};
        case LieType::E6: {
            std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            std::vector<std::vector<int>> g(6, std::vector<int>(6, 0));
            for (int i = 0; i < 6; ++i) g[i][i] = 2;
            for (auto [a, b] : edges) g[a - 1][b - 1] = g[b - 1][a - 1] = -1;
            return g;
        }
        case LieType::E7: {
            std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
            std::vector<std::vector<int>> g(7, std::vector<int>(7, 0));
            for (int i = 0; i < 7; ++i) g[i][i] = 2;
            for (auto [a, b] : edges) g[a - 1][b - 1] = g[b - 1][a - 1] = -1;
            return g;
        }
        case LieType::E8: {
            std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6},
                                                   {6, 7}, {7, 8}, {2, 4}};
            std::vector<std::vector<int>> g(8, std::vector<int>(8, 0));
            for (int i = 0; i < 8; ++i) g[i][i] = 2;
            for (auto [a, b] : edges) g[a - 1][b - 1] = g[b - 1][a - 1] = -1;
            return g;
        }
    }
    throw std::logic_error("unreachable");
}

int expected_dim(LieType t) {
    switch (t) {
        case LieType::G2: return 14;
        case LieType::F4: return 52;
        case LieType::E6: return 78;
        case LieType::E7: return 133;
        case LieType::E8: return 248;
    }
    return 0;
}

// Height first; within a height class the larger coefficient vector comes
// first, which puts the simple roots in Bourbaki order at the front.
bool root_order_less(const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs > b.coeffs;
}

}  // namespace

RootSystem RootSystem::build(LieType t) {
    RootSystem rs;
    rs.type_ = t;
    rs.gram_ = gram_for(t);
    rs.rank_ = (int)rs.gram_.size();
    int r = rs.rank_;

    rs.cartan_.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int num = 2 * rs.gram_[i][j];
            if (num % rs.gram_[j][j] != 0)
                throw std::logic_error("non-integral Cartan entry");
            rs.cartan_[i][j] = num / rs.gram_[j][j];
        }

    // Close the simple roots under root addition, layer by layer in height.
    // alpha + alpha_i is a root iff the alpha_i-string through alpha has
    // q = p - <alpha, alpha_i^vee> > 0, where p is the depth of the string.
    std::map<std::vector<int>, int> seen;
    std::vector<Root> roots;
    for (int i = 0; i < r; ++i) {
        Root rt;
        rt.coeffs.assign(r, 0);
        rt.coeffs[i] = 1;
        rt.height = 1;
        seen[rt.coeffs] = (int)roots.size();
        roots.push_back(rt);
    }
    size_t frontier_begin = 0;
    while (frontier_begin < roots.size()) {
        size_t frontier_end = roots.size();
        for (size_t k = frontier_begin; k < frontier_end; ++k) {
            for (int i = 0; i < r; ++i) {
                Root cand = roots[k];
                int depth = 0;
                {
                    std::vector<int> down = cand.coeffs;
                    for (;;) {
                        down[i] -= 1;
                        bool nonneg = std::all_of(down.begin(), down.end(),
                                                  [](int c) { return c >= 0; });
                        bool zero = std::all_of(down.begin(), down.end(),
                                                [](int c) { return c == 0; });
                        if (zero || !nonneg || !seen.count(down)) break;
                        ++depth;
                    }
                }
                int pair = 0;
                for (int j = 0; j < r; ++j) pair += cand.coeffs[j] * rs.cartan_[j][i];
                if (depth - pair <= 0) continue;
                cand.coeffs[i] += 1;
                cand.height += 1;
                if (!seen.count(cand.coeffs)) {
                    seen[cand.coeffs] = 0;  // placeholder, re-indexed below
                    roots.push_back(cand);
                }
            }
        }
        frontier_begin = frontier_end;
    }

    std::sort(roots.begin(), roots.end(), root_order_less);
    rs.positive_ = std::move(roots);
    rs.index_.clear();
    for (int i = 0; i < (int)rs.positive_.size(); ++i)
        rs.index_[rs.positive_[i].coeffs] = i;

    int dim = 2 * (int)rs.positive_.size() + r;
    if (dim != expected_dim(t))
        throw std::logic_error("root closure produced wrong dimension for " + to_string(t));

    const Root& hi = rs.positive_.back();
    rs.coxeter_ = hi.height + 1;
    if (rs.coxeter_ != dim / r - 1)
        throw std::logic_error("Coxeter number mismatch for " + to_string(t));
    for (int i = 0; i + 1 < (int)rs.positive_.size(); ++i)
        if (rs.positive_[i].height == hi.height)
            throw std::logic_error("highest root is not unique");

    rs.affine_marks_.assign(1, 1);
    rs.affine_marks_.insert(rs.affine_marks_.end(), hi.coeffs.begin(), hi.coeffs.end());
    return rs;
}

const RootSystem& RootSystem::get(LieType t) {
    static std::map<LieType, RootSystem> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, build(t)).first;
    return it->second;
}

std::optional<int> RootSystem::root_index(const std::vector<int>& coeffs) const {
    auto it = index_.find(coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int RootSystem::pairing_with_simple_covector(const std::vector<int>& beta, int j) const {
    int s = 0;
    for (int k = 0; k < rank_; ++k) s += beta[k] * cartan_[k][j];
    return s;
}

long long RootSystem::inner(const std::vector<int>& a, const std::vector<int>& b) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += (long long)a[i] * b[j] * gram_[i][j];
    return s;
}

long long RootSystem::norm2(const std::vector<int>& beta) const { return inner(beta, beta); }

std::vector<int> RootSystem::coroot_coeffs(int root_idx) const {
    const Root& a = positive_[root_idx];
    long long n2 = norm2(a.coeffs);
    std::vector<int> c(rank_);
    for (int i = 0; i < rank_; ++i) {
        long long num = (long long)a.coeffs[i] * gram_[i][i];
        if (num % n2 != 0) throw std::logic_error("non-integral coroot coefficient");
        c[i] = (int)(num / n2);
    }
    return c;
}

}  // namespace a1lie
