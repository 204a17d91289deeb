#include "oneparam.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "errors.hpp"

namespace a1lie {

namespace {

unsigned legendre_vp_factorial(unsigned j, std::uint32_t p) {
    unsigned v = 0;
    for (unsigned q = p; q <= j; q *= p) {
        v += j / q;
        if (q > j / p) break;
    }
    return v;
}

// unit part of j! mod p (all factors of p stripped)
std::uint32_t factorial_unit_mod_p(unsigned j, std::uint32_t p) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= j; ++i) {
        unsigned m = i;
        while (m % p == 0) m /= p;
        r = r * (m % p) % p;
    }
    return (std::uint32_t)r;
}

}  // namespace

NilpotentExp::NilpotentExp(const ChevalleyBasis& cb, const ZVec& y, std::uint32_t p)
    : p_(p) {
    const int dim = cb.dim();
    if ((int)y.size() != dim) throw RingMismatchError("NilpotentExp: bad vector size");
    if (!fp::is_prime(p)) throw UnsupportedCaseError("modulus is not prime");
    if (p < (std::uint32_t)cb.roots().coxeter_number())
        throw UnsupportedCaseError("p below the Coxeter number");

    bool has_e = false, has_f = false;
    for (int i = 0; i < dim; ++i) {
        if (!y[i]) continue;
        if (cb.is_h(i)) throw UnsupportedCaseError("exp_ad: Cartan support not allowed");
        (cb.is_e(i) ? has_e : has_f) = true;
    }
    if (has_e && has_f)
        throw UnsupportedCaseError("exp_ad: support must lie in one sign of root vectors");

    // sparse columns of ad(y) over Z
    std::vector<std::vector<std::pair<int, long long>>> adcols(dim);
    for (int j = 0; j < dim; ++j) {
        ZVec ej(dim, 0);
        ej[j] = 1;
        ZVec col = cb.bracket(y, ej);
        for (int i = 0; i < dim; ++i)
            if (col[i]) adcols[j].push_back({i, col[i]});
    }

    int J = 2 * cb.roots().highest_root().height;
    terms_.assign(J + 1, FpMatrix(p, dim, dim));
    terms_[0] = FpMatrix::identity(p, dim);

    std::vector<std::uint32_t> unit_inv(J + 1);
    for (int j = 0; j <= J; ++j)
        unit_inv[j] = fp::inv(factorial_unit_mod_p(j, p), p);

    std::vector<BigInt> w(dim), w2(dim);
    for (int col = 0; col < dim; ++col) {
        for (int k = 0; k < dim; ++k) w[k] = BigInt(0);
        w[col] = BigInt(1);
        for (int j = 1; j <= J; ++j) {
            for (int k = 0; k < dim; ++k) w2[k] = BigInt(0);
            for (int c = 0; c < dim; ++c) {
                if (w[c].is_zero()) continue;
                for (auto [row, coef] : adcols[c]) w2[row] += w[c] * BigInt(coef);
            }
            std::swap(w, w2);
            unsigned vp = legendre_vp_factorial((unsigned)j, p);
            for (int k = 0; k < dim; ++k) {
                if (w[k].is_zero()) continue;
                BigInt num = w[k];
                unsigned removed = num.remove_factor(p);
                if (removed < vp)
                    throw PIntegralityError("term (ad y)^" + std::to_string(j) + "/" +
                                            std::to_string(j) + "! is not " +
                                            std::to_string(p) + "-integral at " +
                                            cb.basis_name(k));
                if (removed > vp) continue;  // extra p factors: 0 mod p
                std::uint32_t val = fp::mul(num.mod_u32(p), unit_inv[j], p);
                terms_[j].at(k, col) = val;
            }
        }
    }
}

FpMatrix NilpotentExp::at(std::uint32_t gamma) const {
    int dim = terms_[0].rows();
    FpMatrix r(p_, dim, dim);
    std::uint32_t g = gamma % p_, gj = 1;
    for (size_t j = 0; j < terms_.size(); ++j) {
        if (gj != 0)
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) {
                    std::uint32_t t = terms_[j].at(a, b);
                    if (t) r.at(a, b) = fp::add(r.at(a, b), fp::mul(t, gj, p_), p_);
                }
        gj = fp::mul(gj, g, p_);
    }
    return r;
}

TorusAction make_torus_action(const ChevalleyBasis& cb, std::uint32_t p) {
    TorusAction ta;
    ta.p = p;
    ta.xi = fp::smallest_primitive_root(p);
    ta.weight.resize(cb.dim());
    for (int i = 0; i < cb.dim(); ++i) ta.weight[i] = cb.weight(i);
    return ta;
}

FpMatrix torus_matrix(const TorusAction& ta, std::uint32_t c) {
    std::vector<std::uint32_t> d(ta.weight.size());
    for (size_t i = 0; i < ta.weight.size(); ++i) {
        long long w = ta.weight[i] % (long long)(ta.p - 1);
        if (w < 0) w += ta.p - 1;
        d[i] = fp::pow(c % ta.p, (unsigned long long)w, ta.p);
    }
    return FpMatrix::diagonal(ta.p, d);
}

ZVec regular_nilpotent_e(const ChevalleyBasis& cb) {
    ZVec e = cb.zero_z();
    for (int i = 0; i < cb.rank(); ++i) e[cb.e_index(i)] = 1;
    return e;
}

Sl2TripleZ principal_sl2_Z(const ChevalleyBasis& cb) {
    const RootSystem& rs = cb.roots();
    int r = rs.rank();
    // solve sum_i c_i <alpha_j, alpha_i^vee> = 2 over Q
    std::vector<std::vector<BigRat>> m(r, std::vector<BigRat>(r + 1));
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i) m[j][i] = BigRat(rs.cartan(j, i));
        m[j][r] = BigRat(2);
    }
    for (int col = 0; col < r; ++col) {
        int piv = col;
        while (piv < r && m[piv][col].is_zero()) ++piv;
        if (piv == r) throw ConsistencyError("Cartan matrix is singular");
        std::swap(m[col], m[piv]);
        BigRat lead = m[col][col];
        for (int j = col; j <= r; ++j) m[col][j] = m[col][j] / lead;
        for (int i = 0; i < r; ++i) {
            if (i == col || m[i][col].is_zero()) continue;
            BigRat f0 = m[i][col];
            for (int j = col; j <= r; ++j) m[i][j] -= f0 * m[col][j];
        }
    }
    Sl2TripleZ t;
    t.f_coeffs.resize(r);
    t.e = cb.zero_z();
    t.h = cb.zero_z();
    t.f = cb.zero_z();
    for (int i = 0; i < r; ++i) {
        if (!m[i][r].is_integer())
            throw ConsistencyError("principal triple has non-integral coefficients");
        long long c = m[i][r].num().to_int64();
        t.f_coeffs[i] = c;
        t.e[cb.e_index(i)] = 1;
        t.h[cb.h_index(i)] = c;
        t.f[cb.f_index(i)] = c;
    }
    ZVec ef = cb.bracket(t.e, t.f);
    ZVec he = cb.bracket(t.h, t.e);
    ZVec hf = cb.bracket(t.h, t.f);
    for (int i = 0; i < cb.dim(); ++i) {
        if (ef[i] != t.h[i] || he[i] != 2 * t.e[i] || hf[i] != -2 * t.f[i])
            throw ConsistencyError("principal triple fails the sl2 relations");
    }
    return t;
}

FpMatrix exp_ad(const ChevalleyBasis& cb, const ZVec& y, std::uint32_t gamma,
                std::uint32_t p) {
    return NilpotentExp(cb, y, p).at(gamma);
}

FpMatrix regular_unipotent(const ChevalleyBasis& cb, std::uint32_t p) {
    // shared across the elimination and extension passes of one case
    static std::map<std::pair<int, std::uint32_t>, FpMatrix> cache;
    static std::mutex mu;
    std::pair<int, std::uint32_t> key{(int)cb.type(), p};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    FpMatrix x = exp_ad(cb, regular_nilpotent_e(cb), 1, p);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(x)).first->second;
}

WeightedFixedBasis fixed_space_weights(const ChevalleyBasis& cb, const FpMatrix& x,
                                       const TorusAction& ta) {
    std::uint32_t p = ta.p;
    int dim = cb.dim();
    FpMatrix N = x - FpMatrix::identity(p, dim);

    // ker(x-1) is t(c)-stable, so it splits across the weight residue
    // classes mod p-1; solve within each coordinate class.
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < dim; ++i) {
        int w = ta.weight[i] % (int)(p - 1);
        if (w < 0) w += p - 1;
        classes[w].push_back(i);
    }
    WeightedFixedBasis out;
    for (const auto& [res, idxs] : classes) {
        FpMatrix sub(p, dim, (int)idxs.size());
        for (int r0 = 0; r0 < dim; ++r0)
            for (size_t c0 = 0; c0 < idxs.size(); ++c0) sub.at(r0, (int)c0) = N.at(r0, idxs[c0]);
        for (const auto& k : kernel(sub)) {
            FpVec v = cb.zero_fp(p);
            for (size_t c0 = 0; c0 < idxs.size(); ++c0) v.c[idxs[c0]] = k[c0];
            out.vectors.push_back(std::move(v));
            out.exponents.push_back(res);
        }
    }
    int expected = kernel(N).size();
    if ((int)out.vectors.size() != expected)
        throw ConsistencyError("fixed space does not decompose into torus eigenvectors");
    return out;
}

std::optional<Sl2TripleZ> integral_lift_check(const ChevalleyBasis& cb,
                                              const FpVec& e, const FpVec& f) {
    std::uint32_t p = e.p;
    // preconditions: e = sum of simple e's, f supported on simple f's
    for (int i = 0; i < cb.dim(); ++i) {
        bool simple_e = cb.is_e(i) && cb.root_of(i) < cb.rank();
        bool simple_f = cb.is_f(i) && cb.root_of(i) < cb.rank();
        if (e.c[i] != (simple_e ? 1u : 0u)) return std::nullopt;
        if (f.c[i] != 0 && !simple_f) return std::nullopt;
    }
    Sl2TripleZ cand = principal_sl2_Z(cb);
    for (int i = 0; i < cb.rank(); ++i) {
        long long c = cand.f_coeffs[i];
        if (c < 0 || c >= 10LL * p) return std::nullopt;
        if (fp::from_int(c, p) != f.c[cb.f_index(i)]) return std::nullopt;
    }
    return cand;
}

}  // namespace a1lie
