#include "chevalley.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "errors.hpp"

namespace a1lie {

namespace {

std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<int> vec_sub(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::vector<int> negate(const std::vector<int>& a) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(&rs) {
    npos_ = rs.num_positive();
    dim_ = rs.dim();
    weights_.resize(dim_);
    for (int j = 0; j < npos_; ++j) {
        weights_[e_index(j)] = 2 * rs.root(j).height;
        weights_[f_index(j)] = -2 * rs.root(j).height;
    }
    for (int i = 0; i < rank(); ++i) weights_[h_index(i)] = 0;
}

int ChevalleyBasis::root_of(int basis_idx) const {
    if (is_e(basis_idx)) return basis_idx - npos_ - rank();
    if (is_f(basis_idx)) return npos_ - 1 - basis_idx;
    throw std::logic_error("root_of on a Cartan basis vector");
}

std::string ChevalleyBasis::basis_name(int basis_idx) const {
    std::ostringstream os;
    if (is_h(basis_idx)) {
        os << "h" << (basis_idx - npos_ + 1);
        return os.str();
    }
    os << (is_e(basis_idx) ? "e_" : "f_");
    for (int c : rs_->root(root_of(basis_idx)).coeffs) os << c;
    return os.str();
}

long long ChevalleyBasis::structure_constant(int a, int b) const {
    if (a == b) throw std::invalid_argument("structure_constant(a, a)");
    if (a < b) {
        auto it = npos_table_.find({a, b});
        if (it == npos_table_.end())
            throw std::invalid_argument("structure_constant: sum is not a root");
        return it->second;
    }
    return -structure_constant(b, a);
}

void ChevalleyBasis::compute_constants() {
    const RootSystem& rs = *rs_;

    // p_str(a, b) = depth of the a-string through b
    auto string_depth = [&](int a, int b) {
        int depth = 0;
        std::vector<int> v = rs.root(b).coeffs;
        for (;;) {
            v = vec_sub(v, rs.root(a).coeffs);
            if (std::all_of(v.begin(), v.end(), [](int c) { return c == 0; })) break;
            if (!rs.is_positive_root(v) && !rs.is_positive_root(negate(v))) break;
            ++depth;
        }
        return depth;
    };

    auto npos = [&](int a, int b) -> long long {
        long long v = 0;
        if (a < b) {
            auto it = npos_table_.find({a, b});
            assert(it != npos_table_.end());
            v = it->second;
        } else {
            auto it = npos_table_.find({b, a});
            assert(it != npos_table_.end());
            v = -it->second;
        }
        return v;
    };

    // N(mu, -nu) for positive roots mu != nu with mu - nu a root, via the
    // three-term identity on (mu, -nu, nu-mu).
    auto nmixed = [&](int mu, int nu) -> BigRat {
        std::vector<int> d = vec_sub(rs.root(mu).coeffs, rs.root(nu).coeffs);
        if (auto di = rs.root_index(d)) {
            BigRat ratio(BigInt(rs.norm2(d)), BigInt(rs.norm2(rs.root(mu).coeffs)));
            return ratio * BigRat(-npos(nu, *di));
        }
        std::vector<int> dn = negate(d);
        auto di = rs.root_index(dn);
        assert(di);
        BigRat ratio(BigInt(rs.norm2(dn)), BigInt(rs.norm2(rs.root(nu).coeffs)));
        return ratio * BigRat(npos(*di, mu));
    };

    // Special pairs per target root, processed by height of the target.
    std::vector<std::vector<std::pair<int, int>>> pairs(npos_);
    for (int a = 0; a < npos_; ++a)
        for (int b = a + 1; b < npos_; ++b) {
            auto s = rs.root_index(vec_add(rs.root(a).coeffs, rs.root(b).coeffs));
            if (s) pairs[*s].push_back({a, b});
        }

    for (int g = 0; g < npos_; ++g) {
        if (pairs[g].empty()) continue;
        std::sort(pairs[g].begin(), pairs[g].end());
        auto [eps, eta] = pairs[g][0];
        npos_table_[{eps, eta}] = string_depth(eps, eta) + 1;

        for (size_t k = 1; k < pairs[g].size(); ++k) {
            auto [a, b] = pairs[g][k];
            BigRat acc(0);
            std::vector<int> d1 = vec_sub(rs.root(eta).coeffs, rs.root(a).coeffs);
            if (rs.is_positive_root(d1) || rs.is_positive_root(negate(d1))) {
                BigRat t = nmixed(eta, a) * nmixed(eps, b);
                acc += t / BigRat(rs.norm2(d1));
            }
            std::vector<int> d2 = vec_sub(rs.root(eps).coeffs, rs.root(a).coeffs);
            if (rs.is_positive_root(d2) || rs.is_positive_root(negate(d2))) {
                BigRat t = BigRat(-1) * nmixed(eps, a) * nmixed(eta, b);
                acc += t / BigRat(rs.norm2(d2));
            }
            BigRat val = acc * BigRat(rs.norm2(rs.root(g).coeffs)) / BigRat(npos(eps, eta));
            if (!val.is_integer())
                throw ConsistencyError("non-integral structure constant at pair (" +
                                       std::to_string(a) + "," + std::to_string(b) + ")");
            long long n = val.num().to_int64();
            long long expect = string_depth(a, b) + 1;
            if (n != expect && n != -expect)
                throw ConsistencyError("structure constant magnitude mismatch at pair (" +
                                       std::to_string(a) + "," + std::to_string(b) + ")");
            npos_table_[{a, b}] = n;
        }
    }
}

void ChevalleyBasis::build_table() {
    const RootSystem& rs = *rs_;
    table_.assign((size_t)dim_ * dim_, {});

    auto set_pair = [&](int i, int j, std::vector<std::pair<int, int>> terms) {
        if (i > j) {
            for (auto& t : terms) t.second = -t.second;
            std::swap(i, j);
        }
        table_[pair_slot(i, j)] = std::move(terms);
    };

    // derived constant for [e_mu, f_nu], mu != nu, when mu - nu is a root
    auto mixed_terms = [&](int mu, int nu) -> std::vector<std::pair<int, int>> {
        std::vector<int> d = vec_sub(rs.root(mu).coeffs, rs.root(nu).coeffs);
        if (auto di = rs.root_index(d)) {
            long long n2d = rs.norm2(d), n2m = rs.norm2(rs.root(mu).coeffs);
            long long num = -n2d * structure_constant(nu, *di);
            assert(num % n2m == 0);
            return {{e_index(*di), (int)(num / n2m)}};
        }
        std::vector<int> dn = negate(d);
        if (auto di = rs.root_index(dn)) {
            long long n2d = rs.norm2(dn), n2n = rs.norm2(rs.root(nu).coeffs);
            long long num = n2d * structure_constant(*di, mu);
            assert(num % n2n == 0);
            return {{f_index(*di), (int)(num / n2n)}};
        }
        return {};
    };

    for (int a = 0; a < npos_; ++a) {
        // [h_i, e_a], [h_i, f_a]
        for (int i = 0; i < rank(); ++i) {
            int pr = rs.pairing_with_simple_covector(rs.root(a).coeffs, i);
            if (pr != 0) {
                set_pair(h_index(i), e_index(a), {{e_index(a), pr}});
                set_pair(h_index(i), f_index(a), {{f_index(a), -pr}});
            }
        }
        // [e_a, f_a] = h_alpha
        {
            std::vector<int> cr = rs.coroot_coeffs(a);
            std::vector<std::pair<int, int>> terms;
            for (int i = 0; i < rank(); ++i)
                if (cr[i]) terms.push_back({h_index(i), cr[i]});
            set_pair(e_index(a), f_index(a), std::move(terms));
        }
        for (int b = a + 1; b < npos_; ++b) {
            auto s = rs.root_index(vec_add(rs.root(a).coeffs, rs.root(b).coeffs));
            if (s) {
                int n = (int)structure_constant(a, b);
                set_pair(e_index(a), e_index(b), {{e_index(*s), n}});
                set_pair(f_index(a), f_index(b), {{f_index(*s), -n}});
            }
            std::vector<int> d = vec_sub(rs.root(a).coeffs, rs.root(b).coeffs);
            if (rs.is_positive_root(d) || rs.is_positive_root(negate(d))) {
                set_pair(e_index(a), f_index(b), mixed_terms(a, b));
                set_pair(e_index(b), f_index(a), mixed_terms(b, a));
            }
        }
    }
}

static const std::vector<std::pair<int, int>> kEmptyTerms;

const std::vector<std::pair<int, int>>& ChevalleyBasis::bracket_basis(int i, int j,
                                                                      int& sign) const {
    if (i == j) {
        sign = 1;
        return kEmptyTerms;
    }
    if (i < j) {
        sign = 1;
        return table_[pair_slot(i, j)];
    }
    sign = -1;
    return table_[pair_slot(j, i)];
}

ZVec ChevalleyBasis::bracket(const ZVec& a, const ZVec& b) const {
    if ((int)a.size() != dim_ || (int)b.size() != dim_)
        throw RingMismatchError("bracket: wrong vector dimension");
    ZVec out(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!b[j]) continue;
            int sign;
            const auto& terms = bracket_basis(i, j, sign);
            for (auto [idx, co] : terms) out[idx] += a[i] * b[j] * sign * co;
        }
    }
    return out;
}

QVec ChevalleyBasis::bracket(const QVec& a, const QVec& b) const {
    if ((int)a.size() != dim_ || (int)b.size() != dim_)
        throw RingMismatchError("bracket: wrong vector dimension");
    QVec out(dim_, BigRat(0));
    for (int i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            int sign;
            const auto& terms = bracket_basis(i, j, sign);
            for (auto [idx, co] : terms)
                out[idx] += a[i] * b[j] * BigRat(sign * co);
        }
    }
    return out;
}

FpVec ChevalleyBasis::bracket(const FpVec& a, const FpVec& b) const {
    if (a.p != b.p) throw RingMismatchError("bracket: mismatched moduli");
    if ((int)a.c.size() != dim_ || (int)b.c.size() != dim_)
        throw RingMismatchError("bracket: wrong vector dimension");
    std::uint32_t p = a.p;
    FpVec out = zero_fp(p);
    for (int i = 0; i < dim_; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!b.c[j]) continue;
            int sign;
            const auto& terms = bracket_basis(i, j, sign);
            unsigned long long ab = (unsigned long long)a.c[i] * b.c[j] % p;
            for (auto [idx, co] : terms) {
                long long t = (long long)(ab % p) * (sign * co) % (long long)p;
                long long cur = ((long long)out.c[idx] + t) % (long long)p;
                if (cur < 0) cur += p;
                out.c[idx] = (std::uint32_t)cur;
            }
        }
    }
    return out;
}

std::vector<ZVec> ChevalleyBasis::ad_matrix(const ZVec& a) const {
    std::vector<ZVec> cols(dim_);
    for (int j = 0; j < dim_; ++j) {
        ZVec ej(dim_, 0);
        ej[j] = 1;
        cols[j] = bracket(a, ej);
    }
    return cols;
}

FpVec ChevalleyBasis::reduce_mod_p(const ZVec& a, std::uint32_t p) const {
    FpVec out = zero_fp(p);
    for (int i = 0; i < dim_; ++i) {
        long long v = a[i] % (long long)p;
        if (v < 0) v += p;
        out.c[i] = (std::uint32_t)v;
    }
    return out;
}

FpVec ChevalleyBasis::reduce_mod_p(const QVec& a, std::uint32_t p) const {
    FpVec out = zero_fp(p);
    for (int i = 0; i < dim_; ++i) {
        if (a[i].den().divisible_by(p))
            throw PIntegralityError("reduce_mod_p: denominator divisible by " +
                                    std::to_string(p) + " at coordinate " + basis_name(i));
        std::uint32_t num = a[i].num().mod_u32(p);
        std::uint32_t den = a[i].den().mod_u32(p);
        // modular inverse by Fermat
        unsigned long long inv = 1, base = den, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        out.c[i] = (std::uint32_t)((unsigned long long)num * inv % p);
    }
    return out;
}

void ChevalleyBasis::verify_jacobi() const {
    std::vector<std::pair<int, long long>> buf;
    buf.reserve(256);
    auto accumulate_double = [&](int x, int y, int z) {
        int s1;
        const auto& t1 = bracket_basis(x, y, s1);
        for (auto [idx, co] : t1) {
            int s2;
            const auto& t2 = bracket_basis(idx, z, s2);
            long long c1 = (long long)s1 * co;
            for (auto [idx2, co2] : t2)
                buf.emplace_back(idx2, c1 * s2 * co2);
        }
    };
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                buf.clear();
                accumulate_double(i, j, k);
                accumulate_double(j, k, i);
                accumulate_double(k, i, j);
                std::sort(buf.begin(), buf.end());
                long long sum = 0;
                for (size_t t = 0; t < buf.size(); ++t) {
                    sum += buf[t].second;
                    if (t + 1 == buf.size() || buf[t + 1].first != buf[t].first) {
                        if (sum != 0)
                            throw ConsistencyError(
                                "Jacobi identity fails on (" + basis_name(i) + ", " +
                                basis_name(j) + ", " + basis_name(k) + ")");
                        sum = 0;
                    }
                }
            }
}

std::string ChevalleyBasis::serialize() const {
    std::ostringstream os;
    os << "a1lie chevalley constants v1\n";
    os << "type " << to_string(type()) << "\n";
    os << "rank " << rank() << "\n";
    os << "positive_roots " << npos_ << "\n";
    for (int i = 0; i < npos_; ++i) {
        os << "root " << i;
        for (int c : rs_->root(i).coeffs) os << " " << c;
        os << "\n";
    }
    os << "pairs " << npos_table_.size() << "\n";
    for (const auto& [key, val] : npos_table_)
        os << "N " << key.first << " " << key.second << " " << val << "\n";
    os << "end\n";
    return os.str();
}

std::uint64_t ChevalleyBasis::constants_hash() const {
    std::string s = serialize();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void ChevalleyBasis::write_or_check_cache(const std::string& cache_dir) const {
    namespace fs = std::filesystem;
    if (cache_dir.empty()) return;
    fs::path dir(cache_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path file = dir / ("chev_" + to_string(type()) + "_v1.txt");
    std::string fresh = serialize();
    if (fs::exists(file)) {
        std::ifstream in(file, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        if (ss.str() != fresh)
            throw CacheCorruptionError("structure-constant cache mismatch: " + file.string());
        return;
    }
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << fresh;
    }
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
}

const ChevalleyBasis& ChevalleyBasis::get(LieType t, const std::string& cache_dir) {
    static std::map<LieType, ChevalleyBasis> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(t);
    if (it == cache.end()) {
        ChevalleyBasis cb(RootSystem::get(t));
        cb.compute_constants();
        cb.build_table();
        cb.verify_jacobi();
        it = cache.emplace(t, std::move(cb)).first;
    }
    it->second.write_or_check_cache(cache_dir);
    return it->second;
}

}  // namespace a1lie
