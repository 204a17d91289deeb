#include "exactalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"

namespace a1lie {

namespace fp {

std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = (std::uint64_t)a + b;
    return (std::uint32_t)(s >= p ? s - p : s);
}

std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return (std::uint32_t)((std::uint64_t)a * b % p);
}

std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

std::uint32_t pow(std::uint32_t a, unsigned long long e, std::uint32_t p) {
    std::uint64_t r = 1, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return (std::uint32_t)r;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("fp::inv(0)");
    return pow(a, p - 2, p);
}

std::uint32_t from_int(long long v, std::uint32_t p) {
    long long r = v % (long long)p;
    if (r < 0) r += p;
    return (std::uint32_t)r;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
    std::uint32_t phi = p - 1;
    std::vector<std::uint32_t> prime_factors;
    std::uint32_t m = phi;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint32_t q : prime_factors)
            if (pow(g, phi / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace fp

FpMatrix FpMatrix::identity(std::uint32_t p, int n) {
    FpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::diagonal(std::uint32_t p, const std::vector<std::uint32_t>& d) {
    FpMatrix m(p, (int)d.size(), (int)d.size());
    for (int i = 0; i < (int)d.size(); ++i) m.at(i, i) = d[i] % p;
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (p_ != o.p_ || cols_ != o.rows_) throw RingMismatchError("FpMatrix: bad product");
    FpMatrix r(p_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t v = at(i, k);
            if (!v) continue;
            const std::uint32_t* orow = &o.a_[(size_t)k * o.cols_];
            std::uint32_t* rrow = &r.a_[(size_t)i * o.cols_];
            for (int j = 0; j < o.cols_; ++j)
                rrow[j] = (std::uint32_t)((rrow[j] + v * orow[j]) % p_);
        }
    }
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw RingMismatchError("FpMatrix: bad sum");
    FpMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::add(r.a_[i], o.a_[i], p_);
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw RingMismatchError("FpMatrix: bad difference");
    FpMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = fp::sub(r.a_[i], o.a_[i], p_);
    return r;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<std::uint32_t> FpMatrix::apply(const std::vector<std::uint32_t>& v) const {
    if ((int)v.size() != cols_) throw RingMismatchError("FpMatrix::apply: bad size");
    std::vector<std::uint32_t> r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const std::uint32_t* row = &a_[(size_t)i * cols_];
        for (int j = 0; j < cols_; ++j) {
            acc += (std::uint64_t)row[j] * v[j] % p_;
            if (acc >= (std::uint64_t)p_ << 30) acc %= p_;
        }
        r[i] = (std::uint32_t)(acc % p_);
    }
    return r;
}

FpMatrix FpMatrix::pow(unsigned e) const {
    FpMatrix r = identity(p_, rows_);
    FpMatrix base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

namespace {

// In-place row echelon; returns pivot columns.
std::vector<int> echelonize(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
    std::vector<int> pivots;
    size_t lead = 0;
    int ncols = rows.empty() ? 0 : (int)rows[0].size();
    for (int col = 0; col < ncols && lead < rows.size(); ++col) {
        size_t piv = lead;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[lead], rows[piv]);
        std::uint32_t inv = fp::inv(rows[lead][col], p);
        for (int j = col; j < ncols; ++j) rows[lead][j] = fp::mul(rows[lead][j], inv, p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col] == 0) continue;
            std::uint32_t f = rows[i][col];
            for (int j = col; j < ncols; ++j)
                rows[i][j] = fp::sub(rows[i][j], fp::mul(f, rows[lead][j], p), p);
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size());
    return pivots;
}

}  // namespace

int FpMatrix::rank() const {
    std::vector<std::vector<std::uint32_t>> rows(rows_);
    for (int i = 0; i < rows_; ++i)
        rows[i].assign(a_.begin() + (size_t)i * cols_, a_.begin() + (size_t)(i + 1) * cols_);
    return (int)echelonize(rows, p_).size();
}

std::vector<std::vector<std::uint32_t>> rref(std::vector<std::vector<std::uint32_t>> rows,
                                             std::uint32_t p) {
    echelonize(rows, p);
    return rows;
}

std::vector<std::vector<std::uint32_t>> kernel(const FpMatrix& M) {
    std::uint32_t p = M.p();
    std::vector<std::vector<std::uint32_t>> rows(M.rows());
    for (int i = 0; i < M.rows(); ++i) {
        rows[i].resize(M.cols());
        for (int j = 0; j < M.cols(); ++j) rows[i][j] = M.at(i, j);
    }
    std::vector<int> pivots = echelonize(rows, p);
    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<std::uint32_t>> basis;
    for (int free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(M.cols(), 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fp::neg(rows[r][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<std::vector<std::uint32_t>>& basis,
             const std::vector<std::uint32_t>& v, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> rows = basis;
    size_t r0 = rref(rows, p).size();
    rows = basis;
    rows.push_back(v);
    return rref(rows, p).size() == r0;
}

std::vector<std::vector<std::uint32_t>> intersect_subspaces(
    const std::vector<std::vector<std::vector<std::uint32_t>>>& bases, std::uint32_t p) {
    if (bases.empty()) return {};
    std::vector<std::vector<std::uint32_t>> cur = rref(bases[0], p);
    for (size_t k = 1; k < bases.size(); ++k) {
        const auto& other = bases[k];
        if (cur.empty() || other.empty()) return {};
        int n = (int)cur[0].size();
        if (!other.empty() && (int)other[0].size() != n)
            throw RingMismatchError("intersect_subspaces: ambient dimension mismatch");
        // Solve cur^T x = other^T y: kernel of [cur^T | -other^T]
        int ca = (int)cur.size(), cb = (int)other.size();
        FpMatrix M(p, n, ca + cb);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < ca; ++j) M.at(i, j) = cur[j][i];
            for (int j = 0; j < cb; ++j) M.at(i, ca + j) = fp::neg(other[j][i], p);
        }
        std::vector<std::vector<std::uint32_t>> null = kernel(M);
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& w : null) {
            std::vector<std::uint32_t> v(n, 0);
            for (int j = 0; j < ca; ++j)
                if (w[j])
                    for (int i = 0; i < n; ++i)
                        v[i] = fp::add(v[i], fp::mul(w[j], cur[j][i], p), p);
            next.push_back(std::move(v));
        }
        cur = rref(next, p);
    }
    return cur;
}

std::vector<int> jordan_partition(const FpMatrix& u) {
    if (u.rows() != u.cols()) throw std::invalid_argument("jordan_partition: not square");
    int n = u.rows();
    FpMatrix N = u - FpMatrix::identity(u.p(), n);
    std::vector<int> ranks;  // ranks[i] = rank(N^i), starting at i = 0
    ranks.push_back(n);
    FpMatrix P = N;
    for (int i = 1; i <= n + 1; ++i) {
        int r = P.rank();
        ranks.push_back(r);
        if (r == 0) break;
        P = P * N;
    }
    if (ranks.back() != 0)
        throw std::invalid_argument("jordan_partition: input is not unipotent");
    while (ranks.size() < (size_t)n + 2) ranks.push_back(0);

    std::vector<int> part;
    for (int i = 1; i <= n; ++i) {
        int mult = ranks[i - 1] - 2 * ranks[i] + ranks[i + 1];
        for (int k = 0; k < mult; ++k) part.push_back(i);
    }
    std::sort(part.rbegin(), part.rend());
    long long total = 0;
    for (int b : part) total += b;
    if (total != n) throw std::logic_error("jordan_partition: blocks do not sum to dim");
    return part;
}

bool solve_linear(const FpMatrix& A, const std::vector<std::uint32_t>& b,
                  std::vector<std::uint32_t>& x) {
    std::uint32_t p = A.p();
    std::vector<std::vector<std::uint32_t>> rows(A.rows());
    for (int i = 0; i < A.rows(); ++i) {
        rows[i].resize(A.cols() + 1);
        for (int j = 0; j < A.cols(); ++j) rows[i][j] = A.at(i, j);
        rows[i][A.cols()] = b[i];
    }
    std::vector<int> pivots = echelonize(rows, p);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == A.cols()) return false;
    x.assign(A.cols(), 0);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][A.cols()];
    return true;
}

}  // namespace a1lie
