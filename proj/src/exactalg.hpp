#pragma once

#include <cstdint>
#include <vector>

namespace a1lie {

// Arithmetic mod a prime p < 2^31.
namespace fp {
std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t neg(std::uint32_t a, std::uint32_t p);
std::uint32_t pow(std::uint32_t a, unsigned long long e, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t from_int(long long v, std::uint32_t p);
bool is_prime(std::uint32_t n);
std::uint32_t smallest_primitive_root(std::uint32_t p);
}  // namespace fp

// Dense matrix over F_p. Row-major.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::uint32_t p, int rows, int cols)
        : p_(p), rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {}

    static FpMatrix identity(std::uint32_t p, int n);
    static FpMatrix diagonal(std::uint32_t p, const std::vector<std::uint32_t>& d);

    std::uint32_t p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }
    std::uint32_t& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }

    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    bool operator==(const FpMatrix& o) const;

    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

    FpMatrix pow(unsigned e) const;

    int rank() const;

private:
    std::uint32_t p_ = 0;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

// Echelonized basis of the right kernel of M (dim = cols - rank).
std::vector<std::vector<std::uint32_t>> kernel(const FpMatrix& M);

// Reduced row echelon form of a list of row vectors; returns the basis rows.
std::vector<std::vector<std::uint32_t>> rref(std::vector<std::vector<std::uint32_t>> rows,
                                             std::uint32_t p);

// Basis of the intersection of the spans; all bases over the same field and
// ambient dimension.
std::vector<std::vector<std::uint32_t>> intersect_subspaces(
    const std::vector<std::vector<std::vector<std::uint32_t>>>& bases, std::uint32_t p);

bool in_span(const std::vector<std::vector<std::uint32_t>>& basis,
             const std::vector<std::uint32_t>& v, std::uint32_t p);

// Multiset of Jordan block sizes of a unipotent matrix, from the rank
// sequence of (u - 1)^i: mult(J_i) = r_{i-1} - 2 r_i + r_{i+1}.
// Returned sorted descending. Throws on non-unipotent input.
std::vector<int> jordan_partition(const FpMatrix& u);

// Solve A x = b; returns false if inconsistent. On success x is one solution
// (free coordinates set to 0).
bool solve_linear(const FpMatrix& A, const std::vector<std::uint32_t>& b,
                  std::vector<std::uint32_t>& x);

}  // namespace a1lie
