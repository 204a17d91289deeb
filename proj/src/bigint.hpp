#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace a1lie {

// Signed arbitrary-precision integer, little-endian base 2^32 limbs.
// Exponentiating ad(e) drags in factorials up to 58!, so exactness at
// ~10^78 magnitudes is the design point; speed matters less.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt factorial(unsigned n);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool fits_int64() const;
    long long to_int64() const;          // aborts if out of range
    std::string to_string() const;

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Quotient truncated toward zero; remainder has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    static BigInt gcd(BigInt a, BigInt b);  // non-negative

    // Residue in [0, m) for m < 2^31.
    std::uint32_t mod_u32(std::uint32_t m) const;

    // Divides by p exactly as long as possible, returns the exponent removed.
    unsigned remove_factor(std::uint32_t p);

    bool divisible_by(std::uint32_t m) const;

private:
    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // empty iff sign_ == 0

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // a >= b required
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r);
};

// Normalized rational: den > 0, gcd(num, den) = 1.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(long long v) : num_(v), den_(1) {}
    BigRat(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;

    BigRat operator-() const;
    BigRat operator+(const BigRat& o) const;
    BigRat operator-(const BigRat& o) const;
    BigRat operator*(const BigRat& o) const;
    BigRat operator/(const BigRat& o) const;
    BigRat& operator+=(const BigRat& o) { *this = *this + o; return *this; }
    BigRat& operator-=(const BigRat& o) { *this = *this - o; return *this; }
    BigRat& operator*=(const BigRat& o) { *this = *this * o; return *this; }

    bool operator==(const BigRat& o) const;
    bool operator!=(const BigRat& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

}  // namespace a1lie
