#include "bigint.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace a1lie {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v
                                 : ~(unsigned long long)v + 1ULL;
    while (m) {
        mag_.push_back((std::uint32_t)(m & 0xffffffffULL));
        m >>= 32;
    }
}

BigInt BigInt::factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r *= BigInt((long long)i);
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = 0;
    for (size_t i = 0; i < mag_.size(); ++i)
        m |= (unsigned long long)mag_[i] << (32 * i);
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) {
        std::abort();
    }
    unsigned long long m = 0;
    for (size_t i = 0; i < mag_.size(); ++i)
        m |= (unsigned long long)mag_[i] << (32 * i);
    return sign_ >= 0 ? (long long)m : -(long long)m;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    unsigned long long carry = 0;
    for (size_t i = 0; i < a.size() || i < b.size(); ++i) {
        unsigned long long s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back((std::uint32_t)(s & 0xffffffffULL));
        carry = s >> 32;
    }
    if (carry) r.push_back((std::uint32_t)carry);
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    long long borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        long long s = (long long)a[i] - borrow - (i < b.size() ? (long long)b[i] : 0);
        if (s < 0) {
            s += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back((std::uint32_t)s);
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        unsigned long long carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            unsigned long long cur = r[i + j] +
                (unsigned long long)a[i] * b[j] + carry;
            r[i + j] = (std::uint32_t)(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            unsigned long long cur = r[k] + carry;
            r[k] = (std::uint32_t)(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on normalized limbs, with a single-limb fast path.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q,
                        std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        q.assign(a.size(), 0);
        unsigned long long rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            unsigned long long cur = (rem << 32) | a[i];
            q[i] = (std::uint32_t)(cur / b[0]);
            rem = cur % b[0];
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back((std::uint32_t)rem);
        return;
    }

    int shift = 0;
    while (((b.back() << shift) & 0x80000000u) == 0) ++shift;
    size_t n = b.size(), m = a.size() - n;

    auto shl = [&](const std::vector<std::uint32_t>& v, bool extra) {
        std::vector<std::uint32_t> out(v.size() + (extra ? 1 : 0), 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= (std::uint32_t)(v[i] << shift);
            if (shift && i + 1 < out.size())
                out[i + 1] = (std::uint32_t)((unsigned long long)v[i] >> (32 - shift));
        }
        return out;
    };
    std::vector<std::uint32_t> u = shl(a, true);
    if (u.size() < a.size() + 1) u.resize(a.size() + 1, 0);
    std::vector<std::uint32_t> v = shl(b, false);
    if (v.size() < n) v.resize(n, 0);

    q.assign(m + 1, 0);
    const unsigned long long base = 1ULL << 32;
    for (size_t j = m + 1; j-- > 0;) {
        unsigned long long num = ((unsigned long long)u[j + n] << 32) | u[j + n - 1];
        unsigned long long qhat = num / v[n - 1];
        unsigned long long rhat = num % v[n - 1];
        while (qhat >= base ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) break;
        }
        // multiply-subtract
        long long borrow = 0;
        unsigned long long carry = 0;
        for (size_t i = 0; i < n; ++i) {
            unsigned long long p = qhat * v[i] + carry;
            carry = p >> 32;
            long long t = (long long)u[i + j] - (long long)(p & 0xffffffffULL) - borrow;
            if (t < 0) {
                t += (long long)base;
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = (std::uint32_t)t;
        }
        long long t = (long long)u[j + n] - (long long)carry - borrow;
        if (t < 0) {
            // qhat was one too large
            t += (long long)base;
            --qhat;
            unsigned long long c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                unsigned long long s = (unsigned long long)u[i + j] + v[i] + c2;
                u[i + j] = (std::uint32_t)(s & 0xffffffffULL);
                c2 = s >> 32;
            }
            t += (long long)c2;
            t &= (long long)(base - 1);
        }
        u[j + n] = (std::uint32_t)t;
        q[j] = (std::uint32_t)qhat;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    // shift remainder back
    r.assign(u.begin(), u.begin() + n);
    if (shift) {
        for (size_t i = 0; i < n; ++i) {
            r[i] >>= shift;
            if (i + 1 < n) r[i] |= (std::uint32_t)(u[i + 1] << (32 - shift));
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<std::uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    if (!qm.empty()) {
        q.mag_ = std::move(qm);
        q.sign_ = a.sign_ * b.sign_;
    }
    if (!rm.empty()) {
        r.mag_ = std::move(rm);
        r.sign_ = a.sign_;
    }
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

std::uint32_t BigInt::mod_u32(std::uint32_t m) const {
    unsigned long long rem = 0;
    for (size_t i = mag_.size(); i-- > 0;)
        rem = ((rem << 32) | mag_[i]) % m;
    if (sign_ < 0 && rem) rem = m - rem;
    return (std::uint32_t)rem;
}

unsigned BigInt::remove_factor(std::uint32_t p) {
    unsigned count = 0;
    if (is_zero()) return 0;
    for (;;) {
        if (mod_u32(p) != 0) break;
        // exact single-limb division
        unsigned long long rem = 0;
        for (size_t i = mag_.size(); i-- > 0;) {
            unsigned long long cur = (rem << 32) | mag_[i];
            mag_[i] = (std::uint32_t)(cur / p);
            rem = cur % p;
        }
        trim();
        ++count;
    }
    return count;
}

bool BigInt::divisible_by(std::uint32_t m) const { return mod_u32(m) == 0; }

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        unsigned long long rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            unsigned long long cur = (rem << 32) | m[i];
            m[i] = (std::uint32_t)(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(char('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigRat::BigRat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("BigRat: zero denominator");
    normalize();
}

void BigRat::normalize() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

bool BigRat::is_integer() const { return den_ == BigInt(1); }

BigRat BigRat::operator-() const {
    BigRat r = *this;
    r.num_ = -r.num_;
    return r;
}

BigRat BigRat::operator+(const BigRat& o) const {
    return BigRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BigRat BigRat::operator-(const BigRat& o) const {
    return BigRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BigRat BigRat::operator*(const BigRat& o) const {
    return BigRat(num_ * o.num_, den_ * o.den_);
}

BigRat BigRat::operator/(const BigRat& o) const {
    if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
    return BigRat(num_ * o.den_, den_ * o.num_);
}

bool BigRat::operator==(const BigRat& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

std::string BigRat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace a1lie
