#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <compare>
#include <string>
#include <stdexcept>
#include <vector>

namespace mvol {

// Arbitrary-precision signed integer, base 2^32 limbs, little endian.
// Sized for exact combinatorics (factorials, class sizes, character sums);
// not tuned for numbers beyond a few thousand digits.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v) {
    if (v < 0) { neg_ = true; }
    unsigned long long u = neg_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (u) { mag_.push_back(static_cast<uint32_t>(u)); u >>= 32; }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned long long u) {
    while (u) { mag_.push_back(static_cast<uint32_t>(u)); u >>= 32; }
  }

  static BigInt from_string(const std::string& s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) { neg = s[i] == '-'; ++i; }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty string");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
      r.mul_small(10);
      r.add_small(static_cast<uint32_t>(s[i] - '0'));
    }
    r.neg_ = neg && !r.is_zero();
    return r;
  }

  bool is_zero() const { return mag_.empty(); }
  bool negative() const { return neg_; }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

  bool fits_slonglong() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = to_ull_unchecked();
    return neg_ ? u <= (1ULL << 63) : u < (1ULL << 63);
  }
  long long to_longlong() const {
    assert(fits_slonglong());
    unsigned long long u = to_ull_unchecked();
    return neg_ ? -static_cast<long long>(u) : static_cast<long long>(u);
  }

  double to_double() const {
    double r = 0;
    for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
    return neg_ ? -r : r;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.mag_ == b.mag_;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(a.mag_, b.mag_);
    if (a.neg_) c = -c;
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  BigInt operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.neg_ == b.neg_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.neg_ = a.neg_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.neg_ = a.neg_; }
      else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.neg_ = b.neg_; }
    }
    r.trim();
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.mag_.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.mag_.size();
      while (carry) {
        uint64_t cur = r.mag_[k] + carry;
        r.mag_[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.neg_ = a.neg_ != b.neg_;
    r.trim();
    return r;
  }

  // Truncated quotient (rounds toward zero), matching C semantics.
  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) return {BigInt(), a};
    BigInt q, r;
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.trim(); r.trim();
    q.neg_ = !q.is_zero() && (a.neg_ != b.neg_);
    r.neg_ = !r.is_zero() && a.neg_;
    return {q, r};
  }

  BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
  BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
  BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }
  BigInt& operator/=(const BigInt& b) { *this = *this / b; return *this; }

  BigInt abs() const { BigInt r = *this; r.neg_ = false; return r; }

  static BigInt gcd(BigInt a, BigInt b) {
    a.neg_ = b.neg_ = false;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int shift = 0;
    while (a.even() && b.even()) { a.shr1(); b.shr1(); ++shift; }
    while (a.even()) a.shr1();
    while (!b.is_zero()) {
      while (b.even()) b.shr1();
      if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a, b);
      b = b - a;
      b.neg_ = false;
    }
    for (int i = 0; i < shift; ++i) a.shl1();
    return a;
  }

  static BigInt factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r.mul_small(i);
    return r;
  }
  static BigInt double_factorial(long long n) {  // n!! with (-1)!! = 0!! = 1
    BigInt r(1);
    for (long long i = n; i >= 2; i -= 2) r.mul_small(static_cast<uint32_t>(i));
    return r;
  }
  static BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt();
    k = std::min(k, n - k);
    BigInt r(1);
    for (unsigned i = 1; i <= k; ++i) {
      r.mul_small(n - k + i);
      r = r / BigInt(static_cast<long long>(i));
    }
    return r;
  }
  static BigInt pow(BigInt base, unsigned e) {
    BigInt r(1);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      uint64_t rem = 0;
      for (size_t i = m.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int d = 0; d < 9; ++d) { digits.push_back(static_cast<char>('0' + rem % 10)); rem /= 10; }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

private:
  std::vector<uint32_t> mag_;
  bool neg_ = false;

  unsigned long long to_ull_unchecked() const {
    unsigned long long u = 0;
    if (mag_.size() > 1) u = static_cast<unsigned long long>(mag_[1]) << 32;
    if (!mag_.empty()) u |= mag_[0];
    return u;
  }

  bool even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }
  void shr1() {
    uint32_t carry = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
      uint32_t next = mag_[i] & 1u;
      mag_[i] = (mag_[i] >> 1) | (carry << 31);
      carry = next;
    }
    trim();
  }
  void shl1() {
    uint32_t carry = 0;
    for (size_t i = 0; i < mag_.size(); ++i) {
      uint32_t next = mag_[i] >> 31;
      mag_[i] = (mag_[i] << 1) | carry;
      carry = next;
    }
    if (carry) mag_.push_back(carry);
  }

  void trim() { while (!mag_.empty() && mag_.back() == 0) mag_.pop_back(); if (mag_.empty()) neg_ = false; }

  void mul_small(uint32_t f) {
    uint64_t carry = 0;
    for (auto& limb : mag_) {
      uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
      limb = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry) { mag_.push_back(static_cast<uint32_t>(carry)); carry >>= 32; }
    trim();
  }
  void add_small(uint32_t v) {
    uint64_t carry = v;
    for (size_t i = 0; i < mag_.size() && carry; ++i) {
      uint64_t cur = mag_[i] + carry;
      mag_[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<uint32_t>(carry));
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      uint64_t cur = carry;
      if (i < a.size()) cur += a[i];
      if (i < b.size()) cur += b[i];
      r[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    return r;
  }
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (cur < 0) { cur += (1LL << 32); borrow = 1; } else borrow = 0;
      r[i] = static_cast<uint32_t>(cur);
    }
    return r;
  }

  // Knuth algorithm D; requires |a| >= |b| > 0.
  static void divmod_mag(std::vector<uint32_t> a, std::vector<uint32_t> b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.size() == 1) {
      uint64_t d = b[0], rem = 0;
      q.assign(a.size(), 0);
      for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
      }
      r.clear();
      if (rem) r.push_back(static_cast<uint32_t>(rem));
      return;
    }
    // normalize so that top limb of b has its high bit set
    int shift = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [&](std::vector<uint32_t>& v) {
      if (!shift) return;
      uint32_t carry = 0;
      for (auto& limb : v) {
        uint32_t next = limb >> (32 - shift);
        limb = (limb << shift) | carry;
        carry = next;
      }
      if (carry) v.push_back(carry);
    };
    shl(a); shl(b);
    size_t n = b.size(), m = a.size() - n;
    a.push_back(0);
    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t num = (static_cast<uint64_t>(a[j + n]) << 32) | a[j + n - 1];
      uint64_t qhat = num / b[n - 1];
      uint64_t rhat = num % b[n - 1];
      while (qhat >= (1ULL << 32) ||
             qhat * b[n - 2] > ((rhat << 32) | a[j + n - 2])) {
        --qhat;
        rhat += b[n - 1];
        if (rhat >= (1ULL << 32)) break;
      }
      // multiply-subtract
      int64_t borrow = 0;
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * b[i] + carry;
        carry = p >> 32;
        int64_t t = static_cast<int64_t>(a[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
        if (t < 0) { t += (1LL << 32); borrow = 1; } else borrow = 0;
        a[i + j] = static_cast<uint32_t>(t);
      }
      int64_t t = static_cast<int64_t>(a[j + n]) - static_cast<int64_t>(carry) - borrow;
      if (t < 0) {  // qhat was one too large
        --qhat;
        uint64_t c2 = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t cur = static_cast<uint64_t>(a[i + j]) + b[i] + c2;
          a[i + j] = static_cast<uint32_t>(cur);
          c2 = cur >> 32;
        }
        t += static_cast<int64_t>(c2);
      }
      a[j + n] = static_cast<uint32_t>(t);
      q[j] = static_cast<uint32_t>(qhat);
    }
    a.resize(n);
    if (shift) {
      uint32_t carry = 0;
      for (size_t i = a.size(); i-- > 0;) {
        uint32_t next = a[i] << (32 - shift);
        a[i] = (a[i] >> shift) | carry;
        carry = next;
      }
    }
    r = a;
  }
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace mvol
