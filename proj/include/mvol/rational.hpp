#pragma once

#include <ostream>
#include <string>

#include "mvol/bigint.hpp"

namespace mvol {

// Exact rational number, always stored reduced with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rational from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const { Rational r = *this; r.num_ = -r.num_; return r; }

  Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
  Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
  Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);
  }

  double to_double() const { return num_.to_double() / den_.to_double(); }

  std::string to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
  BigInt num_, den_;

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.negative()) { num_ = -num_; den_ = -den_; }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) { num_ /= g; den_ /= g; }
  }
};

inline std::string to_string(const Rational& v) { return v.to_string(); }

}  // namespace mvol
