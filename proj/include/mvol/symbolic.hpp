#pragma once

#include <map>
#include <sstream>
#include <vector>

#include "mvol/zeta.hpp"

namespace mvol {

// Exact value of the form sum of rational * zeta(k_1) zeta(k_2) ... * pi^m,
// with integer zeta arguments >= 2 (kept as a sorted multiset per term).
class SymbolicValue {
public:
  struct Key {
    std::vector<int> zetas;  // sorted ascending
    int pi_pow = 0;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  SymbolicValue() = default;
  SymbolicValue(const Rational& r) {
    if (!r.is_zero()) terms_[Key{}] = r;
  }

  static SymbolicValue zeta_term(const Rational& coeff, int zeta_arg) {
    return term(coeff, {zeta_arg}, 0);
  }
  static SymbolicValue pi_term(const Rational& coeff, int pi_pow) { return term(coeff, {}, pi_pow); }
  static SymbolicValue term(const Rational& coeff, std::vector<int> zetas, int pi_pow) {
    SymbolicValue v;
    if (coeff.is_zero()) return v;
    std::sort(zetas.begin(), zetas.end());
    for (int z : zetas)
      if (z < 2) throw std::invalid_argument("SymbolicValue: zeta arguments must be >= 2");
    v.terms_[Key{std::move(zetas), pi_pow}] = coeff;
    return v;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend SymbolicValue operator+(const SymbolicValue& a, const SymbolicValue& b) {
    SymbolicValue r = a;
    for (const auto& [k, c] : b.terms_) r.add(k, c);
    return r;
  }
  friend SymbolicValue operator-(const SymbolicValue& a, const SymbolicValue& b) {
    SymbolicValue r = a;
    for (const auto& [k, c] : b.terms_) r.add(k, -c);
    return r;
  }
  friend SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b) {
    SymbolicValue r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k = ka;
        k.zetas.insert(k.zetas.end(), kb.zetas.begin(), kb.zetas.end());
        std::sort(k.zetas.begin(), k.zetas.end());
        k.pi_pow += kb.pi_pow;
        r.add(k, ca * cb);
      }
    return r;
  }
  friend SymbolicValue operator*(const SymbolicValue& a, const Rational& s) {
    SymbolicValue r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = c * s;
    return r;
  }
  SymbolicValue& operator+=(const SymbolicValue& b) { return *this = *this + b; }

  friend bool operator==(const SymbolicValue&, const SymbolicValue&) = default;

  // replace every even zeta factor by its Bernoulli pi-power form
  SymbolicValue normalized() const {
    SymbolicValue r;
    for (const auto& [k, c] : terms_) {
      Key nk;
      nk.pi_pow = k.pi_pow;
      Rational coeff = c;
      for (int z : k.zetas) {
        if (z % 2 == 0) {
          coeff *= zeta_even_pi_coefficient(z);
          nk.pi_pow += z;
        } else {
          nk.zetas.push_back(z);
        }
      }
      r.add(nk, coeff);
    }
    return r;
  }

  double numeric() const {
    const double pi = 3.14159265358979323846264338327950288;
    double sum = 0;
    for (const auto& [k, c] : terms_) {
      double v = c.to_double() * std::pow(pi, k.pi_pow);
      for (int z : k.zetas) v *= zeta_numeric(z);
      sum += v;
    }
    return sum;
  }

  // "p/q * zeta(7)", "p/q * pi^6", joined by " + "
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.to_string();
      size_t i = 0;
      bool any = false;
      while (i < k.zetas.size()) {
        size_t j = i;
        while (j < k.zetas.size() && k.zetas[j] == k.zetas[i]) ++j;
        os << (any ? " " : " * ") << "zeta(" << k.zetas[i] << ")";
        if (j - i > 1) os << "^" << (j - i);
        any = true;
        i = j;
      }
      if (k.pi_pow != 0) {
        os << (any ? " " : " * ") << "pi";
        if (k.pi_pow != 1) os << "^" << k.pi_pow;
        any = true;
      }
    }
    return os.str();
  }

private:
  std::map<Key, Rational> terms_;

  void add(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
};

}  // namespace mvol
