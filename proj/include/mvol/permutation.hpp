#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <vector>

#include "mvol/bigint.hpp"

namespace mvol {

// Permutation of {0,..,n-1} stored as the image table: p[i] = image of i.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    assert(is_valid());
  }
  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }
  // Single cycle (c0 c1 ... ck) extended by fixed points to degree n.
  static Permutation from_cycle(int n, const std::vector<int>& cycle) {
    auto p = identity(n);
    for (size_t i = 0; i < cycle.size(); ++i)
      p.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    assert(p.is_valid());
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_valid() const {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  // (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    assert(a.size() == b.size());
    std::vector<int> v(a.size());
    for (int i = 0; i < a.size(); ++i) v[i] = a(b(i));
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 0; i < size(); ++i) v[images_[i]] = i;
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  int sign() const {
    int s = 1;
    for (const auto& c : cycles())
      if (c.size() % 2 == 0) s = -s;
    return s;
  }

private:
  std::vector<int> images_;
};

// Multiset of cycle lengths, canonicalized by descending sort (usable as map key).
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    assert(std::all_of(lengths_.begin(), lengths_.end(), [](int l) { return l >= 1; }));
    std::sort(lengths_.begin(), lengths_.end(), std::greater<int>());
  }

  const std::vector<int>& lengths() const { return lengths_; }
  int total() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }
  int count() const { return static_cast<int>(lengths_.size()); }

  // multiplicity of each length value
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int l : lengths_) ++m[l];
    return m;
  }

  int permutation_sign() const {
    int s = 1;
    for (int l : lengths_)
      if (l % 2 == 0) s = -s;
    return s;
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < lengths_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(lengths_[i]);
    }
    return s + "]";
  }

private:
  std::vector<int> lengths_;
};

inline CycleType cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : p.cycles()) lengths.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(lengths));
}

// |C(t)| = n! / prod_l ( l^{a_l} a_l! ) with a_l the multiplicity of l in t.
inline BigInt conjugacy_class_size(int n, const CycleType& t) {
  if (t.total() != n) throw std::invalid_argument("conjugacy_class_size: type does not sum to n");
  BigInt den(1);
  for (const auto& [len, mult] : t.multiplicities())
    den *= BigInt::pow(BigInt(len), mult) * BigInt::factorial(mult);
  return BigInt::factorial(n) / den;
}

// Characters chi_j of the exterior powers of the standard (n-1)-dimensional
// representation of S_n, evaluated on the class of cycle type t.
// Computed from a_j = [x^j] prod_cycles (1 - (-x)^l) (characters of wedge^j C^n)
// and peeled via wedge^j C^n = wedge^j St + wedge^{j-1} St.
inline std::vector<BigInt> exterior_characters(int n, const CycleType& t) {
  if (t.total() != n || n < 1) throw std::invalid_argument("exterior_characters: bad type");
  std::vector<BigInt> a(n + 1, BigInt(0));
  a[0] = BigInt(1);
  int deg = 0;
  for (int l : t.lengths()) {
    // multiply by (1 - (-x)^l), i.e. subtract (-1)^l * (shift by l)
    BigInt sgn(l % 2 == 0 ? 1 : -1);
    for (int j = std::min(n, deg + l); j >= l; --j) a[j] -= sgn * a[j - l];
    deg = std::min(n, deg + l);
  }
  std::vector<BigInt> chi(n);
  BigInt prev(0);
  for (int j = 0; j < n; ++j) {
    chi[j] = a[j] - prev;
    prev = chi[j];
  }
  return chi;
}

}  // namespace mvol
