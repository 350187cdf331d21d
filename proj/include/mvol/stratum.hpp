#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvol/permutation.hpp"

namespace mvol {

enum class DiffKind { Abelian, Quadratic };

// Stratum of Abelian (H) or quadratic (Q) differentials, given by the multiset
// of singularity orders. Order 0 entries are marked regular points.
class StratumSignature {
public:
  StratumSignature() = default;
  StratumSignature(DiffKind kind, std::vector<int> orders) : kind_(kind), orders_(std::move(orders)) {
    std::sort(orders_.begin(), orders_.end(), std::greater<int>());
    validate();
  }

  DiffKind kind() const { return kind_; }
  bool abelian() const { return kind_ == DiffKind::Abelian; }
  const std::vector<int>& orders() const { return orders_; }
  int num_singularities() const { return static_cast<int>(orders_.size()); }

  int total_order() const { return std::accumulate(orders_.begin(), orders_.end(), 0); }

  int genus() const {
    return abelian() ? total_order() / 2 + 1 : total_order() / 4 + 1;
  }

  // complex dimension: 2g+r-1 (Abelian), 2g+k-2 (quadratic)
  int dimension() const {
    return abelian() ? 2 * genus() + num_singularities() - 1
                     : 2 * genus() + num_singularities() - 2;
  }

  // Abelian: n = sum (m_i + 1) = dim - 1 = number of saddle connections of a
  // 1-cylinder diagram.
  int frobenius_n() const {
    if (!abelian()) throw std::logic_error("frobenius_n: Abelian only");
    return total_order() + num_singularities();
  }

  // cycle type with parts m_i + 1 (Abelian)
  CycleType frobenius_type() const {
    if (!abelian()) throw std::logic_error("frobenius_type: Abelian only");
    std::vector<int> parts;
    for (int m : orders_) parts.push_back(m + 1);
    return CycleType(std::move(parts));
  }

  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int o : orders_) ++m[o];
    return m;
  }

  StratumSignature without_marked_points() const {
    std::vector<int> kept;
    for (int o : orders_)
      if (o != 0) kept.push_back(o);
    return StratumSignature(kind_, std::move(kept));
  }

  friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
  friend auto operator<=>(const StratumSignature&, const StratumSignature&) = default;

  // Text syntax: H(3,1), H(1^4), Q(1^3,-1^3), Q(2,-1^6); whitespace ignored.
  static StratumSignature parse(const std::string& text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 4 || (s[0] != 'H' && s[0] != 'Q') || s[1] != '(' || s.back() != ')')
      throw std::invalid_argument("stratum: expected H(...) or Q(...)");
    DiffKind kind = s[0] == 'H' ? DiffKind::Abelian : DiffKind::Quadratic;
    std::vector<int> orders;
    size_t i = 2;
    while (i < s.size() - 1) {
      size_t j = i;
      if (s[j] == '-') ++j;
      size_t k = j;
      while (k < s.size() - 1 && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == j) throw std::invalid_argument("stratum: expected integer order");
      int order = std::stoi(s.substr(i, k - i));
      int mult = 1;
      if (k < s.size() - 1 && s[k] == '^') {
        size_t m = ++k;
        while (k < s.size() - 1 && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == m) throw std::invalid_argument("stratum: expected multiplicity after ^");
        mult = std::stoi(s.substr(m, k - m));
      }
      for (int t = 0; t < mult; ++t) orders.push_back(order);
      if (k < s.size() - 1) {
        if (s[k] != ',') throw std::invalid_argument("stratum: expected ','");
        ++k;
      }
      i = k;
    }
    if (orders.empty()) throw std::invalid_argument("stratum: no orders given");
    if (kind == DiffKind::Quadratic)
      for (int o : orders)
        if (o == 0) throw std::invalid_argument("stratum: quadratic orders must be nonzero");
    return StratumSignature(kind, std::move(orders));
  }

  std::string to_string() const {
    std::string s = abelian() ? "H(" : "Q(";
    bool first = true;
    for (auto it = orders_.begin(); it != orders_.end();) {
      auto run = std::find_if(it, orders_.end(), [&](int v) { return v != *it; });
      if (!first) s += ",";
      first = false;
      s += std::to_string(*it);
      auto count = run - it;
      if (count > 1) s += "^" + std::to_string(count);
      it = run;
    }
    return s + ")";
  }

private:
  DiffKind kind_ = DiffKind::Abelian;
  std::vector<int> orders_;

  void validate() const {
    if (orders_.empty()) throw std::invalid_argument("stratum: empty signature");
    int sum = total_order();
    if (abelian()) {
      for (int o : orders_)
        if (o < 0) throw std::invalid_argument("stratum: Abelian orders must be >= 0");
      if (sum % 2 != 0 || sum < 0) throw std::invalid_argument("stratum: sum m_i must be 2g-2, g>=1");
    } else {
      for (int o : orders_)
        if (o < -1) throw std::invalid_argument("stratum: quadratic orders must be >= -1");
      if (sum % 4 != 0 || sum < -4) throw std::invalid_argument("stratum: sum d_i must be 4g-4, g>=0");
    }
  }
};

}  // namespace mvol
