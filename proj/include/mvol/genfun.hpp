#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "mvol/rational.hpp"

namespace mvol {

// Polynomial in variables t_1, t_2, ... (or p_1, p_2, ...) with rational
// coefficients, sparse over exponent vectors. exps[i] is the exponent of the
// variable with index i+1; trailing zeros are trimmed.
class PartitionPolynomial {
public:
  using Monomial = std::vector<int>;

  PartitionPolynomial() = default;

  static PartitionPolynomial variable(int index, Rational coeff = Rational(1)) {
    PartitionPolynomial f;
    Monomial m(index, 0);
    m[index - 1] = 1;
    f.terms_[std::move(m)] = std::move(coeff);
    return f;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    Monomial key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    trim(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend PartitionPolynomial operator+(const PartitionPolynomial& a, const PartitionPolynomial& b) {
    PartitionPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend PartitionPolynomial operator*(const PartitionPolynomial& a, const Rational& s) {
    PartitionPolynomial r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = c * s;
    return r;
  }

  friend PartitionPolynomial operator*(const PartitionPolynomial& a, const PartitionPolynomial& b) {
    PartitionPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }

  friend bool operator==(const PartitionPolynomial&, const PartitionPolynomial&) = default;

  // partial derivative with respect to the variable of given index (1-based)
  PartitionPolynomial derivative(int index) const {
    PartitionPolynomial r;
    for (const auto& [m, c] : terms_) {
      if (static_cast<int>(m.size()) < index || m[index - 1] == 0) continue;
      Monomial d = m;
      int e = d[index - 1]--;
      r.add_term(std::move(d), c * Rational(e));
    }
    return r;
  }

  // weight of a monomial: sum i * e_i
  static int weight(const Monomial& m) {
    int w = 0;
    for (size_t i = 0; i < m.size(); ++i) w += static_cast<int>(i + 1) * m[i];
    return w;
  }

  // all terms share this weight; throws otherwise
  int homogeneous_weight() const {
    int w = -1;
    for (const auto& [m, c] : terms_) {
      int mw = weight(m);
      if (w < 0) w = mw;
      if (mw != w) throw std::logic_error("PartitionPolynomial: not homogeneous");
    }
    return w;
  }

  int max_variable() const {
    size_t mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, m.size());
    return static_cast<int>(mx);
  }

  // sorted text lines such as "4 * t1 t3" or "1/2 * p1^6 p2 p4"
  std::string to_text(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.to_string() << " *";
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        os << " " << var << (i + 1);
        if (m[i] > 1) os << "^" << m[i];
      }
    }
    if (first) os << "0";
    return os.str();
  }

private:
  std::map<Monomial, Rational> terms_;

  static void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }
};

// M1 = sum_{i>=2} sum_{j=1}^{i-1} (i-1) t_j t_{i-j} d/dt_{i-1}
//                                + j(i-j) t_{i+1} d^2/(dt_j dt_{i-j})
inline PartitionPolynomial apply_M1(const PartitionPolynomial& f) {
  PartitionPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    int vars = static_cast<int>(m.size());
    // first piece: derivative in t_{i-1}, multiply by t_j t_{i-j}
    for (int im1 = 1; im1 <= vars; ++im1) {
      if (m[im1 - 1] == 0) continue;
      int i = im1 + 1;
      Rational base = c * Rational(static_cast<long long>(i - 1) * m[im1 - 1]);
      for (int j = 1; j <= i - 1; ++j) {
        int k = i - j;
        PartitionPolynomial::Monomial t(std::max({vars, j, k}), 0);
        for (int v = 0; v < vars; ++v) t[v] = m[v];
        --t[im1 - 1];
        ++t[j - 1];
        ++t[k - 1];
        out.add_term(std::move(t), base);
      }
    }
    // second piece: second derivative in t_j, t_{i-j}, multiply by t_{i+1}
    for (int j = 1; j <= vars; ++j) {
      if (m[j - 1] == 0) continue;
      for (int k = j; k <= vars; ++k) {
        if (m[k - 1] == 0) continue;
        long long d2 = (j == k) ? static_cast<long long>(m[j - 1]) * (m[j - 1] - 1)
                                : static_cast<long long>(m[j - 1]) * m[k - 1];
        if (d2 == 0) continue;
        int i = j + k;
        // (j,k) and (k,j) both occur in the double sum when j != k
        long long mult = (j == k) ? 1 : 2;
        PartitionPolynomial::Monomial t(std::max(vars, i + 1), 0);
        for (int v = 0; v < vars; ++v) t[v] = m[v];
        --t[j - 1];
        --t[k - 1];
        ++t[i];  // variable t_{i+1}
        out.add_term(std::move(t), c * Rational(static_cast<long long>(j) * k * d2 * mult));
      }
    }
  }
  return out;
}

// M2 = sum_{i>=2} sum_{j=1}^{i-1} (i-2) p_j p_{i-j} d/dp_{i-2}
//                                + j(i-j) p_{i+2} d^2/(dp_j dp_{i-j})
inline PartitionPolynomial apply_M2(const PartitionPolynomial& f) {
  PartitionPolynomial out;
  for (const auto& [m, c] : f.terms()) {
    int vars = static_cast<int>(m.size());
    for (int im2 = 1; im2 <= vars; ++im2) {
      if (m[im2 - 1] == 0) continue;
      int i = im2 + 2;
      Rational base = c * Rational(static_cast<long long>(i - 2) * m[im2 - 1]);
      for (int j = 1; j <= i - 1; ++j) {
        int k = i - j;
        PartitionPolynomial::Monomial t(std::max({vars, j, k}), 0);
        for (int v = 0; v < vars; ++v) t[v] = m[v];
        --t[im2 - 1];
        ++t[j - 1];
        ++t[k - 1];
        out.add_term(std::move(t), base);
      }
    }
    for (int j = 1; j <= vars; ++j) {
      if (m[j - 1] == 0) continue;
      for (int k = j; k <= vars; ++k) {
        if (m[k - 1] == 0) continue;
        long long d2 = (j == k) ? static_cast<long long>(m[j - 1]) * (m[j - 1] - 1)
                                : static_cast<long long>(m[j - 1]) * m[k - 1];
        if (d2 == 0) continue;
        int i = j + k;
        long long mult = (j == k) ? 1 : 2;
        PartitionPolynomial::Monomial t(std::max(vars, i + 2), 0);
        for (int v = 0; v < vars; ++v) t[v] = m[v];
        --t[j - 1];
        --t[k - 1];
        ++t[i + 1];  // variable p_{i+2}
        out.add_term(std::move(t), c * Rational(static_cast<long long>(j) * k * d2 * mult));
      }
    }
  }
  return out;
}

// F_n: rooted count of 1-cylinder gluings by vertex-degree profile,
// (n-1) F_n = M1 F_{n-1}, F_1 = t_1.
inline const PartitionPolynomial& abelian_F(int n) {
  if (n < 1) throw std::invalid_argument("abelian_F: n >= 1");
  static std::mutex mu;
  static std::deque<PartitionPolynomial> cache;  // stable references on growth
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back(PartitionPolynomial::variable(1));
  while (static_cast<int>(cache.size()) < n) {
    int next = static_cast<int>(cache.size()) + 1;
    cache.push_back(apply_M1(cache.back()) * Rational(1, next - 1));
  }
  const PartitionPolynomial& f = cache[n - 1];
  if (!f.is_zero() && f.homogeneous_weight() != n) throw std::logic_error("abelian_F: weight mismatch");
  return f;
}

// G_n: weighted count of orientable gluings of a 2n-gon by vertex-degree
// profile; 2 G_1 = p_1^2 and 2n G_n = M2 G_{n-1}.
inline const PartitionPolynomial& quadratic_G(int n) {
  if (n < 1) throw std::invalid_argument("quadratic_G: n >= 1");
  static std::mutex mu;
  static std::deque<PartitionPolynomial> cache;  // stable references on growth
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    auto p1 = PartitionPolynomial::variable(1);
    cache.push_back(p1 * p1 * Rational(1, 2));
  }
  while (static_cast<int>(cache.size()) < n) {
    int next = static_cast<int>(cache.size()) + 1;
    cache.push_back(apply_M2(cache.back()) * Rational(1, 2 * next));
  }
  const PartitionPolynomial& g = cache[n - 1];
  if (!g.is_zero() && g.homogeneous_weight() != 2 * n) throw std::logic_error("quadratic_G: weight mismatch");
  return g;
}

// F_{l,m,n} for l in {0,1,2}: rooted counts of two-polygon cylinder gluings
// with l connecting edges.
inline PartitionPolynomial quadratic_F(int l, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("quadratic_F: m,n >= 1");
  if (l < 0 || l > 2)
    throw std::invalid_argument("quadratic_F: closed formulas exist only for l in {0,1,2}");
  const PartitionPolynomial& gm = quadratic_G(m);
  const PartitionPolynomial& gn = quadratic_G(n);
  if (l == 0) return gm * gn;

  int vm = gm.max_variable(), vn = gn.max_variable();
  std::vector<PartitionPolynomial> dm(vm + 1), dn(vn + 1);
  for (int i = 1; i <= vm; ++i) dm[i] = gm.derivative(i);
  for (int i = 1; i <= vn; ++i) dn[i] = gn.derivative(i);

  PartitionPolynomial out;
  if (l == 1) {
    for (int i = 1; i <= vm; ++i) {
      if (dm[i].is_zero()) continue;
      for (int j = 1; j <= vn; ++j) {
        if (dn[j].is_zero()) continue;
        out = out + PartitionPolynomial::variable(i + j + 2, Rational(static_cast<long long>(i) * j)) *
                        (dm[i] * dn[j]);
      }
    }
    return out;
  }

  // l == 2
  std::vector<std::vector<PartitionPolynomial>> d2m(vm + 1, std::vector<PartitionPolynomial>(vm + 1));
  std::vector<std::vector<PartitionPolynomial>> d2n(vn + 1, std::vector<PartitionPolynomial>(vn + 1));
  for (int i = 1; i <= vm; ++i)
    for (int j = 1; j <= vm; ++j) d2m[i][j] = dm[i].derivative(j);
  for (int i = 1; i <= vn; ++i)
    for (int j = 1; j <= vn; ++j) d2n[i][j] = dn[i].derivative(j);

  for (int i = 1; i <= vm; ++i)
    for (int j = 1; j <= vm; ++j) {
      if (d2m[i][j].is_zero()) continue;
      for (int k = 1; k <= vn; ++k)
        for (int el = 1; el <= vn; ++el) {
          if (d2n[k][el].is_zero()) continue;
          Rational coeff(static_cast<long long>(i) * j * k * el, 2);
          out = out + PartitionPolynomial::variable(i + k + 2, coeff) *
                          PartitionPolynomial::variable(j + el + 2) * (d2m[i][j] * d2n[k][el]);
        }
    }

  // The sums below run over ordered pairs of boundary components, so each
  // geometric configuration appears twice; the p1^3 p3^3 coefficient 1 of
  // F_{2,1,3} pins the normalization.
  for (int i = 1; i <= std::max(vm, vn); ++i)
    for (int j = 1; j <= std::max(vm, vn); ++j)
      for (int k = 1; k <= std::max(vm, vn); ++k) {
        Rational coeff(static_cast<long long>(i) * j * k * (k + 1), 2);
        PartitionPolynomial cross;
        if (i <= vm && j <= vm && k <= vn && !d2m[i][j].is_zero() && !dn[k].is_zero())
          cross = cross + d2m[i][j] * dn[k];
        if (k <= vm && i <= vn && j <= vn && !dm[k].is_zero() && !d2n[i][j].is_zero())
          cross = cross + dm[k] * d2n[i][j];
        if (!cross.is_zero())
          out = out + PartitionPolynomial::variable(i + j + k + 4, coeff) * cross;
      }

  for (int i = 1; i <= vm; ++i) {
    if (dm[i].is_zero()) continue;
    for (int j = 1; j <= vn; ++j) {
      if (dn[j].is_zero()) continue;
      PartitionPolynomial ring;
      for (int k = 0; k <= i; ++k)
        for (int el = 0; el <= j; ++el)
          ring = ring + PartitionPolynomial::variable(k + el + 2) *
                            PartitionPolynomial::variable(i + j + 2 - k - el);
      out = out + ring * (dm[i] * dn[j]) * Rational(static_cast<long long>(i) * j, 2);
    }
  }
  return out;
}

// Rooted-to-weighted conversions: divide by n for Abelian 1-cylinder counts,
// halve the quadratic count iff m = n.
inline Rational weighted_from_rooted_abelian(const Rational& coeff, int n) {
  return coeff / Rational(n);
}
inline Rational weighted_from_rooted_quadratic(const Rational& coeff, int m, int n) {
  return m == n ? coeff / Rational(2) : coeff;
}

// Exponent vector of the monomial attached to a quadratic stratum:
// a singularity of order d contributes the variable p_{d+2}.
inline PartitionPolynomial::Monomial quadratic_stratum_monomial(const std::vector<int>& orders) {
  PartitionPolynomial::Monomial m;
  for (int d : orders) {
    int var = d + 2;
    if (static_cast<int>(m.size()) < var) m.resize(var, 0);
    ++m[var - 1];
  }
  return m;
}

// Abelian: a zero of order k contributes the variable t_{k+1}.
inline PartitionPolynomial::Monomial abelian_stratum_monomial(const std::vector<int>& orders) {
  PartitionPolynomial::Monomial m;
  for (int k : orders) {
    int var = k + 1;
    if (static_cast<int>(m.size()) < var) m.resize(var, 0);
    ++m[var - 1];
  }
  return m;
}

}  // namespace mvol
