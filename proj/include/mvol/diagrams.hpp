#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "mvol/rational.hpp"
#include "mvol/rauzy.hpp"

namespace mvol {

// A 1-cylinder separatrix diagram: one orbit of standard permutations under
// remarking of the two boundary components (plus top/bottom exchange in the
// non-orientable case).
struct SeparatrixDiagram {
  DiffKind kind = DiffKind::Abelian;
  GeneralizedPermutation canonical_rep;  // lexicographically smallest member
  long long orbit_size = 0;              // number of standard permutations representing it
  long long symmetry_order = 0;          // |Gamma(D)|
  LmnType lmn;                           // quadratic only; for Abelian l = n_sym, m = n = 0
  int saddle_connections = 0;
  StratumSignature stratum;
};

// Partition a collection of standard permutations into diagram orbits.
// Every orbit must be entirely contained in the input set.
inline std::vector<SeparatrixDiagram> group_into_diagrams(const std::vector<GeneralizedPermutation>& standards) {
  std::set<GeneralizedPermutation> remaining(standards.begin(), standards.end());
  if (remaining.size() != standards.size())
    throw std::invalid_argument("group_into_diagrams: duplicate standard permutations");
  std::vector<SeparatrixDiagram> out;
  while (!remaining.empty()) {
    GeneralizedPermutation p = *remaining.begin();
    std::set<GeneralizedPermutation> orbit = diagram_orbit(p);
    for (const auto& q : orbit) {
      if (remaining.erase(q) != 1)
        throw std::logic_error("group_into_diagrams: orbit member missing from input set (incomplete collection)");
    }
    SeparatrixDiagram d;
    d.canonical_rep = *orbit.begin();
    d.kind = d.canonical_rep.is_ordinary() ? DiffKind::Abelian : DiffKind::Quadratic;
    d.orbit_size = static_cast<long long>(orbit.size());
    CylinderWords w = marker_dropped(d.canonical_rep);
    long long denom = static_cast<long long>(w.top.size()) * static_cast<long long>(w.bottom.size());
    if (d.kind == DiffKind::Quadratic) denom *= 2;
    if (denom % d.orbit_size != 0)
      throw std::logic_error("group_into_diagrams: orbit size does not divide marking count");
    d.symmetry_order = denom / d.orbit_size;
    d.lmn = lmn_of(d.canonical_rep);
    d.saddle_connections = d.kind == DiffKind::Abelian
                               ? static_cast<int>(w.top.size())
                               : d.lmn.l + d.lmn.m + d.lmn.n;
    d.stratum = stratum_of_standard(d.canonical_rep);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const SeparatrixDiagram& a, const SeparatrixDiagram& b) {
    return a.canonical_rep < b.canonical_rep;
  });
  return out;
}

// sum of 1/|Gamma(D)|
inline Rational weighted_count(const std::vector<SeparatrixDiagram>& diagrams) {
  Rational sum;
  for (const auto& d : diagrams) sum += Rational(1, d.symmetry_order);
  return sum;
}

// restricted to diagrams of given l and unordered {m,n}
inline Rational weighted_count_lmn(const std::vector<SeparatrixDiagram>& diagrams, int l, int m, int n) {
  Rational sum;
  for (const auto& d : diagrams) {
    bool match = d.lmn.l == l && ((d.lmn.m == m && d.lmn.n == n) || (d.lmn.m == n && d.lmn.n == m));
    if (match) sum += Rational(1, d.symmetry_order);
  }
  return sum;
}

namespace detail {

// All canonical standard permutations whose boundary words use exactly n
// symbols, ordinary case: top word is forced to (1..n), bottom word ranges
// over all arrangements.
inline std::map<StratumSignature, std::vector<GeneralizedPermutation>> standard_atlas_abelian(int n) {
  std::map<StratumSignature, std::vector<GeneralizedPermutation>> atlas;
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  GeneralizedPermutation p;
  p.top.resize(n + 1);
  for (int i = 0; i <= n; ++i) p.top[i] = i;
  do {
    p.bottom = word;
    p.bottom.push_back(0);
    atlas[stratum_of_standard(p)].push_back(p);
  } while (std::next_permutation(word.begin(), word.end()));
  for (auto& [s, v] : atlas) std::sort(v.begin(), v.end());
  return atlas;
}

// Non-orientable case: enumerate first-appearance-canonical sequences of
// length 2*nsym with every symbol twice, split into top/bottom words.
inline std::map<StratumSignature, std::vector<GeneralizedPermutation>> standard_atlas_quadratic(int nsym) {
  std::map<StratumSignature, std::vector<GeneralizedPermutation>> atlas;
  std::vector<int> seq(2 * nsym);
  std::vector<int> used(nsym + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int next_new) {
    if (pos == 2 * nsym) {
      for (int tl = 1; tl < 2 * nsym; ++tl) {
        GeneralizedPermutation p;
        p.top.push_back(0);
        p.top.insert(p.top.end(), seq.begin(), seq.begin() + tl);
        p.bottom.assign(seq.begin() + tl, seq.end());
        p.bottom.push_back(0);
        if (!p.is_valid() || p.is_ordinary()) continue;
        atlas[stratum_of_standard(p)].push_back(p);
      }
      return;
    }
    for (int s = 1; s <= std::min(next_new, nsym); ++s) {
      if (used[s] == 2 || (s == next_new && next_new > nsym)) continue;
      if (s == next_new && used[s] > 0) continue;
      ++used[s];
      seq[pos] = s;
      rec(pos + 1, s == next_new ? next_new + 1 : next_new);
      --used[s];
    }
  };
  rec(0, 1);
  for (auto& [s, v] : atlas) std::sort(v.begin(), v.end());
  return atlas;
}

inline const std::map<StratumSignature, std::vector<GeneralizedPermutation>>& cached_atlas(DiffKind kind, int nsym) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::map<StratumSignature, std::vector<GeneralizedPermutation>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(kind == DiffKind::Abelian ? 0 : 1, nsym);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, kind == DiffKind::Abelian ? standard_atlas_abelian(nsym)
                                                      : standard_atlas_quadratic(nsym))
             .first;
  }
  return it->second;
}

}  // namespace detail

// Number of boundary saddle connections of 1-cylinder diagrams in s:
// n = dim-1 for Abelian, dim for quadratic.
inline int diagram_symbol_count(const StratumSignature& s) {
  return s.abelian() ? s.frobenius_n() : s.dimension();
}

inline constexpr int kMaxAbelianAtlas = 9;    // bottom arrangements: 9! candidates
inline constexpr int kMaxQuadraticAtlas = 7;  // matchings of 14 slots

// Every canonical standard permutation representing a 1-cylinder diagram of
// the (whole) stratum s, across all connected components.
inline std::vector<GeneralizedPermutation> all_standard_permutations(const StratumSignature& s) {
  int nsym = diagram_symbol_count(s);
  int cap = s.abelian() ? kMaxAbelianAtlas : kMaxQuadraticAtlas;
  if (nsym > cap) throw ResourceLimitError("all_standard_permutations: stratum beyond enumeration bound");
  const auto& atlas = detail::cached_atlas(s.kind(), nsym);
  auto it = atlas.find(s);
  if (it == atlas.end()) return {};
  return it->second;
}

// 1-cylinder diagrams of the whole stratum (all components).
inline std::vector<SeparatrixDiagram> one_cylinder_diagrams(const StratumSignature& s) {
  return group_into_diagrams(all_standard_permutations(s));
}

// Diagrams represented inside one Rauzy class.
inline std::vector<SeparatrixDiagram> diagrams_of_class(const RauzyClass& c) {
  return group_into_diagrams(standard_members(c));
}

// A (generalized) permutation whose suspensions live in s.
inline GeneralizedPermutation representative(const StratumSignature& s) {
  if (s.abelian()) {
    const auto& orders = s.orders();
    int n = s.frobenius_n();
    bool minimal = orders.size() == 1;
    bool principal = std::all_of(orders.begin(), orders.end(), [](int m) { return m == 1; });
    if (minimal) {
      // reversal on n+1 symbols suspends to H(n-1)
      GeneralizedPermutation p;
      p.top.resize(n + 1);
      p.bottom.resize(n + 1);
      for (int i = 0; i <= n; ++i) {
        p.top[i] = i;
        p.bottom[i] = n - i;
      }
      return p;
    }
    if (principal && n >= 4) {
      // c2 = c1 * D for the fixed-point-free involution D = (1 3)(2 4)(5 7)(6 8)...
      std::vector<int> c2(n + 1, 0);
      auto inv = [&](int x) {
        int b = (x - 1) / 4 * 4;
        int r = (x - 1) % 4;
        return b + (r + 2) % 4 + 1;
      };
      for (int x = 1; x <= n; ++x) c2[x] = inv(x) % n + 1;
      GeneralizedPermutation p;
      p.top.resize(n + 1);
      for (int i = 0; i <= n; ++i) p.top[i] = i;
      int cur = c2[1];
      for (int k = 0; k < n; ++k) {
        p.bottom.push_back(cur);
        cur = c2[cur];
      }
      p.bottom.push_back(0);
      return p;
    }
  }
  auto standards = all_standard_permutations(s);
  if (standards.empty()) throw std::runtime_error("representative: stratum not found in catalogue");
  return standards.front();
}

// One representative per Rauzy class meeting the 1-cylinder diagrams of s;
// together the classes contain every standard permutation of the stratum.
inline std::vector<RauzyClass> covering_rauzy_classes(const StratumSignature& s, bool use_left, bool use_right,
                                                      size_t max_members = 10'000'000) {
  auto standards = all_standard_permutations(s);
  std::set<GeneralizedPermutation> uncovered(standards.begin(), standards.end());
  std::vector<RauzyClass> classes;
  while (!uncovered.empty()) {
    RauzyClass c = rauzy_class(*uncovered.begin(), use_left, use_right, max_members);
    size_t found = 0;
    for (const auto& p : standard_members(c)) {
      auto it = uncovered.find(p);
      if (it == uncovered.end())
        throw std::logic_error("covering_rauzy_classes: class contains unexpected standard member");
      uncovered.erase(it);
      ++found;
    }
    if (found == 0) throw std::logic_error("covering_rauzy_classes: class without standard members");
    classes.push_back(std::move(c));
  }
  return classes;
}

}  // namespace mvol
