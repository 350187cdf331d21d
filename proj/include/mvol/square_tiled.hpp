#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "mvol/genperm.hpp"
#include "mvol/permutation.hpp"
#include "mvol/stratum.hpp"

namespace mvol {

// Translation surface tiled by N unit squares: h sends a square to its right
// neighbor, v to its upper neighbor. Connected iff <h,v> is transitive.
struct SquareTiledSurface {
  int N = 0;
  Permutation h;
  Permutation v;

  bool transitive() const {
    std::vector<int> stack = {0};
    std::vector<bool> seen(N, false);
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : {h(x), v(x)}) {
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count == N;
  }

  Permutation commutator() const { return h * v * h.inverse() * v.inverse(); }

  // 90-degree rotation: vertical structure becomes horizontal
  SquareTiledSurface rotated() const { return {N, v, h.inverse()}; }
};

// Zeroes from the commutator: a cycle of length k+1 is a conical point of
// order k; fixed points are marked regular points (dropped by default).
inline StratumSignature stratum_of_sts(const SquareTiledSurface& s, bool keep_marked = false) {
  std::vector<int> orders;
  for (const auto& c : s.commutator().cycles()) {
    int order = static_cast<int>(c.size()) - 1;
    if (order > 0 || keep_marked) orders.push_back(order);
  }
  if (orders.empty()) orders.push_back(0);  // torus: keep one marked point
  return StratumSignature(DiffKind::Abelian, std::move(orders));
}

struct Cylinder {
  int width = 0;
  int height = 0;
};

// Maximal horizontal cylinders: rows (cycles of h) merge with the row above
// when the vertical gluing is smooth along the whole row.
inline std::vector<Cylinder> horizontal_cylinders(const SquareTiledSurface& s) {
  auto rows = s.h.cycles();
  std::vector<int> row_of(s.N, -1);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int x : rows[r]) row_of[x] = static_cast<int>(r);
  detail::Dsu dsu(static_cast<int>(rows.size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    bool smooth = true;
    for (int x : rows[r])
      if (s.v(s.h(x)) != s.h(s.v(x))) {
        smooth = false;
        break;
      }
    if (smooth) dsu.unite(static_cast<int>(r), row_of[s.v(rows[r][0])]);
  }
  std::map<int, Cylinder> merged;
  for (size_t r = 0; r < rows.size(); ++r) {
    auto& c = merged[dsu.find(static_cast<int>(r))];
    c.width = static_cast<int>(rows[r].size());
    c.height += 1;
  }
  std::vector<Cylinder> out;
  for (auto& [root, c] : merged) out.push_back(c);
  return out;
}

inline int horizontal_cylinder_count(const SquareTiledSurface& s) {
  return static_cast<int>(horizontal_cylinders(s).size());
}

inline int vertical_cylinder_count(const SquareTiledSurface& s) {
  return horizontal_cylinder_count(s.rotated());
}

// Canonical relabeling key: BFS from a base square along (h, v, h^-1, v^-1),
// minimized over the given bases. Isomorphic surfaces get equal keys when the
// base sets correspond (e.g. singular squares, or all squares).
inline std::string canonical_key(const SquareTiledSurface& s, const std::vector<int>& bases) {
  std::string best;
  Permutation h_inv = s.h.inverse(), v_inv = s.v.inverse();
  std::vector<int> relabel(s.N);
  std::vector<int> order(s.N);
  for (int base : bases) {
    std::fill(relabel.begin(), relabel.end(), -1);
    relabel[base] = 0;
    order[0] = base;
    int next = 1;
    for (int head = 0; head < next; ++head) {
      int x = order[head];
      for (int y : {s.h(x), s.v(x), h_inv(x), v_inv(x)}) {
        if (relabel[y] < 0) {
          relabel[y] = next;
          order[next++] = y;
        }
      }
    }
    if (next != s.N) continue;  // not transitive; caller filters
    std::string key;
    bool wide = s.N > 127;  // two bytes per entry once labels outgrow a char
    key.reserve((wide ? 4 : 2) * s.N);
    auto push = [&](int value) {
      if (wide) key.push_back(static_cast<char>(value >> 8));
      key.push_back(static_cast<char>(value & 0xff));
    };
    for (int i = 0; i < s.N; ++i) push(relabel[s.h(order[i])]);
    for (int i = 0; i < s.N; ++i) push(relabel[s.v(order[i])]);
    if (best.empty() || key < best) best = key;
  }
  return best;
}

inline std::string canonical_key(const SquareTiledSurface& s) {
  std::vector<int> bases;
  for (const auto& c : s.commutator().cycles())
    if (c.size() > 1)
      for (int x : c) bases.push_back(x);
  if (bases.empty()) {
    bases.resize(s.N);
    std::iota(bases.begin(), bases.end(), 0);
  }
  return canonical_key(s, bases);
}

// census: (squares, horizontal cylinder count) -> number of surfaces
using Census = std::map<std::pair<int, int>, long long>;

// Exhaustive reference count over all pairs (h, v), tiny N only.
inline Census census_naive(const StratumSignature& s, int n_max) {
  if (n_max > 6) throw ResourceLimitError("census_naive: N!^2 pairs beyond budget");
  Census out;
  for (int N = 1; N <= n_max; ++N) {
    std::set<std::string> seen;
    std::vector<int> hv(N), vv(N);
    std::iota(hv.begin(), hv.end(), 0);
    do {
      std::iota(vv.begin(), vv.end(), 0);
      do {
        SquareTiledSurface surf{N, Permutation(hv), Permutation(vv)};
        if (!surf.transitive()) continue;
        if (!(stratum_of_sts(surf) == s)) continue;
        std::vector<int> all(N);
        std::iota(all.begin(), all.end(), 0);
        if (seen.insert(canonical_key(surf, all)).second)
          out[{N, horizontal_cylinder_count(surf)}] += 1;
      } while (std::next_permutation(vv.begin(), vv.end()));
    } while (std::next_permutation(hv.begin(), hv.end()));
  }
  return out;
}

namespace detail {

// enumerate cycle types of N with at most max_distinct distinct part values
inline void cycle_types_bounded(int N, int max_distinct, std::vector<std::vector<int>>& out) {
  std::vector<std::pair<int, int>> parts;  // (value, multiplicity)
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      std::vector<int> type;
      for (auto [val, mult] : parts)
        for (int i = 0; i < mult; ++i) type.push_back(val);
      out.push_back(std::move(type));
      return;
    }
    if (static_cast<int>(parts.size()) == max_distinct) return;
    for (int val = std::min(remaining, max_part); val >= 1; --val) {
      for (int mult = 1; mult * val <= remaining; ++mult) {
        parts.push_back({val, mult});
        rec(remaining - mult * val, val - 1);
        parts.pop_back();
      }
    }
  };
  rec(N, N);
}

struct VSearch {
  const StratumSignature& target;
  int N;
  std::vector<int> h;        // h as image table
  std::vector<int> row_of;   // row index per square
  std::vector<int> row_start;
  std::vector<int> row_len;
  std::vector<int> positions;  // DFS order of squares (rows concatenated)
  int budget = 0;              // exact number of non-smooth squares
  std::vector<int> v;
  std::vector<bool> used;
  std::vector<bool> row_pinned;  // row holds an assigned target or a processed source
  std::function<void(const SquareTiledSurface&)> emit;

  void run() {
    v.assign(N, -1);
    used.assign(N, false);
    row_pinned.assign(row_start.size(), false);
    extend(0, 0);
  }

  // Candidate target values. Rows not pinned by any assignment are
  // interchangeable within their width class under the centralizer of h, so
  // only the first such row may be entered, and only at its start.
  std::vector<int> candidates() const {
    std::vector<int> c;
    std::map<int, int> width_seen;
    for (size_t r = 0; r < row_start.size(); ++r) {
      if (row_pinned[r]) {
        for (int i = row_start[r]; i < row_start[r] + row_len[r]; ++i)
          if (!used[i]) c.push_back(i);
      } else if (!width_seen.count(row_len[r])) {
        width_seen[row_len[r]] = 1;
        c.push_back(row_start[r]);
      }
    }
    return c;
  }

  void place(int pos, int idx, int value, int mismatches) {
    v[pos] = value;
    used[value] = true;
    bool pinned_before = row_pinned[row_of[value]];
    row_pinned[row_of[value]] = true;
    extend(idx + 1, mismatches);
    row_pinned[row_of[value]] = pinned_before;
    used[value] = false;
    v[pos] = -1;
  }

  void extend(int idx, int mismatches) {
    if (idx == N) {
      if (mismatches != budget) return;
      SquareTiledSurface surf{N, Permutation(h), Permutation(v)};
      if (!surf.transitive()) return;
      if (!(stratum_of_sts(surf) == target)) return;
      emit(surf);
      return;
    }
    int pos = positions[idx];
    int row = row_of[pos];
    bool row_first = pos == row_start[row];
    bool pinned_before = row_pinned[row];
    row_pinned[row] = true;  // the source row is no longer free to relabel
    if (!row_first) {
      // smoothness at the previous square forces h[v[prev]]; anything else
      // spends one unit of the mismatch budget
      int forced = h[v[pos - 1]];
      bool last_in_row = pos == row_start[row] + row_len[row] - 1;
      for (int value : candidates()) {
        int miss = mismatches + (value != forced ? 1 : 0);
        if (last_in_row && h[value] != v[row_start[row]]) ++miss;
        if (miss > budget) continue;
        place(pos, idx, value, miss);
      }
    } else {
      bool single = row_len[row] == 1;
      for (int value : candidates()) {
        int miss = mismatches;
        if (single && h[value] != value) ++miss;  // width-1 row closes on itself
        if (miss > budget) continue;
        place(pos, idx, value, miss);
      }
    }
    row_pinned[row] = pinned_before;
  }
};

}  // namespace detail

// Surfaces of the stratum with at most n_max squares, one representative per
// isomorphism class. h runs over cycle-type representatives; v is built row
// by row with the non-smooth square budget fixed by the stratum.
inline Census census_exhaustive(const StratumSignature& s, int n_max,
                                const std::function<void(const SquareTiledSurface&)>& visit = {}) {
  if (!s.abelian()) throw std::invalid_argument("census_exhaustive: Abelian strata only");
  if (n_max > 24) throw ResourceLimitError("census_exhaustive: square budget exceeded");
  Census out;
  int cylinder_bound = s.genus() + s.num_singularities() - 1;
  int support = 0;
  for (int m : s.orders()) support += m + 1;
  for (int N = support; N <= n_max; ++N) {
    std::vector<std::vector<int>> types;
    detail::cycle_types_bounded(N, cylinder_bound, types);
    std::unordered_set<std::string> seen;
    for (const auto& type : types) {
      detail::VSearch search{s, N, {}, {}, {}, {}, {}, 0, {}, {}, {}, {}};
      search.h.assign(N, 0);
      search.row_of.assign(N, 0);
      int at = 0;
      for (int len : type) {
        search.row_start.push_back(at);
        search.row_len.push_back(len);
        for (int i = 0; i < len; ++i) {
          search.h[at + i] = at + (i + 1) % len;
          search.row_of[at + i] = static_cast<int>(search.row_start.size()) - 1;
        }
        at += len;
      }
      search.positions.resize(N);
      std::iota(search.positions.begin(), search.positions.end(), 0);
      search.budget = support;
      search.emit = [&](const SquareTiledSurface& surf) {
        if (seen.insert(canonical_key(surf)).second) {
          out[{N, horizontal_cylinder_count(surf)}] += 1;
          if (visit) visit(surf);
        }
      };
      search.run();
    }
  }
  return out;
}

// least-squares fit of cumulative(N) ~ (c/2d) N^d over the top half of range
struct VolumeFit {
  double coefficient = 0;  // c
  double residual = 0;     // rms relative residual over the fitted points
};

inline VolumeFit volume_fit(const std::vector<std::pair<int, double>>& cumulative, int d) {
  if (cumulative.size() < 2) throw std::invalid_argument("volume_fit: insufficient data points");
  int n_max = 0;
  for (const auto& [N, c] : cumulative) n_max = std::max(n_max, N);
  double num = 0, den = 0;
  int used = 0;
  for (const auto& [N, cum] : cumulative) {
    if (N * 2 < n_max) continue;
    double x = std::pow(static_cast<double>(N), d);
    num += cum * x;
    den += x * x;
    ++used;
  }
  if (used < 2) throw std::invalid_argument("volume_fit: insufficient points in fit range");
  VolumeFit fit;
  double slope = num / den;
  fit.coefficient = slope * 2 * d;
  double ss = 0;
  for (const auto& [N, cum] : cumulative) {
    if (N * 2 < n_max) continue;
    double pred = slope * std::pow(static_cast<double>(N), d);
    if (cum > 0) ss += (pred - cum) * (pred - cum) / (cum * cum);
  }
  fit.residual = std::sqrt(ss / used);
  return fit;
}

}  // namespace mvol
