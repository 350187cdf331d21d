#pragma once

#include <numeric>

#include "mvol/genperm.hpp"

namespace mvol {

// Interval exchange transformation (ordinary permutation) or linear
// involution (generalized permutation) with positive integer lengths,
// indexed by symbol.
struct IntegerIET {
  GeneralizedPermutation perm;
  std::vector<long long> lengths;

  long long top_width() const {
    long long w = 0;
    for (int s : perm.top) w += lengths[s];
    return w;
  }
  long long bottom_width() const {
    long long w = 0;
    for (int s : perm.bottom) w += lengths[s];
    return w;
  }

  bool valid() const {
    if (static_cast<int>(lengths.size()) < perm.num_symbols()) return false;
    for (int s : perm.top)
      if (lengths[s] <= 0) return false;
    for (int s : perm.bottom)
      if (lengths[s] <= 0) return false;
    return perm.is_ordinary() || top_width() == bottom_width();
  }
};

namespace detail {

struct ArcLayout {
  // per symbol: (row, start) of each of its two occurrences; row 0 = top
  std::vector<std::array<std::pair<int, long long>, 2>> occ;
  std::vector<int> occ_count;
  std::vector<int> top_arc_at;     // arc symbol covering each unit cell, top layout
  std::vector<long long> top_start_at;
  std::vector<int> bot_arc_at;
  std::vector<long long> bot_start_at;
};

inline ArcLayout layout_of(const IntegerIET& t) {
  ArcLayout L;
  int nsym = t.perm.num_symbols();
  L.occ.resize(nsym);
  L.occ_count.assign(nsym, 0);
  long long W = t.top_width();
  L.top_arc_at.resize(W);
  L.top_start_at.resize(W);
  L.bot_arc_at.resize(W);
  L.bot_start_at.resize(W);
  long long pos = 0;
  for (int s : t.perm.top) {
    L.occ[s][L.occ_count[s]++] = {0, pos};
    for (long long u = 0; u < t.lengths[s]; ++u) {
      L.top_arc_at[pos + u] = s;
      L.top_start_at[pos + u] = pos;
    }
    pos += t.lengths[s];
  }
  pos = 0;
  for (int s : t.perm.bottom) {
    L.occ[s][L.occ_count[s]++] = {1, pos};
    for (long long u = 0; u < t.lengths[s]; ++u) {
      L.bot_arc_at[pos + u] = s;
      L.bot_start_at[pos + u] = pos;
    }
    pos += t.lengths[s];
  }
  return L;
}

}  // namespace detail

// Number of bands of parallel closed trajectories of the integer IET/linear
// involution. Unit cells c, c+1 belong to one band when their orbits under
// the first-return map stay adjacent forever; for linear involutions the
// count is taken on the orientation double cover with the deck involution
// identifying paired bands.
inline int band_count(const IntegerIET& t, long long width_cap = 4'000'000) {
  if (!t.valid()) throw std::invalid_argument("band_count: invalid data");
  long long W = t.top_width();
  if (W > width_cap) throw ResourceLimitError("band_count: total width beyond budget");
  bool ordinary = t.perm.is_ordinary();
  auto L = detail::layout_of(t);

  long long cells = ordinary ? W : 2 * W;
  std::vector<long long> next(cells);
  if (ordinary) {
    for (long long x = 0; x < W; ++x) {
      int s = L.top_arc_at[x];
      long long u = x - L.top_start_at[x];
      next[x] = L.occ[s][1].second + u;  // occ[0] top, occ[1] bottom
    }
  } else {
    // up states [0, W): crossing the top layout; down states [W, 2W)
    for (long long x = 0; x < W; ++x) {
      int s = L.top_arc_at[x];
      long long u = x - L.top_start_at[x];
      auto [r0, p0] = L.occ[s][0];
      auto [r1, p1] = L.occ[s][1];
      long long self = L.top_start_at[x];
      if (r0 == 0 && r1 == 1) {
        next[x] = p1 + u;  // translation to the bottom copy, keep going up
      } else if (r0 == 1 && r1 == 0) {
        next[x] = p0 + u;
      } else {
        // doubled on top: flip to the twin arc, now moving down
        long long twin = (p0 == self) ? p1 : p0;
        next[x] = W + twin + (t.lengths[s] - 1 - u);
      }
    }
    for (long long x = 0; x < W; ++x) {
      int s = L.bot_arc_at[x];
      long long u = x - L.bot_start_at[x];
      auto [r0, p0] = L.occ[s][0];
      auto [r1, p1] = L.occ[s][1];
      long long self = L.bot_start_at[x];
      if (r0 == 0 && r1 == 1) {
        next[W + x] = W + p0 + u;  // translation to the top copy, keep going down
      } else if (r0 == 1 && r1 == 0) {
        next[W + x] = W + p1 + u;
      } else {
        long long twin = (p0 == self) ? p1 : p0;
        next[W + x] = twin + (t.lengths[s] - 1 - u);
      }
    }
  }

  // arc id per cell: the occurrence of the symbol whose crossing the cell is
  // about to make; adjacent leaves stay parallel exactly while they keep
  // crossing the same arcs (a flip gluing swaps their sides, so adjacency is
  // tracked up to sign)
  std::vector<long long> arc_id(cells);
  for (long long x = 0; x < W; ++x) arc_id[x] = L.top_start_at[x];
  if (!ordinary)
    for (long long x = 0; x < W; ++x) arc_id[W + x] = W + L.bot_start_at[x];

  detail::Dsu dsu(static_cast<int>(cells));
  // all cells of one orbit belong to one band
  for (long long c = 0; c < cells; ++c) dsu.unite(static_cast<int>(c), static_cast<int>(next[c]));
  for (long long c = 0; c < cells; ++c) {
    long long base = c < W ? 0 : W;
    if (c - base + 1 >= W) continue;
    long long d = c + 1;
    if (dsu.find(static_cast<int>(c)) == dsu.find(static_cast<int>(d))) continue;
    long long x = c, y = d;
    bool parallel = true;
    do {
      // ordinary case: P^k(c)+1 = P^k(c+1) throughout (safe across marked
      // points); generalized case: the pair keeps crossing the same arc
      bool ok = ordinary ? (y == x + 1) : (arc_id[x] == arc_id[y]);
      if (!ok) {
        parallel = false;
        break;
      }
      x = next[x];
      y = next[y];
    } while (!(x == c && y == d) && !(x == d && y == c));
    if (parallel) dsu.unite(static_cast<int>(c), static_cast<int>(d));
  }
  if (!ordinary) {
    // deck-involution partners represent the same band downstairs
    for (long long x = 0; x < W; ++x) dsu.unite(static_cast<int>(x), static_cast<int>(W + x));
  }
  std::set<int> roots;
  for (long long c = 0; c < cells; ++c) roots.insert(dsu.find(static_cast<int>(c)));
  return static_cast<int>(roots.size());
}

// Free length coordinates. The lengths of a linear involution satisfy one
// relation, sum over top-doubled symbols = sum over bottom-doubled symbols;
// any single symbol of either side can serve as the dependent coordinate.
// Taking it from the smaller side keeps the admissible fraction of the grid
// large (when that side is a single symbol, every draw is admissible).
struct FreeCoordinates {
  std::vector<int> free_symbols;
  std::vector<int> plus_side;   // doubled symbols on the dependent's side, dependent excluded
  std::vector<int> minus_side;  // doubled symbols on the other side
  int dependent = -1;           // -1 for ordinary permutations
};

inline FreeCoordinates free_coordinates(const GeneralizedPermutation& p) {
  FreeCoordinates fc;
  int nsym = p.num_symbols();
  std::vector<int> top_count(nsym, 0), bot_count(nsym, 0);
  for (int s : p.top) ++top_count[s];
  for (int s : p.bottom) ++bot_count[s];
  std::vector<int> top_doubled, bot_doubled;
  for (int s = 0; s < nsym; ++s) {
    if (top_count[s] == 2) top_doubled.push_back(s);
    if (bot_count[s] == 2) bot_doubled.push_back(s);
  }
  if (!top_doubled.empty() && !bot_doubled.empty()) {
    bool from_top = top_doubled.size() <= bot_doubled.size();
    auto& dep_side = from_top ? top_doubled : bot_doubled;
    auto& other_side = from_top ? bot_doubled : top_doubled;
    fc.dependent = dep_side.front();
    fc.plus_side.assign(dep_side.begin() + 1, dep_side.end());
    fc.minus_side = other_side;
  }
  for (int s = 0; s < nsym; ++s) {
    if (s == fc.dependent) continue;
    if (top_count[s] + bot_count[s] > 0) fc.free_symbols.push_back(s);
  }
  return fc;
}

// Solves the dependent coordinate; false when it is not strictly positive.
inline bool solve_dependent(const GeneralizedPermutation& p, const FreeCoordinates& fc,
                            std::vector<long long>& lengths) {
  (void)p;
  if (fc.dependent < 0) return true;
  long long dep = 0;
  for (int s : fc.minus_side) dep += lengths[s];
  for (int s : fc.plus_side) dep -= lengths[s];
  if (dep <= 0) return false;
  lengths[fc.dependent] = dep;
  return true;
}

}  // namespace mvol
