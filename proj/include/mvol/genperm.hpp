#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvol/stratum.hpp"

namespace mvol {

class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Two rows of symbols, every symbol appearing exactly twice in top+bottom.
// Ordinary permutations (every symbol once per row) are the special case
// describing interval exchange transformations; the general case describes
// linear involutions.
struct GeneralizedPermutation {
  std::vector<int> top;
  std::vector<int> bottom;

  int num_symbols() const {
    int mx = -1;
    for (int s : top) mx = std::max(mx, s);
    for (int s : bottom) mx = std::max(mx, s);
    return mx + 1;
  }

  bool is_ordinary() const {
    if (top.size() != bottom.size()) return false;
    std::vector<int> cnt_top(num_symbols(), 0), cnt_bot(num_symbols(), 0);
    for (int s : top) ++cnt_top[s];
    for (int s : bottom) ++cnt_bot[s];
    for (int s = 0; s < num_symbols(); ++s) {
      if (cnt_top[s] == 0 && cnt_bot[s] == 0) continue;
      if (cnt_top[s] != 1 || cnt_bot[s] != 1) return false;
    }
    return true;
  }

  // top-left and bottom-right symbols coincide
  bool is_standard() const {
    return !top.empty() && !bottom.empty() && top.front() == bottom.back();
  }

  // each symbol exactly twice; neither row's symbol set strictly contained in
  // the other's; both rows nonempty
  bool is_valid() const {
    if (top.empty() || bottom.empty()) return false;
    int n = num_symbols();
    std::vector<int> cnt(n, 0);
    std::vector<bool> in_top(n, false), in_bot(n, false);
    for (int s : top) {
      if (s < 0) return false;
      ++cnt[s];
      in_top[s] = true;
    }
    for (int s : bottom) {
      if (s < 0) return false;
      ++cnt[s];
      in_bot[s] = true;
    }
    for (int s = 0; s < n; ++s)
      if (cnt[s] != 0 && cnt[s] != 2) return false;
    bool top_sub = true, bot_sub = true, equal = true;
    for (int s = 0; s < n; ++s) {
      if (in_top[s] && !in_bot[s]) { top_sub = false; equal = false; }
      if (in_bot[s] && !in_top[s]) { bot_sub = false; equal = false; }
    }
    if (!equal && (top_sub || bot_sub)) return false;
    return true;
  }

  // classical irreducibility test; meaningful for ordinary permutations
  bool is_irreducible() const {
    if (!is_ordinary()) return true;
    size_t d = top.size();
    std::set<int> ts, bs;
    for (size_t k = 0; k + 1 < d; ++k) {
      ts.insert(top[k]);
      bs.insert(bottom[k]);
      if (ts == bs) return false;
    }
    return true;
  }

  // relabel symbols in order of first appearance, top row first
  GeneralizedPermutation canonicalized() const {
    std::vector<int> relabel(num_symbols(), -1);
    int next = 0;
    GeneralizedPermutation r = *this;
    for (int& s : r.top) {
      if (relabel[s] < 0) relabel[s] = next++;
      s = relabel[s];
    }
    for (int& s : r.bottom) {
      if (relabel[s] < 0) relabel[s] = next++;
      s = relabel[s];
    }
    return r;
  }

  std::string encode() const {
    std::string key;
    key.reserve(top.size() + bottom.size() + 1);
    for (int s : top) key.push_back(static_cast<char>(s + 1));
    key.push_back('\0');
    for (int s : bottom) key.push_back(static_cast<char>(s + 1));
    return key;
  }

  friend bool operator==(const GeneralizedPermutation&, const GeneralizedPermutation&) = default;
  friend auto operator<=>(const GeneralizedPermutation&, const GeneralizedPermutation&) = default;

  // text form: symbols separated by spaces, rows separated by '/'
  std::string to_text() const {
    std::ostringstream os;
    for (size_t i = 0; i < top.size(); ++i) os << (i ? " " : "") << top[i];
    os << " / ";
    for (size_t i = 0; i < bottom.size(); ++i) os << (i ? " " : "") << bottom[i];
    return os.str();
  }

  static GeneralizedPermutation parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("permutation: expected '/'");
    auto read_row = [](const std::string& part) {
      std::istringstream is(part);
      std::vector<int> row;
      int v;
      while (is >> v) row.push_back(v);
      return row;
    };
    GeneralizedPermutation p{read_row(text.substr(0, slash)), read_row(text.substr(slash + 1))};
    if (!p.is_valid()) throw std::invalid_argument("permutation: invalid two-row data");
    return p;
  }
};

// Cyclic boundary words of the 1-cylinder diagram encoded by a standard
// permutation: the distinguished marker symbol (top-left = bottom-right) is
// removed from both rows.
struct CylinderWords {
  std::vector<int> top;
  std::vector<int> bottom;
};

inline CylinderWords marker_dropped(const GeneralizedPermutation& p) {
  if (!p.is_standard()) throw std::invalid_argument("marker_dropped: permutation not standard");
  CylinderWords w;
  w.top.assign(p.top.begin() + 1, p.top.end());
  w.bottom.assign(p.bottom.begin(), p.bottom.end() - 1);
  int marker = p.top.front();
  // the marker occurs exactly at top[0] and bottom[last] for the encodings we
  // produce; reject anything else
  for (int s : w.top)
    if (s == marker) throw std::invalid_argument("marker_dropped: marker reappears in top row");
  for (int s : w.bottom)
    if (s == marker) throw std::invalid_argument("marker_dropped: marker reappears in bottom row");
  if (w.top.empty() || w.bottom.empty())
    throw std::invalid_argument("marker_dropped: empty boundary word");
  return w;
}

// Rebuild the canonical standard permutation from cylinder words.
inline GeneralizedPermutation with_marker(const CylinderWords& w) {
  GeneralizedPermutation p;
  int marker = 0;
  for (int s : w.top) marker = std::max(marker, s + 1);
  for (int s : w.bottom) marker = std::max(marker, s + 1);
  p.top.push_back(marker);
  p.top.insert(p.top.end(), w.top.begin(), w.top.end());
  p.bottom = w.bottom;
  p.bottom.push_back(marker);
  return p.canonicalized();
}

struct LmnType {
  int l = 0;  // saddle connections appearing once on each boundary component
  int m = 0;  // doubled on top
  int n = 0;  // doubled on bottom
};

inline LmnType lmn_of(const GeneralizedPermutation& p) {
  CylinderWords w = marker_dropped(p);
  int nsym = 0;
  for (int s : w.top) nsym = std::max(nsym, s + 1);
  for (int s : w.bottom) nsym = std::max(nsym, s + 1);
  std::vector<int> in_top(nsym, 0), in_bot(nsym, 0);
  for (int s : w.top) ++in_top[s];
  for (int s : w.bottom) ++in_bot[s];
  LmnType t;
  for (int s = 0; s < nsym; ++s) {
    if (in_top[s] == 1 && in_bot[s] == 1) ++t.l;
    else if (in_top[s] == 2) ++t.m;
    else if (in_bot[s] == 2) ++t.n;
  }
  return t;
}

namespace detail {
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace detail

// Singularity data of the closed surface obtained by gluing the cylinder
// boundary. Boundary subdivision points are traced through the edge
// identifications; the valence of a vertex equals the number of boundary
// points in its class. Order 0 entries are marked regular points.
inline StratumSignature stratum_of_standard(const GeneralizedPermutation& p) {
  CylinderWords w = marker_dropped(p);
  int pl = static_cast<int>(w.top.size());
  int ql = static_cast<int>(w.bottom.size());
  int nsym = 0;
  for (int s : w.top) nsym = std::max(nsym, s + 1);
  for (int s : w.bottom) nsym = std::max(nsym, s + 1);

  // occurrences: row 0 = top arc index, row 1 = bottom arc index
  std::vector<std::vector<std::pair<int, int>>> occ(nsym);
  for (int i = 0; i < pl; ++i) occ[w.top[i]].push_back({0, i});
  for (int j = 0; j < ql; ++j) occ[w.bottom[j]].push_back({1, j});

  // points: top subdivision points 0..pl-1 (point i = left end of arc i),
  // bottom points pl..pl+ql-1
  detail::Dsu dsu(pl + ql);
  auto tl = [&](int i) { return i; };
  auto tr = [&](int i) { return (i + 1) % pl; };
  auto bl = [&](int j) { return pl + j; };
  auto br = [&](int j) { return pl + (j + 1) % ql; };

  bool ordinary = true;
  for (int s = 0; s < nsym; ++s) {
    if (occ[s].empty()) continue;
    if (occ[s].size() != 2) throw std::invalid_argument("stratum_of_standard: bad word pair");
    auto [r1, i1] = occ[s][0];
    auto [r2, i2] = occ[s][1];
    if (r1 == 0 && r2 == 1) {
      // shared saddle connection, glued by translation
      dsu.unite(tl(i1), bl(i2));
      dsu.unite(tr(i1), br(i2));
    } else if (r1 == 0 && r2 == 0) {
      ordinary = false;  // doubled on top, glued with a flip
      dsu.unite(tl(i1), tr(i2));
      dsu.unite(tr(i1), tl(i2));
    } else {
      ordinary = false;  // doubled on bottom
      dsu.unite(bl(i1), br(i2));
      dsu.unite(br(i1), bl(i2));
    }
  }

  std::vector<int> valence(pl + ql, 0);
  for (int x = 0; x < pl + ql; ++x) ++valence[dsu.find(x)];
  std::vector<int> orders;
  for (int x = 0; x < pl + ql; ++x) {
    if (valence[x] == 0) continue;
    if (ordinary) {
      if (valence[x] % 2 != 0) throw std::logic_error("stratum_of_standard: odd valence on oriented diagram");
      orders.push_back(valence[x] / 2 - 1);
    } else {
      orders.push_back(valence[x] - 2);
    }
  }
  return StratumSignature(ordinary ? DiffKind::Abelian : DiffKind::Quadratic, std::move(orders));
}

// All standard permutations representing the same 1-cylinder separatrix
// diagram: rotate the markings of the two boundary components independently,
// and for non-orientable diagrams also exchange top and bottom.
inline std::set<GeneralizedPermutation> diagram_orbit(const GeneralizedPermutation& p) {
  CylinderWords w = marker_dropped(p);
  bool quadratic = !p.is_ordinary();
  std::set<GeneralizedPermutation> orbit;
  auto rotate = [](const std::vector<int>& v, size_t r) {
    std::vector<int> out(v.begin() + r, v.end());
    out.insert(out.end(), v.begin(), v.begin() + r);
    return out;
  };
  for (int swap_rows = 0; swap_rows < (quadratic ? 2 : 1); ++swap_rows) {
    CylinderWords base = w;
    if (swap_rows) std::swap(base.top, base.bottom);
    for (size_t rt = 0; rt < base.top.size(); ++rt) {
      for (size_t rb = 0; rb < base.bottom.size(); ++rb) {
        CylinderWords rotated{rotate(base.top, rt), rotate(base.bottom, rb)};
        orbit.insert(with_marker(rotated));
      }
    }
  }
  return orbit;
}

}  // namespace mvol
