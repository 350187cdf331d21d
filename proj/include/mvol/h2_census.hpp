#pragma once

#include "mvol/square_tiled.hpp"

namespace mvol {

// Explicit constructions of the H(2) square-tiled surfaces from their two
// cylinder diagrams, with exact finite-N enumeration. These scale far beyond
// the generic census and are validated against it at small N.

// One-cylinder surface: boundary words (1 2 3 / 3 2 1) with saddle lengths
// l1, l2, l3, cylinder height ht and twist phi in [0, w).
inline SquareTiledSurface h2_one_cylinder(int l1, int l2, int l3, int ht, int phi) {
  int w = l1 + l2 + l3;
  int N = w * ht;
  std::vector<int> hv(N), vv(N);
  auto idx = [&](int x, int y) { return y * w + x; };
  for (int y = 0; y < ht; ++y)
    for (int x = 0; x < w; ++x) hv[idx(x, y)] = idx((x + 1) % w, y);
  // boundary identification: top arcs (1,2,3), bottom arcs (3,2,1)
  auto T = [&](int x) {
    if (x < l1) return l3 + l2 + x;           // saddle 1
    if (x < l1 + l2) return l3 + (x - l1);    // saddle 2
    return x - l1 - l2;                       // saddle 3
  };
  for (int y = 0; y + 1 < ht; ++y)
    for (int x = 0; x < w; ++x) vv[idx(x, y)] = idx(x, y + 1);
  for (int x = 0; x < w; ++x) vv[idx(x, ht - 1)] = idx((T(x) + phi) % w, 0);
  return {N, Permutation(std::move(hv)), Permutation(std::move(vv))};
}

// Two-cylinder surface: cylinder C1 of width a over saddle 1, cylinder C2 of
// width a+b whose top boundary is (saddle 1)(saddle 2) and whose bottom is
// (saddle 3)(saddle 2); twists phi1 in [0,a), phi2 in [0,a+b).
inline SquareTiledSurface h2_two_cylinder(int a, int b, int h1, int h2, int phi1, int phi2) {
  int w2 = a + b;
  int N = a * h1 + w2 * h2;
  int off = a * h1;  // C2 squares start here
  std::vector<int> hv(N), vv(N);
  auto c1 = [&](int x, int y) { return y * a + x; };
  auto c2 = [&](int x, int y) { return off + y * w2 + x; };
  for (int y = 0; y < h1; ++y)
    for (int x = 0; x < a; ++x) hv[c1(x, y)] = c1((x + 1) % a, y);
  for (int y = 0; y < h2; ++y)
    for (int x = 0; x < w2; ++x) hv[c2(x, y)] = c2((x + 1) % w2, y);
  for (int y = 0; y + 1 < h1; ++y)
    for (int x = 0; x < a; ++x) vv[c1(x, y)] = c1(x, y + 1);
  for (int y = 0; y + 1 < h2; ++y)
    for (int x = 0; x < w2; ++x) vv[c2(x, y)] = c2(x, y + 1);
  // top of C2: saddle 1 on [0,a) enters C1, saddle 2 on [a,w2) re-enters C2
  for (int x = 0; x < w2; ++x) {
    if (x < a)
      vv[c2(x, h2 - 1)] = c1((x + phi1) % a, 0);
    else
      vv[c2(x, h2 - 1)] = c2((x + phi2) % w2, 0);
  }
  // top of C1 is saddle 3, glued to [0,a) of the bottom of C2
  for (int x = 0; x < a; ++x) vv[c1(x, h1 - 1)] = c2((x + phi2) % w2, 0);
  return {N, Permutation(std::move(hv)), Permutation(std::move(vv))};
}

struct H2CensusResult {
  Census census;  // (N, horizontal cylinders) -> count
  std::map<std::pair<int, int>, long long> joint;  // (horizontal, vertical) counts
  long long total = 0;
};

// Enumerate all H(2) square-tiled surfaces with at most n_max squares, one
// representative per isomorphism class (deduplicated per diagram family).
inline H2CensusResult h2_census(int n_max, bool with_vertical = false) {
  H2CensusResult result;
  auto h2 = StratumSignature::parse("H(2)");
  // one-cylinder family
  for (int ht = 1; ht <= n_max / 3; ++ht) {
    for (int w = 3; w * ht <= n_max; ++w) {
      int N = w * ht;
      std::unordered_set<std::string> seen;
      for (int l1 = 1; l1 <= w - 2; ++l1)
        for (int l2 = 1; l2 <= w - l1 - 1; ++l2) {
          int l3 = w - l1 - l2;
          for (int phi = 0; phi < w; ++phi) {
            auto surf = h2_one_cylinder(l1, l2, l3, ht, phi);
            if (!(stratum_of_sts(surf) == h2)) throw std::logic_error("h2_census: bad 1-cylinder gluing");
            if (!seen.insert(canonical_key(surf)).second) continue;
            result.census[{N, 1}] += 1;
            result.total += 1;
            if (with_vertical) result.joint[{1, vertical_cylinder_count(surf)}] += 1;
          }
        }
    }
  }
  // two-cylinder family
  for (int a = 1; a <= n_max; ++a)
    for (int b = 1; a + b <= n_max; ++b)
      for (int h1 = 1; a * h1 <= n_max; ++h1)
        for (int h2v = 1; a * h1 + (a + b) * h2v <= n_max; ++h2v) {
          int N = a * h1 + (a + b) * h2v;
          std::unordered_set<std::string> seen;
          for (int phi1 = 0; phi1 < a; ++phi1)
            for (int phi2 = 0; phi2 < a + b; ++phi2) {
              auto surf = h2_two_cylinder(a, b, h1, h2v, phi1, phi2);
              if (!(stratum_of_sts(surf) == h2)) throw std::logic_error("h2_census: bad 2-cylinder gluing");
              if (!seen.insert(canonical_key(surf)).second) continue;
              result.census[{N, 2}] += 1;
              result.total += 1;
              if (with_vertical) result.joint[{2, vertical_cylinder_count(surf)}] += 1;
            }
        }
  return result;
}

// cumulative counts per N, optionally restricted to a cylinder count
inline std::vector<std::pair<int, double>> cumulative_counts(const Census& census, int n_max,
                                                             int cylinders = 0) {
  std::vector<std::pair<int, double>> out;
  double running = 0;
  std::map<int, double> per_n;
  for (const auto& [key, count] : census)
    if (cylinders == 0 || key.second == cylinders) per_n[key.first] += static_cast<double>(count);
  for (int N = 1; N <= n_max; ++N) {
    running += per_n.count(N) ? per_n[N] : 0.0;
    out.push_back({N, running});
  }
  return out;
}

}  // namespace mvol
