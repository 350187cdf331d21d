#pragma once

#include <thread>

#include "mvol/diagrams.hpp"
#include "mvol/h2_census.hpp"
#include "mvol/iet.hpp"
#include "mvol/rng.hpp"

namespace mvol {

struct BandStatistics {
  std::map<int, long long> histogram;  // bands -> count
  long long total = 0;
  long long attempted = 0;  // includes rejected dependent-coordinate draws
  uint64_t seed = 0;
  long long grid = 0;
  long long samples = 0;
  long long walk = 0;

  double proportion(int k) const {
    auto it = histogram.find(k);
    return total == 0 || it == histogram.end() ? 0.0
                                               : static_cast<double>(it->second) / static_cast<double>(total);
  }
  double stderr_of(int k) const {
    double p = proportion(k);
    return total == 0 ? 0.0 : std::sqrt(p * (1 - p) / static_cast<double>(total));
  }

  void merge(const BandStatistics& other) {
    for (const auto& [k, c] : other.histogram) histogram[k] += c;
    total += other.total;
    attempted += other.attempted;
  }
};

// Exhaustive grid: all length vectors in {1..L}^free, dependent coordinate
// solved and required positive.
inline BandStatistics pk_exhaustive(const GeneralizedPermutation& perm, long long L) {
  BandStatistics stats;
  stats.grid = L;
  auto fc = free_coordinates(perm);
  int nfree = static_cast<int>(fc.free_symbols.size());
  if (nfree * std::log(static_cast<double>(L)) > std::log(2e9))
    throw ResourceLimitError("pk_exhaustive: grid beyond budget");
  std::vector<long long> lengths(perm.num_symbols(), 1);
  std::vector<long long> idx(nfree, 1);
  for (;;) {
    for (int i = 0; i < nfree; ++i) lengths[fc.free_symbols[i]] = idx[i];
    ++stats.attempted;
    if (solve_dependent(perm, fc, lengths)) {
      ++stats.total;
      ++stats.histogram[band_count({perm, lengths})];
    }
    int i = 0;
    while (i < nfree && ++idx[i] > L) idx[i++] = 1;
    if (i == nfree) break;
  }
  return stats;
}

inline BandStatistics pk_exhaustive(const StratumSignature& s, long long L) {
  return pk_exhaustive(representative(s), L);
}

// Random Rauzy walk of length uniform in [walk/2, walk], then a uniform
// admissible length vector in {1..L}^free; rejected draws are skipped and
// reported through `attempted`.
inline BandStatistics pk_random(const StratumSignature& s, long long samples, long long walk,
                                long long L, uint64_t seed, int threads = 1) {
  GeneralizedPermutation rep = representative(s);
  auto run_chain = [&](int chain, long long chunk) {
    BandStatistics stats;
    Rng rng(seed, static_cast<uint64_t>(chain));
    while (stats.total < chunk) {
      GeneralizedPermutation p = rep;
      long long steps = walk == 0 ? 0 : rng.range(walk / 2, walk);
      for (long long i = 0; i < steps; ++i) {
        MoveKind kind = static_cast<MoveKind>(rng.below(4));
        auto q = rauzy_move(p, kind);
        if (q) p = std::move(*q);
      }
      auto fc = free_coordinates(p);
      std::vector<long long> lengths(p.num_symbols(), 1);
      for (int sfree : fc.free_symbols) lengths[sfree] = rng.range(1, L);
      ++stats.attempted;
      if (!solve_dependent(p, fc, lengths)) continue;
      ++stats.total;
      ++stats.histogram[band_count({p, lengths})];
    }
    return stats;
  };
  BandStatistics stats;
  stats.seed = seed;
  stats.grid = L;
  stats.samples = samples;
  stats.walk = walk;
  if (threads <= 1) {
    stats.merge(run_chain(0, samples));
    return stats;
  }
  std::vector<BandStatistics> parts(threads);
  std::vector<std::thread> pool;
  long long chunk = (samples + threads - 1) / threads;
  for (int c = 0; c < threads; ++c)
    pool.emplace_back([&, c]() { parts[c] = run_chain(c, std::min(chunk, samples - c * chunk)); });
  for (auto& th : pool) th.join();
  for (const auto& part : parts) stats.merge(part);
  return stats;
}

// Joint horizontal/vertical cylinder-count frequencies over all surfaces of
// the stratum with at most N squares, and the deviation from independence.
struct UncorrelatednessReport {
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> marginal_h;
  std::map<int, double> marginal_v;
  double max_deviation = 0;
  long long surfaces = 0;
};

inline UncorrelatednessReport uncorrelatedness_report(const StratumSignature& s, int n_max) {
  std::map<std::pair<int, int>, long long> counts;
  long long total = 0;
  if (s == StratumSignature::parse("H(2)")) {
    auto res = h2_census(n_max, true);
    counts = res.joint;
    total = res.total;
  } else {
    census_exhaustive(s, n_max, [&](const SquareTiledSurface& surf) {
      ++counts[{horizontal_cylinder_count(surf), vertical_cylinder_count(surf)}];
      ++total;
    });
  }
  if (total == 0) throw std::invalid_argument("uncorrelatedness_report: no surfaces at this size");
  UncorrelatednessReport r;
  r.surfaces = total;
  for (const auto& [key, c] : counts) {
    double p = static_cast<double>(c) / static_cast<double>(total);
    r.joint[key] = p;
    r.marginal_h[key.first] += p;
    r.marginal_v[key.second] += p;
  }
  for (const auto& [key, p] : r.joint) {
    double dev = std::abs(p - r.marginal_h[key.first] * r.marginal_v[key.second]);
    r.max_deviation = std::max(r.max_deviation, dev);
  }
  return r;
}

}  // namespace mvol
