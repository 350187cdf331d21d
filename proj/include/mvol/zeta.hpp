#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mvol/rational.hpp"

namespace mvol {

// Bernoulli numbers B_0, B_1, ... (B_1 = -1/2), exact.
inline Rational bernoulli(int n) {
  static std::vector<Rational> cache;
  if (n < 0) throw std::invalid_argument("bernoulli: n >= 0");
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    if (m == 0) {
      cache.push_back(Rational(1));
      continue;
    }
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    Rational sum;
    for (int k = 0; k < m; ++k) sum += Rational(BigInt::binomial(m + 1, k)) * cache[k];
    cache.push_back(-sum / Rational(BigInt(m + 1)));
  }
  return cache[n];
}

// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!), returned as the
// rational multiplier of pi^{2k}.
inline Rational zeta_even_pi_coefficient(int two_k) {
  if (two_k < 2 || two_k % 2 != 0) throw std::invalid_argument("zeta_even_pi_coefficient: even k >= 2");
  int k = two_k / 2;
  Rational c = bernoulli(two_k) * Rational(BigInt::pow(BigInt(2), two_k), BigInt(2) * BigInt::factorial(two_k));
  return (k % 2 == 0) ? -c : c;
}

// Euler--Maclaurin evaluation of zeta(s) for integer s >= 2:
// sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2 + correction terms.
inline double zeta_numeric(int s, double precision = 1e-14, int series_length = 64) {
  if (s < 2) throw std::invalid_argument("zeta_numeric: s >= 2");
  (void)precision;
  const int N = series_length;
  double sum = 0;
  for (int n = 1; n < N; ++n) sum += std::pow(static_cast<double>(n), -s);
  double Nd = N;
  sum += std::pow(Nd, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(Nd, -s);
  // Bernoulli tail: sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  double factor = std::pow(Nd, -s - 1) * s;
  static const double b2k_over_fact[] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600, 1.0 / 47900160};
  for (int k = 1; k <= 5; ++k) {
    sum += b2k_over_fact[k - 1] * factor;
    factor *= (s + 2.0 * k - 1) * (s + 2.0 * k) / (Nd * Nd);
  }
  return sum;
}

// Multiple zeta value in the convention of the volume computations:
// zeta(a_1, ..., a_k) = sum over n_1 < n_2 < ... < n_k of
// n_1^{-a_1} ... n_k^{-a_k}; converges when the last argument is >= 2.
// Nested truncated sums with an integral tail estimate on the outer index.
inline double mzv_numeric(const std::vector<int>& args, double precision = 1e-9) {
  if (args.empty()) throw std::invalid_argument("mzv_numeric: empty argument list");
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] < 1 || (i + 1 == args.size() && args[i] < 2))
      throw std::invalid_argument("mzv_numeric: divergent argument pattern");
  }
  if (args.size() == 1) return zeta_numeric(args[0]);

  int depth = static_cast<int>(args.size());
  int outer = args.back();
  // truncation error of the outer sum ~ log^{depth-1}(N) / ((a_k-1) N^{a_k-1});
  // the streaming pass is O(depth) memory so N can be generous
  long long N = 1L << 14;
  auto tail_bound = [&](long long M) {
    double lg = std::log(static_cast<double>(M)) + 1.0;
    return std::pow(lg, depth - 1) / ((outer - 1) * std::pow(static_cast<double>(M), outer - 1));
  };
  long long cap = depth >= 3 ? 20'000'000 : 4'000'000;
  while (N < cap && tail_bound(N) > precision / 8) N *= 2;

  // prefix[j] holds the depth-j partial sum over indices n_1 < ... < n_j <= n;
  // updating deep levels first keeps prefix[j-1] at its (n-1) value
  std::vector<double> prefix(depth + 1, 0.0);
  for (long long n = 1; n <= N; ++n) {
    double inv = 1.0 / static_cast<double>(n);
    for (int level = depth; level >= 2; --level) {
      double p = 1.0;
      for (int e = 0; e < args[level - 1]; ++e) p *= inv;
      prefix[level] += prefix[level - 1] * p;
    }
    double p = 1.0;
    for (int e = 0; e < args[0]; ++e) p *= inv;
    prefix[1] += p;
  }
  // analytic outer tail: the inner prefix is nearly constant past N for
  // convergent inner sums, so sum_{n>N} inner(n) n^{-a} ~ inner(N) * zeta tail
  double Nd = static_cast<double>(N);
  double zeta_tail = std::pow(Nd, 1.0 - outer) / (outer - 1.0) + 0.5 * std::pow(Nd, -outer);
  return prefix[depth] + prefix[depth - 1] * zeta_tail;
}

}  // namespace mvol
