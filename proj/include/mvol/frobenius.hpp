#pragma once

#include "mvol/rational.hpp"
#include "mvol/stratum.hpp"

namespace mvol {

// N(S_n; C(sigma), C(sigma), C(t)): number of solutions of c1 c2 c3 = 1 with
// c1, c2 n-cycles and c3 of cycle type t, via the character sum
//   |C(t)|/n * sum_j j! (n-1-j)! chi_j(t).
inline BigInt triple_count(int n, const CycleType& t) {
  if (t.total() != n) throw std::invalid_argument("triple_count: type does not sum to n");
  auto chi = exterior_characters(n, t);
  BigInt sum(0);
  for (int j = 0; j < n; ++j)
    sum += BigInt::factorial(j) * BigInt::factorial(n - 1 - j) * chi[j];
  BigInt total = conjugacy_class_size(n, t) * sum;
  auto [q, r] = BigInt::divmod(total, BigInt(n));
  if (!r.is_zero()) throw std::logic_error("triple_count: character sum not divisible by n");
  return q;
}

// Weighted number of 1-cylinder diagrams for a cycle type: sum over diagrams
// of 1/|Gamma(D)| = N(S_n;C,C,C(t)) / n!.
inline Rational weighted_one_cyl_count_type(int n, const CycleType& t) {
  return Rational(triple_count(n, t), BigInt::factorial(n));
}

inline Rational weighted_one_cyl_count(const StratumSignature& s) {
  if (!s.abelian()) throw std::invalid_argument("weighted_one_cyl_count: Abelian strata only");
  return weighted_one_cyl_count_type(s.frobenius_n(), s.frobenius_type());
}

// Closed form for the minimal stratum H(2g-2): n = 2g-1 and
// N(S_n;C,C,C) = 2((n-1)!)^2/(n+1), so the weighted count is 2(n-1)!/(n(n+1)).
inline Rational minimal_count(int g) {
  if (g < 2) throw std::invalid_argument("minimal_count: g >= 2");
  long long n = 2 * g - 1;
  return Rational(BigInt(2) * BigInt::factorial(static_cast<unsigned>(n - 1)),
                  BigInt(n) * BigInt(n + 1));
}

// Closed form for the principal stratum H(1^{2g-2}):
// (4g-5)!! / ((4g-4)(2g-1)).
inline Rational principal_count(int g) {
  if (g < 2) throw std::invalid_argument("principal_count: g >= 2");
  return Rational(BigInt::double_factorial(4 * g - 5),
                  BigInt(4 * g - 4) * BigInt(2 * g - 1));
}

}  // namespace mvol
