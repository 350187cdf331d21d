#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "mvol/permutation.hpp"
#include "mvol/rational.hpp"

using namespace mvol;

namespace {

std::vector<CycleType> all_cycle_types(int n) {
  std::vector<CycleType> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("cycle types of simple permutations") {
  CHECK(cycle_type(Permutation::identity(4)) == CycleType({1, 1, 1, 1}));
  CHECK(cycle_type(Permutation::from_cycle(4, {0, 1, 2, 3})) == CycleType({4}));
  auto p = Permutation::from_cycle(4, {0, 1}) * Permutation::from_cycle(4, {2, 3});
  CHECK(cycle_type(p) == CycleType({2, 2}));
}

TEST_CASE("conjugacy class sizes against direct enumeration") {
  CHECK(conjugacy_class_size(3, CycleType({3})).to_longlong() == 2);
  CHECK(conjugacy_class_size(4, CycleType({2, 2})).to_longlong() == 3);
  CHECK(conjugacy_class_size(8, CycleType({2, 2, 2, 2})).to_longlong() == 105);
  for (int n = 1; n <= 6; ++n) {
    std::map<CycleType, long long> census;
    for (const auto& p : symmetric_group(n)) ++census[cycle_type(p)];
    for (const auto& [t, count] : census)
      CHECK(conjugacy_class_size(n, t).to_longlong() == count);
  }
}

TEST_CASE("class sizes partition the group") {
  for (int n = 1; n <= 7; ++n) {
    BigInt sum(0);
    for (const auto& t : all_cycle_types(n)) sum += conjugacy_class_size(n, t);
    CHECK(sum == BigInt::factorial(n));
  }
}

TEST_CASE("exterior characters: paper-anchored values at n=4") {
  auto id4 = exterior_characters(4, CycleType({1, 1, 1, 1}));
  CHECK(id4 == std::vector<BigInt>{1, 3, 3, 1});
  auto cyc4 = exterior_characters(4, CycleType({4}));
  CHECK(cyc4 == std::vector<BigInt>{1, -1, 1, -1});
  auto tau4 = exterior_characters(4, CycleType({2, 2}));
  CHECK(tau4 == std::vector<BigInt>{1, -1, -1, 1});
}

TEST_CASE("characters against trace of the permutation action") {
  // chi_j + chi_{j-1} equals the character of wedge^j of the full permutation
  // representation, computable by brute force over subsets for small n
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : symmetric_group(n)) {
      auto chi = exterior_characters(n, cycle_type(p));
      for (int j = 0; j <= n; ++j) {
        // trace of wedge^j(P) = sum over j-subsets S with p(S)=S of sign of p|S
        long long trace = 0;
        std::vector<int> subset;
        std::function<void(int)> rec = [&](int start) {
          if ((int)subset.size() == j) {
            std::vector<int> image;
            for (int x : subset) image.push_back(p(x));
            auto sorted = image;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != subset) return;
            // sign of the induced permutation on the subset
            std::vector<int> pos(n, -1);
            for (int i = 0; i < j; ++i) pos[subset[i]] = i;
            std::vector<bool> seen(j, false);
            int sign = 1;
            for (int i = 0; i < j; ++i) {
              if (seen[i]) continue;
              int len = 0;
              for (int k = i; !seen[k]; k = pos[image[k]]) {
                seen[k] = true;
                ++len;
              }
              if (len % 2 == 0) sign = -sign;
            }
            trace += sign;
            return;
          }
          for (int x = start; x < n; ++x) {
            subset.push_back(x);
            rec(x + 1);
            subset.pop_back();
          }
        };
        rec(0);
        BigInt expected = (j == 0   ? BigInt(1)
                           : j == n ? chi[n - 1]
                                    : chi[j] + chi[j - 1]);
        CHECK(expected == BigInt(trace));
      }
    }
  }
}

TEST_CASE("top character equals the sign") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (int iter = 0; iter < 200; ++iter) {
      std::shuffle(v.begin(), v.end(), rng);
      Permutation p{std::vector<int>(v)};
      auto chi = exterior_characters(n, cycle_type(p));
      CHECK(chi[n - 1] == BigInt(p.sign()));
    }
  }
}

TEST_CASE("alternating binomial identity") {
  // sum_k (-1)^k [ C(m,k)/C(2m+1,2k) - C(m,k)/C(2m+1,2k+1) ]
  //   = 0 for even m, 2(m+1)/(m+2) for odd m
  for (int m = 0; m <= 20; ++m) {
    mvol::Rational sum;
    for (int k = 0; k <= m; ++k) {
      mvol::Rational t1(BigInt::binomial(m, k), BigInt::binomial(2 * m + 1, 2 * k));
      mvol::Rational t2(BigInt::binomial(m, k), BigInt::binomial(2 * m + 1, 2 * k + 1));
      mvol::Rational term = t1 - t2;
      sum += (k % 2 == 0) ? term : -term;
    }
    if (m % 2 == 0)
      CHECK(sum == mvol::Rational(0));
    else
      CHECK(sum == mvol::Rational(2 * (m + 1), m + 2));
  }
}
