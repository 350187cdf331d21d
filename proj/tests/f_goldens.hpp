#pragma once

// Reference monomials of the two-polygon generating polynomials, shared by
// the unit tests and the acceptance suite.

#include <map>
#include <utility>
#include <vector>

#include "mvol/genfun.hpp"

namespace mvol_goldens {

using Mono = mvol::PartitionPolynomial::Monomial;
using Entry = std::pair<Mono, mvol::Rational>;

inline Mono mono(std::map<int, int> vars) {
  Mono m;
  for (const auto& [v, e] : vars) {
    if (static_cast<int>(m.size()) < v) m.resize(v, 0);
    m[v - 1] = e;
  }
  return m;
}

inline std::vector<Entry> reference_F015() {
  using R = mvol::Rational;
  return {
      {mono({{1, 3}, {4, 1}, {2, 1}, {3, 1}}), R(4)},
      {mono({{1, 5}, {2, 2}, {3, 1}}), R(1)},
      {mono({{1, 3}, {5, 1}, {2, 2}}), R(3)},
      {mono({{1, 6}, {2, 1}, {4, 1}}), R(1, 2)},
      {mono({{1, 4}, {6, 1}, {2, 1}}), R(5)},
      {mono({{1, 4}, {5, 1}, {3, 1}}), R(7, 2)},
      {mono({{1, 7}, {5, 1}}), R(1, 10)},
      {mono({{1, 5}, {7, 1}}), R(5, 2)},
      {mono({{9, 1}, {1, 3}}), R(21, 2)},
      {mono({{8, 1}, {1, 2}, {2, 1}}), R(21, 4)},
      {mono({{1, 2}, {7, 1}, {3, 1}}), R(7, 2)},
      {mono({{1, 2}, {4, 1}, {6, 1}}), R(13, 4)},
      {mono({{1, 2}, {5, 2}}), R(33, 20)},
      {mono({{1, 4}, {2, 4}}), R(1, 4)},
      {mono({{1, 6}, {3, 2}}), R(1, 4)},
      {mono({{1, 3}, {3, 3}}), R(1, 2)},
      {mono({{1, 2}, {4, 1}, {2, 3}}), R(1, 2)},
      {mono({{1, 2}, {2, 2}, {3, 2}}), R(1, 2)},
      {mono({{1, 4}, {4, 2}}), R(3, 2)},
  };
}

inline std::vector<Entry> reference_F033() {
  using R = mvol::Rational;
  return {
      {mono({{4, 1}, {1, 3}, {2, 1}, {3, 1}}), R(1, 3)},
      {mono({{4, 1}, {1, 1}, {2, 1}, {5, 1}}), R(1)},
      {mono({{3, 4}}), R(1, 36)},
      {mono({{1, 5}, {2, 2}, {3, 1}}), R(1, 3)},
      {mono({{1, 2}, {2, 2}, {3, 2}}), R(1, 6)},
      {mono({{3, 2}, {4, 1}, {2, 1}}), R(1, 6)},
      {mono({{1, 1}, {5, 1}, {3, 2}}), R(1, 3)},
      {mono({{1, 4}, {2, 4}}), R(1, 4)},
      {mono({{1, 6}, {3, 2}}), R(1, 9)},
      {mono({{1, 3}, {3, 3}}), R(1, 9)},
      {mono({{2, 2}, {4, 2}}), R(1, 4)},
      {mono({{5, 2}, {1, 2}}), R(1)},
      {mono({{5, 1}, {1, 3}, {2, 2}}), R(1)},
      {mono({{4, 1}, {1, 2}, {2, 3}}), R(1, 2)},
      {mono({{5, 1}, {1, 4}, {3, 1}}), R(2, 3)},
  };
}

inline std::vector<Entry> reference_F213() {
  using R = mvol::Rational;
  return {
      {mono({{4, 1}, {5, 1}, {2, 1}, {1, 1}}), R(10)},
      {mono({{8, 1}, {1, 2}, {2, 1}}), R(16)},
      {mono({{7, 1}, {2, 2}, {1, 1}}), R(4)},
      {mono({{4, 1}, {6, 1}, {1, 2}}), R(13)},
      {mono({{5, 2}, {1, 2}}), R(7)},
      {mono({{9, 1}, {1, 3}}), R(12)},
      {mono({{10, 1}, {2, 1}}), R(5)},
      {mono({{11, 1}, {1, 1}}), R(36)},
      {mono({{4, 2}, {2, 2}}), R(1, 2)},
      {mono({{1, 3}, {2, 1}, {3, 1}, {4, 1}}), R(5)},
      {mono({{1, 1}, {2, 1}, {3, 1}, {6, 1}}), R(5)},
      {mono({{3, 3}, {1, 3}}), R(1)},
      {mono({{1, 1}, {5, 1}, {3, 2}}), R(3)},
      {mono({{1, 1}, {3, 1}, {4, 2}}), R(4)},
      {mono({{3, 1}, {9, 1}}), R(2)},
      {mono({{4, 1}, {8, 1}}), R(13, 2)},
      {mono({{5, 1}, {7, 1}}), R(5)},
      {mono({{6, 2}}), R(3, 2)},
      {mono({{1, 4}, {4, 2}}), R(1)},
      {mono({{1, 2}, {2, 3}, {4, 1}}), R(1)},
      {mono({{1, 2}, {2, 2}, {3, 2}}), R(1)},
      {mono({{1, 3}, {2, 2}, {5, 1}}), R(2)},
      {mono({{1, 4}, {2, 1}, {6, 1}}), R(1)},
      {mono({{1, 4}, {3, 1}, {5, 1}}), R(2)},
      {mono({{1, 2}, {3, 1}, {7, 1}}), R(13)},
  };
}

// F_1 through F_6 in full.
inline std::vector<mvol::PartitionPolynomial> reference_abelian_F() {
  using R = mvol::Rational;
  auto make = [](std::vector<Entry> entries) {
    mvol::PartitionPolynomial f;
    for (auto& [m, c] : entries) f.add_term(m, c);
    return f;
  };
  return {
      make({{mono({{1, 1}}), R(1)}}),
      make({{mono({{1, 2}}), R(1)}}),
      make({{mono({{1, 3}}), R(1)}, {mono({{3, 1}}), R(1)}}),
      make({{mono({{1, 4}}), R(1)}, {mono({{1, 1}, {3, 1}}), R(4)}, {mono({{2, 2}}), R(1)}}),
      make({{mono({{1, 5}}), R(1)},
            {mono({{1, 2}, {3, 1}}), R(10)},
            {mono({{1, 1}, {2, 2}}), R(5)},
            {mono({{5, 1}}), R(8)}}),
      make({{mono({{1, 6}}), R(1)},
            {mono({{1, 3}, {3, 1}}), R(20)},
            {mono({{1, 2}, {2, 2}}), R(15)},
            {mono({{1, 1}, {5, 1}}), R(48)},
            {mono({{2, 1}, {4, 1}}), R(24)},
            {mono({{3, 2}}), R(12)}}),
  };
}

}  // namespace mvol_goldens
