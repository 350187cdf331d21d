// Acceptance suite: one test case and one printed PASS/FAIL line per
// criterion. Exact values are compared as rationals or symbolic values;
// numeric tolerances are stated inline.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "f_goldens.hpp"
#include "mvol/reference_tables.hpp"
#include "mvol/sampler.hpp"
#include "mvol/volumes.hpp"

using namespace mvol;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, bool pass, const std::string& detail, double seconds) {
  std::printf("criterion %2d: %s  %s (%.1fs)\n", criterion, pass ? "PASS" : "FAIL", detail.c_str(),
              seconds);
  std::fflush(stdout);
  CHECK_MESSAGE(pass, "criterion ", criterion, ": ", detail);
}

const H2CensusResult& h2_census_60() {
  static H2CensusResult census = h2_census(60);
  return census;
}

std::vector<StratumSignature> abelian_strata_with_n_up_to(int n_max) {
  std::vector<StratumSignature> out;
  std::vector<int> orders;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      StratumSignature s(DiffKind::Abelian, orders);
      if (s.frobenius_n() <= n_max) out.push_back(s);
      return;
    }
    for (int m = std::min(remaining, largest); m >= 1; --m) {
      orders.push_back(m);
      rec(remaining - m, m);
      orders.pop_back();
    }
  };
  for (int total = 2; total + 1 <= n_max; total += 2) rec(total, total);
  return out;
}

}  // namespace

TEST_CASE("criterion 1") {
  Timer t;
  auto h2 = StratumSignature::parse("H(2)");
  auto diagrams = one_cylinder_diagrams(h2);
  bool pass = diagrams.size() == 1;
  pass = pass && weighted_count(diagrams) == Rational(1, 3);
  auto c1 = c1_total_abelian(h2);
  pass = pass && c1 == SymbolicValue::zeta_term(Rational(1, 3), 4);  // 2/3! * zeta(4)
  SymbolicValue vol = c1 + h2_two_cylinder_contribution();
  pass = pass && vol == SymbolicValue::zeta_term(Rational(3, 4), 4);
  pass = pass && vol.normalized() == SymbolicValue::pi_term(Rational(1, 120), 4);
  report(1, pass, "H(2): one diagram of weight 1/3, c(D1)+c(D2) = pi^4/120 exactly", t.seconds());
}

TEST_CASE("criterion 2") {
  Timer t;
  auto s = StratumSignature::parse("Q(1^3,-1^3)");
  auto c = rauzy_class(representative(s), true, true);
  bool pass = c.size() == 2010;
  pass = pass && standard_members(c).size() == 158;
  auto diagrams = diagrams_of_class(c);
  pass = pass && diagrams.size() == 4;
  std::multiset<std::tuple<long long, int, int, int>> got, expected = {
      {2, 0, 5, 1}, {18, 0, 3, 3}, {1, 2, 3, 1}, {1, 3, 2, 1}};
  SymbolicValue total;
  for (const auto& d : diagrams) {
    int m = std::max(d.lmn.m, d.lmn.n), n = std::min(d.lmn.m, d.lmn.n);
    got.insert({d.symmetry_order, d.lmn.l, m, n});
    total += contribution_of(d);
  }
  std::multiset<std::tuple<long long, int, int, int>> expected_sorted;
  for (auto [g, l, m, n] : expected) expected_sorted.insert({g, l, std::max(m, n), std::min(m, n)});
  pass = pass && got == expected_sorted;
  pass = pass && total == SymbolicValue::zeta_term(Rational(77), 6);
  report(2, pass, "Q(1^3,-1^3): class 2010/158, four diagrams, c1 = 77 zeta(6)", t.seconds());
}

TEST_CASE("criterion 3") {
  Timer t;
  bool pass = true;
  int checked = 0;
  for (const auto& s : abelian_strata_with_n_up_to(8)) {
    int n = s.frobenius_n();
    // Rauzy route: classes covering the stratum, diagram orbits, weights
    std::vector<GeneralizedPermutation> all_std;
    for (const auto& c : covering_rauzy_classes(s, false, true))
      for (const auto& p : standard_members(c)) all_std.push_back(p);
    Rational via_rauzy = weighted_count(group_into_diagrams(all_std));
    // Frobenius route
    Rational via_frobenius = weighted_one_cyl_count(s);
    // generating-function route
    Rational via_genfun =
        weighted_from_rooted_abelian(abelian_F(n).coefficient(abelian_stratum_monomial(s.orders())), n);
    bool ok = via_rauzy == via_frobenius && via_frobenius == via_genfun;
    if (!ok)
      std::printf("  three-way mismatch at %s: %s / %s / %s\n", s.to_string().c_str(),
                  via_rauzy.to_string().c_str(), via_frobenius.to_string().c_str(),
                  via_genfun.to_string().c_str());
    pass = pass && ok;
    ++checked;
  }
  report(3, pass,
         "Rauzy = Frobenius = generating function on " + std::to_string(checked) +
             " Abelian strata with n <= 8",
         t.seconds());
}

TEST_CASE("criterion 4") {
  Timer t;
  bool pass = true;
  auto reference = mvol_goldens::reference_abelian_F();
  for (int n = 1; n <= 6; ++n) pass = pass && abelian_F(n) == reference[n - 1];
  auto check_list = [&](const PartitionPolynomial& f, const std::vector<mvol_goldens::Entry>& list) {
    for (const auto& [m, c] : list)
      if (!(f.coefficient(m) == c)) pass = false;
  };
  auto f015 = quadratic_F(0, 1, 5);
  auto f033 = quadratic_F(0, 3, 3);
  auto f213 = quadratic_F(2, 1, 3);
  check_list(f015, mvol_goldens::reference_F015());
  check_list(f033, mvol_goldens::reference_F033());
  check_list(f213, mvol_goldens::reference_F213());
  auto p13p33 = mvol_goldens::mono({{1, 3}, {3, 3}});
  pass = pass && f015.coefficient(p13p33) == Rational(1, 2);
  pass = pass && f033.coefficient(p13p33) == Rational(1, 9);
  pass = pass && f213.coefficient(p13p33) == Rational(1);
  report(4, pass, "F_1..F_6 term-for-term; reference monomials of F_{0,1,5}, F_{0,3,3}, F_{2,1,3}",
         t.seconds());
}

TEST_CASE("criterion 5") {
  Timer t;
  bool pass = true;
  int rows = 0;
  for (const auto& row : exact_volume_table()) {
    auto s = StratumSignature::parse(row.stratum);
    auto r = reference_r_total(row.stratum);
    bool ok = r.has_value() &&
              c1_total_quadratic(s) == SymbolicValue::zeta_term(*r, s.dimension());
    if (!ok) std::printf("  r mismatch at %s\n", row.stratum);
    pass = pass && ok;
    ++rows;
  }
  report(5, pass,
         "all " + std::to_string(rows) +
             " reference-table strata of dim 4-6 (35 table rows, split components summed) reproduce the exact r coefficients",
         t.seconds());
}

TEST_CASE("criterion 6") {
  Timer t;
  bool pass = true;
  for (int g = 2; g <= 10; ++g) {
    auto s = StratumSignature(DiffKind::Abelian, {2 * g - 2});
    pass = pass && minimal_count(g) == weighted_one_cyl_count(s);
    pass = pass && c1_total_abelian(s) ==
                       SymbolicValue::zeta_term(Rational(4, static_cast<long long>(2 * g) * (2 * g - 1)), 2 * g);
  }
  for (int g = 2; g <= 6; ++g) {
    auto s = StratumSignature(DiffKind::Abelian, std::vector<int>(2 * g - 2, 1));
    pass = pass && principal_count(g) == weighted_one_cyl_count(s);
    pass = pass && c1_total_abelian(s) ==
                       SymbolicValue::zeta_term(
                           Rational(4, BigInt(4 * g - 2) * BigInt::pow(BigInt(2), 2 * g - 2)), 4 * g - 3);
  }
  report(6, pass, "minimal (g <= 10) and principal (g <= 6) closed forms = character sums, exact",
         t.seconds());
}

TEST_CASE("criterion 7") {
  Timer t;
  bool pass = true;
  // Both bounds are attained: the lower one exactly on the principal strata,
  // the upper one exactly on H(2^3) (the case making Zagier's 19/29 sharp).
  // The sandwich is required non-strictly, with every equality certified as
  // an exact rational identity, and strictly everywhere else.
  int equalities = 0, checked = 0;
  for (int g = 2; g <= 5; ++g) {
    std::vector<int> orders;
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
      if (remaining == 0) {
        StratumSignature s(DiffKind::Abelian, orders);
        auto b = c1_bounds(s);
        auto c1 = c1_total_abelian(s);
        double c1n = c1.numeric();
        bool lo_eq = b.lower == c1;
        bool up_eq = b.upper == c1;
        if (lo_eq || up_eq) ++equalities;
        pass = pass && (lo_eq || b.lower.numeric() < c1n);
        pass = pass && (up_eq || c1n < b.upper.numeric());
        ++checked;
        return;
      }
      for (int m = std::min(remaining, largest); m >= 1; --m) {
        orders.push_back(m);
        rec(remaining - m, m);
        orders.pop_back();
      }
    };
    rec(2 * g - 2, 2 * g - 2);
  }
  double prev = 1e18;
  for (int g = 2; g <= 30; ++g) {
    auto b = c1_bounds(StratumSignature(DiffKind::Abelian, {2 * g - 2}));
    double ratio = b.upper.numeric() / b.lower.numeric();
    pass = pass && ratio > 1.0 && ratio < prev;
    prev = ratio;
  }
  report(7, pass,
         "bounds sandwich " + std::to_string(checked) + " strata of genus <= 5 (" +
             std::to_string(equalities) +
             " exact attainments: principal strata at the lower bound, H(2^3) at the upper); "
             "upper/lower ratio decreasing over minimal strata g <= 30",
         t.seconds());
}

TEST_CASE("criterion 8") {
  Timer t;
  bool pass = true;
  auto h2 = pk_random(StratumSignature::parse("H(2)"), 100000, 200, 24, 20260808, 2);
  double p1 = h2.proportion(1);
  double dev = std::abs(p1 - 4.0 / 9.0);
  pass = pass && dev <= 3 * h2.stderr_of(1);

  auto q = StratumSignature::parse("Q(1^3,-1^3)");
  auto qs = pk_random(q, 200000, 300, 32, 20260808, 2);
  double qp1 = qs.proportion(1);
  pass = pass && std::abs(qp1 - 0.4366) < 0.02;
  auto est = estimate_volume(c1_total_quadratic(q), qp1, qs.stderr_of(1));
  double target = 11.0 / 60.0 * std::pow(kPi, 6);
  pass = pass && std::abs(est.value - target) / target < 0.05;
  char detail[256];
  std::snprintf(detail, sizeof detail,
                "H(2) p1 = %.4f (4/9 = %.4f); Q(1^3,-1^3) p1 = %.4f (0.4366 +- 0.02), "
                "volume %.4f pi^6 vs 11/60 = %.4f",
                p1, 4.0 / 9.0, qp1, est.value / std::pow(kPi, 6), 11.0 / 60.0);
  report(8, pass, detail, t.seconds());
}

TEST_CASE("criterion 9") {
  Timer t;
  const auto& census = h2_census_60().census;
  auto census_p = [&](int k, int cap) {
    double part = 0, total = 0;
    for (const auto& [key, c] : census) {
      if (key.first > cap) continue;
      total += static_cast<double>(c);
      if (key.second == k) part += static_cast<double>(c);
    }
    return std::make_pair(part / total, total);
  };
  auto rep = representative(StratumSignature::parse("H(2)"));
  auto grid20 = pk_exhaustive(rep, 20);
  auto grid10 = pk_exhaustive(rep, 10);
  bool pass = true;
  std::string detail = "H(2) census(N<=40) vs grid(L<=20):";
  for (int k = 1; k <= 2; ++k) {
    auto [pc40, m40] = census_p(k, 40);
    auto [pc20, m20] = census_p(k, 20);
    double pg20 = grid20.proportion(k);
    double pg10 = grid10.proportion(k);
    // each exhaustive proportion converges like C/scale; the change over the
    // last doubling plus the multinomial term estimates its uncertainty
    double se_census = std::abs(pc40 - pc20) + std::sqrt(pc40 * (1 - pc40) / m40);
    double se_grid = std::abs(pg20 - pg10) + grid20.stderr_of(k);
    double combined = std::sqrt(se_census * se_census + se_grid * se_grid);
    bool ok = std::abs(pc40 - pg20) <= 3 * combined;
    char buf[128];
    std::snprintf(buf, sizeof buf, " p%d: %.4f vs %.4f (3se %.4f)", k, pc40, pg20, 3 * combined);
    detail += buf;
    pass = pass && ok;
  }
  report(9, pass, detail, t.seconds());
}

TEST_CASE("criterion 10") {
  Timer t;
  const auto& census = h2_census_60().census;
  auto fit_all = volume_fit(cumulative_counts(census, 60), 4);
  auto fit_one = volume_fit(cumulative_counts(census, 60, 1), 4);
  double target_all = std::pow(kPi, 4) / 120;
  double target_one = 2 * zeta_numeric(4) / 6;
  double rel_all = std::abs(fit_all.coefficient - target_all) / target_all;
  double rel_one = std::abs(fit_one.coefficient - target_one) / target_one;
  bool pass = rel_all < 0.10 && rel_one < 0.10;
  char detail[192];
  std::snprintf(detail, sizeof detail,
                "H(2) N<=60: fit %.4f vs pi^4/120 = %.4f (%.1f%%); 1-cyl fit %.4f vs 2 zeta(4)/6 = "
                "%.4f (%.1f%%)",
                fit_all.coefficient, target_all, 100 * rel_all, fit_one.coefficient, target_one,
                100 * rel_one);
  report(10, pass, detail, t.seconds());
}

TEST_CASE("criterion 11") {
  Timer t;
  double z4 = zeta_numeric(4);
  bool pass = std::abs(mzv_numeric({1, 3}) - z4 / 4) < 1e-8;
  pass = pass && std::abs(mzv_numeric({2, 2}) - 3 * z4 / 4) < 1e-8;
  double identity = 140 * zeta_numeric(6) + 120 * zeta_numeric(2) * zeta_numeric(4) +
                    28 * std::pow(zeta_numeric(2), 3);
  pass = pass && std::abs(identity - std::pow(kPi, 6) / 2) < 1e-10;
  pass = pass && hyperelliptic_p1(HypKind::Minimal, 2).normalized() == SymbolicValue(Rational(4, 9));
  report(11, pass,
         "zeta(1,3) = zeta(4)/4 and zeta(2,2) = 3 zeta(4)/4 to 1e-8; lattice identity to 1e-10; "
         "p1(H(2)) = 4/9 exactly",
         t.seconds());
}

TEST_CASE("criterion 12") {
  Timer t;
  bool pass = true;
  long long cases_peel = 0, cases_partition = 0, cases_stratum = 0, cases_band = 0, cases_orbit = 0;

  // character peeling on random cycle types
  {
    Rng rng(91);
    for (int iter = 0; iter < 1000; ++iter) {
      int n = 2 + static_cast<int>(rng.below(23));
      std::vector<int> parts;
      int rest = n;
      while (rest > 0) {
        int p = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(rest)));
        parts.push_back(p);
        rest -= p;
      }
      CycleType type(parts);
      auto chi = exterior_characters(n, type);
      // independent expansion of prod (1 - (-x)^l)
      std::vector<long long> a(n + 1, 0);
      a[0] = 1;
      int deg = 0;
      for (int l : type.lengths()) {
        std::vector<long long> b(n + 1, 0);
        for (int j = 0; j <= deg; ++j) {
          b[j] += a[j];
          if (j + l <= n) b[j + l] -= (l % 2 == 0 ? 1 : -1) * a[j];
        }
        deg = std::min(n, deg + l);
        a.swap(b);
      }
      BigInt prev(0);
      for (int j = 0; j < n; ++j) {
        if (!(chi[j] == BigInt(a[j]) - prev)) pass = false;
        prev = chi[j];
      }
      if (!(BigInt(a[n]) == chi[n - 1])) pass = false;
      if (!(chi[n - 1] == BigInt(type.permutation_sign()))) pass = false;
      ++cases_peel;
    }
  }

  // class sizes partition the group
  {
    for (int n = 1; n <= 17; ++n) {
      BigInt sum(0);
      std::vector<int> parts;
      std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
          sum += conjugacy_class_size(n, CycleType(parts));
          ++cases_partition;
          return;
        }
        for (int p = std::min(remaining, largest); p >= 1; --p) {
          parts.push_back(p);
          rec(remaining - p, p);
          parts.pop_back();
        }
      };
      rec(n, n);
      if (!(sum == BigInt::factorial(n))) pass = false;
    }
  }

  // stratum invariance along random Rauzy walks
  {
    Rng rng(92);
    std::vector<StratumSignature> pool = {
        StratumSignature::parse("H(2)"),      StratumSignature::parse("H(1,1)"),
        StratumSignature::parse("H(3,1)"),    StratumSignature::parse("Q(2,-1^2)"),
        StratumSignature::parse("Q(1,-1^5)"), StratumSignature::parse("Q(1^2,-1^2)"),
        StratumSignature::parse("Q(2^2)"),    StratumSignature::parse("Q(2,1,-1^3)")};
    while (cases_stratum < 1000) {
      const auto& s = pool[rng.below(pool.size())];
      GeneralizedPermutation p = representative(s);
      int steps = 1 + static_cast<int>(rng.below(40));
      for (int i = 0; i < steps; ++i) {
        auto q = rauzy_move(p, static_cast<MoveKind>(rng.below(4)));
        if (q) p = std::move(*q);
      }
      if (!(stratum_of(p) == s)) pass = false;
      ++cases_stratum;
    }
  }

  // band count range and rescaling invariance
  {
    Rng rng(93);
    std::vector<StratumSignature> pool = {
        StratumSignature::parse("H(2)"), StratumSignature::parse("H(1,1)"),
        StratumSignature::parse("Q(2,-1^2)"), StratumSignature::parse("Q(1^3,-1^3)"),
        StratumSignature::parse("Q(1,-1^5)")};
    while (cases_band < 1000) {
      const auto& s = pool[rng.below(pool.size())];
      GeneralizedPermutation p = representative(s);
      int steps = static_cast<int>(rng.below(20));
      for (int i = 0; i < steps; ++i) {
        auto q = rauzy_move(p, static_cast<MoveKind>(rng.below(4)));
        if (q) p = std::move(*q);
      }
      auto fc = free_coordinates(p);
      std::vector<long long> lengths(p.num_symbols(), 1);
      for (int sym : fc.free_symbols) lengths[sym] = rng.range(1, 9);
      if (!solve_dependent(p, fc, lengths)) continue;
      int k = band_count({p, lengths});
      int bound = s.genus() + s.num_singularities() - 1;
      if (!(k >= 1 && k <= bound)) pass = false;
      long long c = 2 + static_cast<long long>(rng.below(4));
      std::vector<long long> scaled = lengths;
      for (auto& l : scaled) l *= c;
      if (band_count({p, scaled}) != k) pass = false;
      ++cases_band;
    }
  }

  // orbit partition completeness over whole strata
  {
    for (const char* name : {"H(4)", "H(3,1)", "H(2,2)", "H(5,1)", "Q(1^3,-1^3)", "Q(2,1,-1^3)"}) {
      auto standards = all_standard_permutations(StratumSignature::parse(name));
      auto diagrams = group_into_diagrams(standards);  // throws unless orbits partition the set
      long long total = 0;
      for (const auto& d : diagrams) total += d.orbit_size;
      if (total != static_cast<long long>(standards.size())) pass = false;
      cases_orbit += static_cast<long long>(standards.size());
    }
  }

  char detail[224];
  std::snprintf(detail, sizeof detail,
                "peeling %lld, class-size partition %lld, stratum invariance %lld, bands %lld, "
                "orbit partition %lld cases",
                cases_peel, cases_partition, cases_stratum, cases_band, cases_orbit);
  report(12, pass, detail, t.seconds());
}
