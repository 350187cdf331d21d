#pragma once

#include "mvol/diagrams.hpp"
#include "mvol/frobenius.hpp"
#include "mvol/symbolic.hpp"

namespace mvol {

// c(D) = 2/|Gamma| * (mu_1! mu_2! ...)/(d-2)! * zeta(d) for an orientable
// 1-cylinder diagram in the stratum s with labeled singularities.
inline SymbolicValue contribution_abelian(long long gamma, const StratumSignature& s) {
  if (!s.abelian()) throw std::invalid_argument("contribution_abelian: Abelian strata only");
  if (gamma < 1) throw std::invalid_argument("contribution_abelian: gamma >= 1");
  int d = s.dimension();
  Rational coeff(2, gamma);
  for (const auto& [order, mult] : s.multiplicities()) coeff *= Rational(BigInt::factorial(mult));
  coeff /= Rational(BigInt::factorial(d - 2));
  return SymbolicValue::zeta_term(coeff, d);
}

// c(D) = 2^{l+2}/|Gamma| * (m+n-2)!/((m-1)!(n-1)!) *
//        (mu_{-1}! mu_1! mu_2! ...)/(d-2)! * zeta(d)
inline SymbolicValue contribution_quadratic(long long gamma, int l, int m, int n,
                                            const StratumSignature& s) {
  if (s.abelian()) throw std::invalid_argument("contribution_quadratic: quadratic strata only");
  int d = s.dimension();
  if (l + m + n != d) throw std::invalid_argument("contribution_quadratic: l+m+n must equal dim");
  if (m < 1 || n < 1) throw std::invalid_argument("contribution_quadratic: m,n >= 1");
  Rational coeff(BigInt::pow(BigInt(2), l + 2), BigInt(gamma));
  coeff *= Rational(BigInt::factorial(m + n - 2), BigInt::factorial(m - 1) * BigInt::factorial(n - 1));
  for (const auto& [order, mult] : s.multiplicities()) coeff *= Rational(BigInt::factorial(mult));
  coeff /= Rational(BigInt::factorial(d - 2));
  return SymbolicValue::zeta_term(coeff, d);
}

inline SymbolicValue contribution_of(const SeparatrixDiagram& d) {
  return d.kind == DiffKind::Abelian
             ? contribution_abelian(d.symmetry_order, d.stratum)
             : contribution_quadratic(d.symmetry_order, d.lmn.l, d.lmn.m, d.lmn.n, d.stratum);
}

// c_1 = 2/n! * prod_k (k+1)^{-mu_k} * sum_j j!(n-1-j)! chi_j(nu) * zeta(n+1)
inline SymbolicValue c1_total_abelian(const StratumSignature& s) {
  if (!s.abelian()) throw std::invalid_argument("c1_total_abelian: Abelian strata only");
  int n = s.frobenius_n();
  auto chi = exterior_characters(n, s.frobenius_type());
  BigInt char_sum(0);
  for (int j = 0; j < n; ++j)
    char_sum += BigInt::factorial(j) * BigInt::factorial(n - 1 - j) * chi[j];
  Rational coeff(BigInt(2) * char_sum, BigInt::factorial(n));
  for (const auto& [order, mult] : s.multiplicities())
    coeff /= Rational(BigInt::pow(BigInt(order + 1), mult));
  return SymbolicValue::zeta_term(coeff, n + 1);
}

// c_1 of a quadratic stratum by diagram enumeration (all components).
inline SymbolicValue c1_total_quadratic(const StratumSignature& s) {
  SymbolicValue total;
  for (const auto& d : one_cylinder_diagrams(s)) total += contribution_of(d);
  return total;
}

inline SymbolicValue c1_total(const StratumSignature& s) {
  return s.abelian() ? c1_total_abelian(s) : c1_total_quadratic(s);
}

// zeta(d)/(d+1) * 4/prod(m_i+1)  <=  c_1  <=  zeta(d)/(d-10/29) * 4/prod(m_i+1)
struct C1Bounds {
  SymbolicValue lower;
  SymbolicValue upper;
};

inline C1Bounds c1_bounds(const StratumSignature& s) {
  if (!s.abelian()) throw std::invalid_argument("c1_bounds: Abelian strata only");
  int d = s.dimension();
  Rational prod(1);
  for (int m : s.orders()) prod *= Rational(m + 1);
  Rational base = Rational(4) / prod;
  C1Bounds b;
  b.lower = SymbolicValue::zeta_term(base / Rational(d + 1), d);
  b.upper = SymbolicValue::zeta_term(base * Rational(29, 29 * d - 10), d);
  return b;
}

// Hyperelliptic components: exact p_1 and Masur-Veech volume.
//   p1(H^hyp(2g-2))  = zeta(2g)/pi^{2g} * 2g(2g+1) * (2g-2)!!/(2g-3)!!
//   p1(H^hyp(g-1,g-1)) = zeta(2g+1)/(2 pi^{2g}) * (2g+1)(2g+2) * (2g-1)!!/(2g-2)!!
//   Vol H^hyp(2g-2)  = 2 pi^{2g}/(2g+1)! * (2g-3)!!/(2g-2)!!
//   Vol H^hyp(g-1,g-1) = 4 pi^{2g}/(2g+2)! * (2g-2)!!/(2g-1)!!
enum class HypKind { Minimal, Pair };

inline SymbolicValue hyperelliptic_p1(HypKind kind, int g) {
  if (g < 2) throw std::invalid_argument("hyperelliptic_p1: g >= 2");
  if (kind == HypKind::Minimal) {
    Rational c = Rational(2 * g) * Rational(2 * g + 1) *
                 Rational(BigInt::double_factorial(2 * g - 2), BigInt::double_factorial(2 * g - 3));
    return SymbolicValue::term(c, {2 * g}, -2 * g);
  }
  Rational c = Rational(2 * g + 1) * Rational(2 * g + 2) *
               Rational(BigInt::double_factorial(2 * g - 1), BigInt(2) * BigInt::double_factorial(2 * g - 2));
  return SymbolicValue::term(c, {2 * g + 1}, -2 * g);
}

inline SymbolicValue hyperelliptic_volume(HypKind kind, int g) {
  if (g < 2) throw std::invalid_argument("hyperelliptic_volume: g >= 2");
  if (kind == HypKind::Minimal) {
    Rational c(BigInt(2) * BigInt::double_factorial(2 * g - 3),
               BigInt::factorial(2 * g + 1) * BigInt::double_factorial(2 * g - 2));
    return SymbolicValue::pi_term(c, 2 * g);
  }
  Rational c(BigInt(4) * BigInt::double_factorial(2 * g - 2),
             BigInt::factorial(2 * g + 2) * BigInt::double_factorial(2 * g - 1));
  return SymbolicValue::pi_term(c, 2 * g);
}

// Volume estimate Vol = c1/p1 with first-order error propagation on 1/p.
struct VolumeEstimate {
  double value = 0;
  double stderr_ = 0;
};

inline VolumeEstimate estimate_volume(const SymbolicValue& c1, double p1_hat, double p1_stderr) {
  if (!(p1_hat > 0 && p1_hat < 1)) throw std::invalid_argument("estimate_volume: p1 in (0,1)");
  VolumeEstimate e;
  double c = c1.numeric();
  e.value = c / p1_hat;
  e.stderr_ = c * p1_stderr / (p1_hat * p1_hat);
  return e;
}

// The 2-cylinder contribution to Vol H(2), a stored constant:
// c(D2) = (2/3!) * (5/4) * zeta(4).
inline SymbolicValue h2_two_cylinder_contribution() {
  return SymbolicValue::zeta_term(Rational(5, 12), 4);
}

}  // namespace mvol
