#pragma once

#include <optional>
#include <vector>

#include "mvol/symbolic.hpp"

namespace mvol {

// Reference values for the low-dimensional strata of quadratic differentials:
// the exact 1-cylinder coefficient r (c_1 = r * zeta(d)), the observed
// cylinder-count frequencies, and the exact Masur-Veech volume where known.
// Used for comparison columns and as acceptance targets, never as inputs.
struct QuadraticTableRow {
  const char* stratum;
  const char* component;  // "" = connected / whole stratum
  int dim;
  const char* r;          // exact rational, per component
  const char* stats;      // observed 1:2:...-cylinder frequencies
};

inline const std::vector<QuadraticTableRow>& quadratic_table() {
  static const std::vector<QuadraticTableRow> rows = {
      // dimension 4
      {"Q(1,-1^5)", "", 4, "40", "0.4382:0.5618"},
      {"Q(1^2,-1^2)", "", 4, "50/3", "0.5724:0.4276"},
      {"Q(3,-1^3)", "", 4, "30", "0.6016:0.3984"},
      {"Q(2^2)", "", 4, "17/4", "0.7065:0.2130:0.0805"},
      {"Q(5,-1)", "", 4, "12", "0.6488:0.3512"},
      // dimension 5
      {"Q(2,-1^6)", "", 5, "60", "0.2472:0.6740:0.0789"},
      {"Q(2,1,-1^3)", "", 5, "45", "0.4919:0.4472:0.0610"},
      {"Q(4,-1^4)", "", 5, "84", "0.4309:0.5163:0.0528"},
      {"Q(2,1^2)", "", 5, "11/2", "0.4398:0.4667:0.0935"},
      {"Q(4,1,-1)", "", 5, "68/3", "0.4772:0.4854:0.0374"},
      {"Q(3,2,-1)", "", 5, "115/6", "0.5528:0.3813:0.0659"},
      {"Q(6,-1^2)", "hyp", 5, "65/12", "0.3057:0.6374:0.0569"},
      {"Q(6,-1^2)", "nonhyp", 5, "181/3", "0.5366:0.4008:0.0626"},
      {"Q(8)", "", 5, "56/3", "0.5211:0.4024:0.0764"},
      // dimension 6
      {"Q(1^2,-1^6)", "", 6, "140", "0.2943:0.4236:0.2821"},
      {"Q(3,-1^7)", "", 6, "84", "0.1106:0.6187:0.2707"},
      {"Q(1^3,-1^3)", "", 6, "77", "0.4366:0.4000:0.1634"},
      {"Q(3,1,-1^4)", "", 6, "126", "0.4000:0.4520:0.1480"},
      {"Q(2^2,-1^4)", "", 6, "110", "0.364:0.511:0.108:0.016"},
      {"Q(5,-1^5)", "", 6, "210", "0.3276:0.5301:0.1423"},
      {"Q(1^4)", "", 6, "49/3", "0.2512:0.5577:0.1911"},
      {"Q(3,1^2,-1)", "", 6, "119/3", "0.3593:0.5081:0.1325"},
      {"Q(2^2,1,-1)", "", 6, "94/3", "0.391:0.503:0.096:0.0098"},
      {"Q(5,1,-1^2)", "", 6, "189/2", "0.4252:0.4569:0.1179"},
      {"Q(4,2,-1^2)", "", 6, "317/4", "0.450:0.449:0.089:0.012"},
      {"Q(3^2,-1^2)", "hyp", 6, "161/30", "0.1724:0.6520:0.1756"},
      {"Q(3^2,-1^2)", "nonhyp", 6, "1106/15", "0.4894:0.3951:0.1154"},
      {"Q(7,-1^3)", "", 6, "441/2", "0.4179:0.4626:0.1195"},
      {"Q(7,1)", "", 6, "37", "0.3724:0.5171:0.1106"},
      {"Q(6,2)", "hyp", 6, "65/48", "0.237:0.608:0.137:0.018"},
      {"Q(6,2)", "nonhyp", 6, "389/12", "0.473:0.380:0.112:0.035"},
      {"Q(5,3)", "", 6, "77/3", "0.488:0.383:0.129"},
      {"Q(4^2)", "", 6, "92/3", "0.388:0.481:0.109:0.022"},
      {"Q(9,-1)", "reg", 6, "385/3", "0.4569:0.4195:0.1236"},
      {"Q(9,-1)", "irr", 6, "55/3", "0.3024:0.5740:0.1236"},
  };
  return rows;
}

// Exact Masur-Veech volumes (full strata; split components summed).
struct ExactVolumeRow {
  const char* stratum;
  const char* coeff;  // rational multiplier
  int pi_pow;
};

inline const std::vector<ExactVolumeRow>& exact_volume_table() {
  static const std::vector<ExactVolumeRow> rows = {
      {"Q(1,-1^5)", "1", 4},      {"Q(1^2,-1^2)", "1/3", 4},  {"Q(3,-1^3)", "5/9", 4},
      {"Q(2^2)", "2/3", 2},       {"Q(5,-1)", "28/135", 4},   {"Q(2,-1^6)", "8/3", 4},
      {"Q(2,1,-1^3)", "1", 4},    {"Q(4,-1^4)", "2", 4},      {"Q(2,1^2)", "2/15", 4},
      {"Q(4,1,-1)", "8/15", 4},   {"Q(3,2,-1)", "10/27", 4},  {"Q(6,-1^2)", "184/135", 4},
      {"Q(8)", "10/27", 4},       {"Q(1^2,-1^6)", "1/2", 6},  {"Q(3,-1^7)", "3/4", 6},
      {"Q(1^3,-1^3)", "11/60", 6},{"Q(3,1,-1^4)", "1/3", 6},  {"Q(2^2,-1^4)", "136/45", 4},
      {"Q(5,-1^5)", "7/10", 6},   {"Q(1^4)", "1/15", 6},      {"Q(3,1^2,-1)", "1/9", 6},
      {"Q(2^2,1,-1)", "4/5", 4},  {"Q(5,1,-1^2)", "7/30", 6}, {"Q(4,2,-1^2)", "28/15", 4},
      {"Q(3^2,-1^2)", "53/270", 6}, {"Q(7,-1^3)", "27/50", 6}, {"Q(7,1)", "18/175", 6},
      {"Q(6,2)", "104/135", 4},   {"Q(5,3)", "14/243", 6},    {"Q(4^2)", "4/5", 4},
      {"Q(9,-1)", "15224/42525", 6},
  };
  return rows;
}

// Full-stratum r: sum of the component rows.
inline std::optional<Rational> reference_r_total(const std::string& stratum) {
  Rational sum;
  bool found = false;
  for (const auto& row : quadratic_table()) {
    if (stratum == row.stratum) {
      sum += Rational::from_string(row.r);
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return sum;
}

inline std::optional<SymbolicValue> reference_exact_volume(const std::string& stratum) {
  for (const auto& row : exact_volume_table())
    if (stratum == row.stratum)
      return SymbolicValue::pi_term(Rational::from_string(row.coeff), row.pi_pow);
  return std::nullopt;
}

}  // namespace mvol
