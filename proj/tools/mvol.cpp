// mvol: 1-cylinder diagram counts, exact Masur-Veech volume contributions,
// square-tiled censuses and cylinder-count sampling for strata of Abelian and
// quadratic differentials.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "mvol/reference_tables.hpp"
#include "mvol/genfun.hpp"
#include "mvol/sampler.hpp"
#include "mvol/volumes.hpp"

using json = nlohmann::json;
using namespace mvol;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBudget = 4;

struct RunConfig {
  std::string command;
  std::string stratum;
  std::string format = "text";
  int threads = 1;
  uint64_t seed = 42;
  int max_squares = 12;
  long long grid = 32;
  long long samples = 100000;
  long long walk = 200;
  double precision = 1e-9;

  json to_json() const {
    return json{{"command", command},   {"stratum", stratum}, {"format", format},
                {"threads", threads},   {"seed", seed},       {"max_squares", max_squares},
                {"grid", grid},         {"samples", samples}, {"walk", walk},
                {"precision", precision}};
  }
  void print_header(std::ostream& os) const {
    if (format == "json") return;
    os << "# mvol " << command;
    if (!stratum.empty()) os << " " << stratum;
    os << " seed=" << seed << " grid=" << grid << " samples=" << samples << " walk=" << walk
       << " max-squares=" << max_squares << " threads=" << threads << "\n";
  }
};

json contribution_json(const SymbolicValue& v) {
  // single-term zeta values keep the {"coeff","zeta"} shape of the interface
  if (v.terms().size() == 1) {
    const auto& [key, coeff] = *v.terms().begin();
    if (key.pi_pow == 0 && key.zetas.size() == 1)
      return json{{"coeff", coeff.to_string()},
                  {"num", coeff.num().to_string()},
                  {"den", coeff.den().to_string()},
                  {"zeta", key.zetas[0]}};
  }
  return json{{"value", v.to_string()}};
}

int cmd_diagrams(const RunConfig& cfg) {
  auto s = StratumSignature::parse(cfg.stratum);
  auto diagrams = one_cylinder_diagrams(s);
  SymbolicValue total;
  json rows = json::array();
  for (const auto& d : diagrams) {
    auto c = contribution_of(d);
    total += c;
    json row{{"stratum", s.to_string()},
             {"canonical_rep", d.canonical_rep.to_text()},
             {"orbit_size", d.orbit_size},
             {"symmetry_order", d.symmetry_order},
             {"contribution", contribution_json(c)}};
    if (d.kind == DiffKind::Quadratic) {
      row["l"] = d.lmn.l;
      row["m"] = d.lmn.m;
      row["n"] = d.lmn.n;
    }
    rows.push_back(std::move(row));
  }
  if (cfg.format == "json") {
    std::cout << json{{"config", cfg.to_json()},
                      {"diagrams", rows},
                      {"c1_total", total.to_string()}}
                     .dump(2)
              << "\n";
    return 0;
  }
  cfg.print_header(std::cout);
  for (const auto& d : diagrams) {
    std::cout << d.canonical_rep.to_text() << "  |Gamma|=" << d.symmetry_order
              << " orbit=" << d.orbit_size;
    if (d.kind == DiffKind::Quadratic)
      std::cout << "  (l,m,n)=(" << d.lmn.l << "," << d.lmn.m << "," << d.lmn.n << ")";
    std::cout << "  c = " << contribution_of(d).to_string() << "\n";
  }
  std::cout << "total " << diagrams.size() << " diagram(s), c1 = " << total.to_string() << "\n";
  return 0;
}

int cmd_c1(const RunConfig& cfg) {
  auto s = StratumSignature::parse(cfg.stratum);
  auto c1 = c1_total(s);
  json out{{"config", cfg.to_json()}, {"stratum", s.to_string()}, {"c1", c1.to_string()},
           {"c1_numeric", c1.numeric()}};
  if (s.abelian()) {
    auto b = c1_bounds(s);
    out["lower_bound"] = b.lower.to_string();
    out["upper_bound"] = b.upper.to_string();
  }
  if (cfg.format == "json") {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  cfg.print_header(std::cout);
  std::cout << "c1(" << s.to_string() << ") = " << c1.to_string() << " = " << c1.numeric() << "\n";
  if (s.abelian()) {
    auto b = c1_bounds(s);
    std::cout << "bounds: " << b.lower.to_string() << " <= c1 <= " << b.upper.to_string() << "\n";
  }
  return 0;
}

int cmd_frobenius(const RunConfig& cfg, int g) {
  StratumSignature s = [&]() {
    if (cfg.stratum == "H(2g-2)") {
      if (g < 2) throw std::invalid_argument("family H(2g-2) needs --g >= 2");
      return StratumSignature(DiffKind::Abelian, {2 * g - 2});
    }
    if (cfg.stratum == "H(1^{2g-2})") {
      if (g < 2) throw std::invalid_argument("family H(1^{2g-2}) needs --g >= 2");
      return StratumSignature(DiffKind::Abelian, std::vector<int>(2 * g - 2, 1));
    }
    return StratumSignature::parse(cfg.stratum);
  }();
  if (!s.abelian()) {
    std::cerr << "frobenius: Abelian strata only\n";
    return kExitUnsupported;
  }
  int n = s.frobenius_n();
  auto type = s.frobenius_type();
  auto triple = triple_count(n, type);
  auto weighted = weighted_one_cyl_count(s);
  json out{{"config", cfg.to_json()},      {"stratum", s.to_string()},
           {"n", n},                       {"cycle_type", type.to_string()},
           {"triple_count", triple.to_string()}, {"weighted_count", weighted.to_string()}};
  const auto& orders = s.orders();
  bool minimal = orders.size() == 1;
  bool principal = !orders.empty() && std::all_of(orders.begin(), orders.end(), [](int m) { return m == 1; });
  if (minimal) out["closed_form"] = minimal_count(s.genus()).to_string();
  if (principal && s.genus() >= 2) out["closed_form"] = principal_count(s.genus()).to_string();
  if (cfg.format == "json") {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  cfg.print_header(std::cout);
  std::cout << s.to_string() << ": n=" << n << " nu=" << type.to_string()
            << " N(S_n;C,C,C(nu))=" << triple.to_string() << " weighted=" << weighted.to_string();
  if (out.contains("closed_form")) std::cout << " closed_form=" << out["closed_form"].get<std::string>();
  std::cout << "\n";
  return 0;
}

int cmd_genfun(const RunConfig& cfg, int abelian_n, std::vector<int> quad) {
  json out{{"config", cfg.to_json()}};
  const PartitionPolynomial* poly = nullptr;
  PartitionPolynomial storage;
  std::string var = "t";
  if (abelian_n > 0) {
    poly = &abelian_F(abelian_n);
    out["polynomial"] = "F_" + std::to_string(abelian_n);
  } else {
    if (quad.size() != 3) {
      std::cerr << "genfun: --quadratic needs l m n\n";
      return kExitParse;
    }
    storage = quadratic_F(quad[0], quad[1], quad[2]);
    poly = &storage;
    var = "p";
    out["polynomial"] = "F_{" + std::to_string(quad[0]) + "," + std::to_string(quad[1]) + "," +
                        std::to_string(quad[2]) + "}";
  }
  if (cfg.format == "json") {
    json terms = json::array();
    for (const auto& [m, c] : poly->terms()) {
      json exps = json::array();
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i]) exps.push_back(json{{"var", i + 1}, {"exp", m[i]}});
      terms.push_back(json{{"coeff", c.to_string()}, {"monomial", exps}});
    }
    out["terms"] = terms;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  cfg.print_header(std::cout);
  for (const auto& [m, c] : poly->terms()) {
    std::cout << c.to_string() << " *";
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      std::cout << " " << var << (i + 1);
      if (m[i] > 1) std::cout << "^" << m[i];
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_enumerate(const RunConfig& cfg) {
  auto s = StratumSignature::parse(cfg.stratum);
  bool is_h2 = s == StratumSignature::parse("H(2)");
  if (!s.abelian()) {
    std::cerr << "enumerate: the census enumerates Abelian strata (quadratic statistics come from the sampler)\n";
    return kExitUnsupported;
  }
  if (!is_h2 && cfg.max_squares > 14) {
    std::cerr << "enumerate: --max-squares beyond budget for this stratum (cap 14)\n";
    return kExitBudget;
  }
  Census census = is_h2 ? h2_census(cfg.max_squares).census : census_exhaustive(s, cfg.max_squares);
  int d = s.dimension();
  auto cum = cumulative_counts(census, cfg.max_squares);
  json out{{"config", cfg.to_json()}, {"stratum", s.to_string()}};
  json cum_json = json::array();
  for (const auto& [N, c] : cum) cum_json.push_back(json{{"N", N}, {"cumulative", c}});
  out["cumulative"] = cum_json;
  if (static_cast<int>(cum.size()) >= 2 && cum.back().second > 0) {
    auto fit = volume_fit(cum, d);
    out["volume_fit"] = json{{"coefficient", fit.coefficient}, {"residual", fit.residual}, {"d", d}};
  }
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& [key, count] : census)
      rows.push_back(json{{"N", key.first}, {"cylinders", key.second}, {"count", count}});
    out["census"] = rows;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  cfg.print_header(std::cout);
  std::cout << "N\tcylinders\tcount\n";
  for (const auto& [key, count] : census)
    std::cout << key.first << "\t" << key.second << "\t" << count << "\n";
  if (out.contains("volume_fit"))
    std::cout << "# volume fit: c = " << out["volume_fit"]["coefficient"].get<double>()
              << " (d = " << d << ", residual " << out["volume_fit"]["residual"].get<double>() << ")\n";
  return 0;
}

json estimate_json(const RunConfig& cfg, const StratumSignature& s, const BandStatistics& stats) {
  auto c1 = c1_total(s);
  double p1 = stats.proportion(1);
  json hist = json::array();
  for (const auto& [k, c] : stats.histogram) hist.push_back(json{{"bands", k}, {"count", c}});
  json out{{"config", cfg.to_json()},
           {"stratum", s.to_string()},
           {"c1", c1.to_string()},
           {"p1_hat", p1},
           {"stderr", stats.stderr_of(1)},
           {"histogram", hist},
           {"effective_samples", stats.total},
           {"attempted", stats.attempted}};
  if (p1 > 0 && p1 < 1) {
    auto est = estimate_volume(c1, p1, stats.stderr_of(1));
    out["volume_estimate"] = est.value;
    out["volume_stderr"] = est.stderr_;
    // pi-power form: use the golden volume's power when known, else the
    // largest even power not exceeding the dimension
    int pi_pow = s.dimension() % 2 == 0 ? s.dimension() : s.dimension() - 1;
    if (auto exact = reference_exact_volume(s.to_string())) {
      pi_pow = exact->terms().begin()->first.pi_pow;
      out["exact_volume"] = exact->to_string();
    }
    out["pi_power_form"] =
        json{{"pi_exp", pi_pow}, {"coefficient", est.value / std::pow(3.14159265358979323846, pi_pow)}};
  }
  return out;
}

int cmd_estimate(const RunConfig& cfg, bool exhaustive) {
  auto s = StratumSignature::parse(cfg.stratum);
  BandStatistics stats = exhaustive ? pk_exhaustive(s, cfg.grid)
                                    : pk_random(s, cfg.samples, cfg.walk, cfg.grid, cfg.seed, cfg.threads);
  json out = estimate_json(cfg, s, stats);
  if (cfg.format == "json") {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  cfg.print_header(std::cout);
  if (cfg.format == "tsv") {
    std::cout << "bands\tcount\n";
    for (const auto& [k, c] : stats.histogram) std::cout << k << "\t" << c << "\n";
    return 0;
  }
  std::cout << "c1 = " << out["c1"].get<std::string>() << "\n";
  std::cout << "p1_hat = " << out["p1_hat"].get<double>() << " +- " << out["stderr"].get<double>()
            << " (" << stats.total << " samples)\n";
  if (out.contains("volume_estimate")) {
    auto form = out["pi_power_form"];
    std::cout << "volume ~ " << out["volume_estimate"].get<double>() << " = "
              << form["coefficient"].get<double>() << " * pi^" << form["pi_exp"].get<int>() << "\n";
    if (out.contains("exact_volume"))
      std::cout << "exact  = " << out["exact_volume"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_stratum_of(const RunConfig& cfg, const std::string& perm_text) {
  auto p = GeneralizedPermutation::parse(perm_text);
  auto s = stratum_of(p);
  if (cfg.format == "json") {
    std::cout << json{{"config", cfg.to_json()},
                      {"permutation", p.canonicalized().to_text()},
                      {"stratum", s.to_string()},
                      {"genus", s.genus()},
                      {"dimension", s.dimension()}}
                     .dump(2)
              << "\n";
    return 0;
  }
  cfg.print_header(std::cout);
  std::cout << p.canonicalized().to_text() << " -> " << s.to_string() << " (genus " << s.genus()
            << ", dim " << s.dimension() << ")\n";
  return 0;
}

int cmd_table(const RunConfig& cfg, int dim) {
  if (dim < 4 || dim > 6) {
    std::cerr << "table: --dim must be 4, 5 or 6\n";
    return kExitParse;
  }
  std::vector<std::string> strata;
  for (const auto& row : quadratic_table())
    if (row.dim == dim && (strata.empty() || strata.back() != row.stratum))
      strata.push_back(row.stratum);
  json rows = json::array();
  cfg.print_header(std::cout);
  for (const auto& name : strata) {
    json row{{"stratum", name}};
    try {
      auto s = StratumSignature::parse(name);
      auto c1 = c1_total_quadratic(s);
      Rational r = c1.terms().begin()->second;
      row["r_computed"] = r.to_string();
      row["r_reference"] = reference_r_total(name)->to_string();
      auto stats = pk_random(s, cfg.samples, cfg.walk, cfg.grid, cfg.seed, cfg.threads);
      std::string freq;
      for (const auto& [k, c] : stats.histogram) {
        if (!freq.empty()) freq += ":";
        char buf[16];
        std::snprintf(buf, sizeof buf, "%.4f", stats.proportion(k));
        freq += buf;
      }
      row["sampled_frequencies"] = freq;
      double p1 = stats.proportion(1);
      if (p1 > 0 && p1 < 1) {
        auto est = estimate_volume(c1, p1, stats.stderr_of(1));
        row["experimental_volume"] = est.value;
        if (auto exact = reference_exact_volume(name)) {
          row["exact_volume"] = exact->to_string();
          row["exact_volume_numeric"] = exact->numeric();
        }
      }
    } catch (const ResourceLimitError& e) {
      row["error"] = std::string("budget exceeded: ") + e.what();
    }
    rows.push_back(row);
    if (cfg.format != "json") {
      std::cout << name << "\tr=" << row.value("r_computed", std::string("?"))
                << "\tfreq=" << row.value("sampled_frequencies", std::string("?"));
      if (row.contains("experimental_volume"))
        std::cout << "\tvol~" << row["experimental_volume"].get<double>();
      if (row.contains("exact_volume"))
        std::cout << "\texact=" << row["exact_volume"].get<std::string>();
      if (row.contains("error")) std::cout << "\t[" << row["error"].get<std::string>() << "]";
      std::cout << "\n";
    }
  }
  if (cfg.format == "json")
    std::cout << json{{"config", cfg.to_json()}, {"rows", rows}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-cylinder diagrams and Masur-Veech volume contributions"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format: text, json or tsv")
      ->envname("MVOL_FORMAT")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_option("--threads", cfg.threads, "worker threads for sampling")->envname("MVOL_THREADS");
  app.add_option("--seed", cfg.seed, "RNG seed")->envname("MVOL_SEED");
  app.add_option("--max-squares", cfg.max_squares, "census square budget")->envname("MVOL_MAX_SQUARES");
  app.add_option("--grid", cfg.grid, "length grid bound L")->envname("MVOL_GRID");
  app.add_option("--samples", cfg.samples, "random sample count")->envname("MVOL_SAMPLES");
  app.add_option("--walk", cfg.walk, "Rauzy walk length")->envname("MVOL_WALK");
  app.add_option("--precision", cfg.precision, "numeric precision target")->envname("MVOL_PRECISION");

  std::string stratum;
  auto* diagrams_cmd = app.add_subcommand("diagrams", "1-cylinder separatrix diagrams of a stratum");
  diagrams_cmd->add_option("stratum", stratum, "stratum, e.g. Q(1^3,-1^3)")->required();

  auto* c1_cmd = app.add_subcommand("c1", "exact 1-cylinder contribution and bounds");
  c1_cmd->add_option("stratum", stratum)->required();

  int frob_g = 0;
  auto* frob_cmd = app.add_subcommand("frobenius", "character-sum diagram counts");
  frob_cmd->add_option("stratum", stratum, "stratum or family H(2g-2), H(1^{2g-2})")->required();
  frob_cmd->add_option("--g", frob_g, "genus for family inputs");

  int abelian_n = 0;
  std::vector<int> quad_lmn;
  auto* genfun_cmd = app.add_subcommand("genfun", "partition generating polynomials");
  genfun_cmd->add_option("--abelian", abelian_n, "F_n for the given n");
  genfun_cmd->add_option("--quadratic", quad_lmn, "F_{l,m,n}")->expected(3);

  auto* enum_cmd = app.add_subcommand("enumerate", "square-tiled census of an Abelian stratum");
  enum_cmd->add_option("stratum", stratum)->required();

  bool exhaustive = false;
  auto* est_cmd = app.add_subcommand("volume-estimate", "volume from c1 and sampled p1");
  est_cmd->add_option("stratum", stratum)->required();
  est_cmd->add_flag("--exhaustive", exhaustive, "exhaustive length grid instead of random sampling");

  int table_dim = 0;
  auto* table_cmd = app.add_subcommand("table", "low-dimensional quadratic strata overview");
  table_cmd->add_option("--dim", table_dim, "dimension: 4, 5 or 6")->required();

  std::string perm_text;
  auto* stratum_cmd = app.add_subcommand("stratum-of", "stratum of a (generalized) permutation");
  stratum_cmd->add_option("permutation", perm_text, "two rows separated by '/', e.g. \"0 1 1 / 2 3 2 3 0\"")
      ->required();

  CLI11_PARSE(app, argc, argv);
  cfg.stratum = stratum;

  try {
    if (app.got_subcommand(diagrams_cmd)) {
      cfg.command = "diagrams";
      return cmd_diagrams(cfg);
    }
    if (app.got_subcommand(c1_cmd)) {
      cfg.command = "c1";
      return cmd_c1(cfg);
    }
    if (app.got_subcommand(frob_cmd)) {
      cfg.command = "frobenius";
      return cmd_frobenius(cfg, frob_g);
    }
    if (app.got_subcommand(genfun_cmd)) {
      cfg.command = "genfun";
      return cmd_genfun(cfg, abelian_n, quad_lmn);
    }
    if (app.got_subcommand(enum_cmd)) {
      cfg.command = "enumerate";
      return cmd_enumerate(cfg);
    }
    if (app.got_subcommand(est_cmd)) {
      cfg.command = "volume-estimate";
      return cmd_estimate(cfg, exhaustive);
    }
    if (app.got_subcommand(table_cmd)) {
      cfg.command = "table";
      return cmd_table(cfg, table_dim);
    }
    if (app.got_subcommand(stratum_cmd)) {
      cfg.command = "stratum-of";
      return cmd_stratum_of(cfg, perm_text);
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::runtime_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  }
  return 0;
}
