#include "x0calc/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "x0calc/disc_analysis.hpp"
#include "x0calc/eis_chow.hpp"
#include "x0calc/error.hpp"
#include "x0calc/gamma0.hpp"
#include "x0calc/hecke_eis.hpp"
#include "x0calc/lseries.hpp"
#include "x0calc/modular_forms.hpp"

namespace x0calc::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Config {
  std::string command;
  std::int64_t N = 0;
  std::int64_t l = 0;
  std::int64_t d = 0;
  int disc = 0;
  std::string eigenform;
  int precision = 15;
  std::string format = "table";
  double tolerance = -1.0;  // negative: the command's default
  std::string convention = "lemma";
  int radial = 256;
  int angular = 512;
  std::size_t terms = 0;
  int quad_order = 48;
};

DinfGConvention parse_convention(const std::string& s) {
  return s == "orthogonal" ? DinfGConvention::Orthogonal : DinfGConvention::IntersectionLemma;
}

std::string rows_table(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(labels.size() + 1, 0);
  for (const auto& l : labels) width[0] = std::max(width[0], l.size());
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c + 1] = std::max({width[c + 1], r[c].size(), labels[c].size()});
  std::ostringstream os;
  os << std::setw(static_cast<int>(width[0])) << "";
  for (std::size_t c = 0; c < labels.size(); ++c) os << "  " << std::setw(static_cast<int>(width[c + 1])) << labels[c];
  os << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << std::setw(static_cast<int>(width[0])) << labels[r];
    for (std::size_t c = 0; c < rows[r].size(); ++c) os << "  " << std::setw(static_cast<int>(width[c + 1])) << rows[r][c];
    os << '\n';
  }
  return os.str();
}

void emit(const Config& cfg, std::ostream& out, const ojson& j, const std::string& table) {
  if (cfg.format == "json")
    out << j.dump() << '\n';
  else
    out << table;
}

int cmd_invariants(const Config& cfg, std::ostream& out) {
  const Gamma0Data d = invariants(cfg.N);
  const ojson j = {{"N", d.N}, {"psi", d.psi}, {"nu2", d.nu2}, {"nu3", d.nu3}, {"cusps", d.nu_inf}, {"genus", d.genus}};
  std::ostringstream t;
  for (const auto& [k, v] : j.items()) t << std::left << std::setw(6) << k << v.dump() << '\n';
  emit(cfg, out, j, t.str());
  return kOk;
}

int cmd_gram(const Config& cfg, std::ostream& out) {
  const GramMatrix g = gram(cfg.N, parse_convention(cfg.convention));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.basis.dim(); ++i) labels.push_back(g.basis.label(i));
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : g.entries) {
    rows.emplace_back();
    for (const auto& e : r) rows.back().push_back(e.to_string());
  }
  std::string table = rows_table(labels, rows);
  for (const auto& d : g.diagnostics) table += "note: " + d + '\n';
  emit(cfg, out, g.to_json(cfg.precision), table);
  return kOk;
}

int cmd_omega_eis(const Config& cfg, std::ostream& out) {
  const SymbolicReal v = omega_eis_sq(cfg.N, parse_convention(cfg.convention));
  const EvalResult e = v.evaluate(cfg.precision);
  const ojson j = {{"N", cfg.N},
                   {"symbolic", v.to_json()},
                   {"numeric", e.value},
                   {"decimal", e.decimal},
                   {"error_bound", e.error_bound},
                   {"precision", cfg.precision},
                   {"text", v.to_string()}};
  emit(cfg, out, j, "omega_Eis^2 = " + v.to_string() + "\n            = " + e.decimal + '\n');
  return kOk;
}

int cmd_hecke(const Config& cfg, std::ostream& out) {
  const bool is_t = cfg.l != 0;
  const EisOperator op = is_t ? t_hat(cfg.l, cfg.N) : w_hat(cfg.d, cfg.N);
  const GramMatrix g = gram(cfg.N, parse_convention(cfg.convention));
  const bool sa = is_self_adjoint(op, g);
  ojson j;
  j["operator"] = is_t ? "T_" + std::to_string(cfg.l) : "w_" + std::to_string(cfg.d);
  const ojson body = op.to_json();
  for (const auto& [k, v] : body.items()) j[k] = v;
  if (is_t) j["shift"] = hecke_shift(cfg.l, cfg.N).to_string();
  j["self_adjoint"] = sa;
  j["convention"] = convention_name(g.convention);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < op.dim(); ++i) labels.push_back(op.basis().label(i));
  std::vector<std::vector<std::string>> rows(op.dim());
  for (std::size_t r = 0; r < op.dim(); ++r)
    for (std::size_t c = 0; c < op.dim(); ++c) rows[r].push_back(op.column_defined(c) ? op.at(r, c).to_string() : "-");
  std::string table = j["operator"].get<std::string>() + " on X_0(" + std::to_string(cfg.N) + ")\n" + rows_table(labels, rows);
  table += std::string("self-adjoint: ") + (sa ? "yes" : "no") + '\n';
  emit(cfg, out, j, table);
  return kOk;
}

int cmd_heegner(const Config& cfg, std::ostream& out) {
  if (cfg.disc != 0) {
    const HeegnerDivisor h = heegner_points(cfg.N, cfg.disc);
    std::ostringstream t;
    t << "disc " << h.disc << ": " << h.count() << " points, weight " << rational_to_string(h.weight_per_point)
      << ", roots";
    for (auto b : h.roots) t << ' ' << b;
    t << '\n';
    emit(cfg, out, h.to_json(), t.str());
    return kOk;
  }
  const CanonicalDecomposition c = canonical_decomposition(cfg.N);
  std::ostringstream t;
  t << "omega = " << c.mult_infty << "[inf] - H_i - 2 H_j\n"
    << "H_i: " << c.h_i.count() << " points of disc -4\n"
    << "H_j: " << c.h_j.count() << " points of disc -3\n"
    << "degree " << rational_to_string(c.degree()) << '\n';
  emit(cfg, out, c.to_json(), t.str());
  return kOk;
}

int cmd_omega_f(const Config& cfg, std::ostream& out) {
  const auto forms = ingest_file(cfg.eigenform);
  OmegaOptions opts;
  opts.series.terms = cfg.terms;
  opts.quad_order = cfg.quad_order;
  if (cfg.tolerance >= 0) opts.height_tolerance = cfg.tolerance;
  ojson arr = ojson::array();
  std::ostringstream t;
  for (const auto& f : forms) {
    if (cfg.N != 0 && f.level != cfg.N) continue;
    const OmegaF w = omega_f_sq(f, opts);
    ojson j = {{"label", f.label}, {"level", f.level}};
    const ojson body = w.to_json();
    for (const auto& [k, v] : body.items()) j[k] = v;
    arr.push_back(j);
    t << std::setprecision(12) << f.label << ": omega_f^2 = " << w.omega_f_sq << "  (h_i = " << w.h_i
      << ", h_j = " << w.h_j << ", (f,f) = " << w.values.petersson << ")\n";
  }
  emit(cfg, out, arr, t.str());
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const VerificationReport rep = verify_analysis(cfg.radial, cfg.angular, cfg.tolerance >= 0 ? cfg.tolerance : 1e-6);
  std::ostringstream t;
  for (const auto& c : rep.checks) {
    t << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(58) << c.name << std::right << std::setprecision(12)
      << std::setw(20) << c.lhs << std::setw(20) << c.rhs << "  residual " << std::setprecision(3) << c.residual << '\n';
  }
  t << (rep.all_passed() ? "all checks passed\n" : "some checks FAILED\n");
  emit(cfg, out, rep.to_json(), t.str());
  return rep.all_passed() ? kOk : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Eisenstein arithmetic intersection calculator for X_0(N)", "x0calc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "decimal digits for numeric output")->check(CLI::Range(1, 40));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto level = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("N", cfg.N, "squarefree level");
    if (required) o->required();
  };
  auto convention = [&](CLI::App* sub) {
    sub->add_option("--convention", cfg.convention, "value of <DINF, G(p)>: lemma (LOG(p)) or orthogonal (0)")
        ->check(CLI::IsMember({"lemma", "orthogonal"}));
  };

  auto* inv = app.add_subcommand("invariants", "index, elliptic points, cusps and genus of Gamma_0(N)");
  level(inv);
  common(inv);
  auto* gr = app.add_subcommand("gram", "intersection matrix on the Eisenstein basis");
  level(gr);
  common(gr);
  convention(gr);
  auto* oe = app.add_subcommand("omega-eis", "self-intersection of the Eisenstein part of the dualizing sheaf");
  level(oe);
  common(oe);
  convention(oe);
  auto* he = app.add_subcommand("hecke", "Hecke operator T_l or Atkin-Lehner involution w_d");
  level(he);
  common(he);
  convention(he);
  auto* lopt = he->add_option("--l", cfg.l, "prime not dividing N");
  auto* dopt = he->add_option("--d", cfg.d, "Hall divisor of N");
  lopt->excludes(dopt);
  auto* hg = app.add_subcommand("heegner", "Heegner points of discriminant -3 or -4");
  level(hg);
  common(hg);
  hg->add_option("--disc", cfg.disc, "discriminant")->check(CLI::IsMember({-3, -4}));
  auto* of = app.add_subcommand("omega-f", "heights and omega_f^2 for ingested newforms");
  level(of, false);
  common(of);
  of->add_option("--eigenform", cfg.eigenform, "eigenform file (JSON lines)")->required();
  of->add_option("--tolerance", cfg.tolerance, "tolerance for clamping negative heights");
  of->add_option("--terms", cfg.terms, "series length (0: automatic)");
  of->add_option("--quad-order", cfg.quad_order, "Petersson quadrature order")->check(CLI::Range(4, 512));
  auto* va = app.add_subcommand("verify-analysis", "certified disc-model checks");
  common(va);
  va->add_option("--tolerance", cfg.tolerance, "absolute tolerance per check");
  va->add_option("--radial", cfg.radial, "radial Gauss nodes")->check(CLI::Range(4, 4096));
  va->add_option("--angular", cfg.angular, "angular nodes")->check(CLI::Range(8, 8192));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  if (he->parsed() && lopt->count() + dopt->count() != 1) {
    err << "usage error: hecke needs exactly one of --l, --d\n";
    return kUsageError;
  }

  try {
    if (inv->parsed()) return cmd_invariants(cfg, out);
    if (gr->parsed()) return cmd_gram(cfg, out);
    if (oe->parsed()) return cmd_omega_eis(cfg, out);
    if (he->parsed()) return cmd_hecke(cfg, out);
    if (hg->parsed()) return cmd_heegner(cfg, out);
    if (of->parsed()) return cmd_omega_f(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    err << ojson{{"error", std::string(e.name())}, {"message", e.what()}}.dump() << '\n';
    return kDomainError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace x0calc::cli
