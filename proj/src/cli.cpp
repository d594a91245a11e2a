#include "xop/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "xop/classical.hpp"
#include "xop/gs_oracle.hpp"

namespace xop::cli {

namespace {

std::string sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct Sink {
  std::ostream& out;
  std::string path;

  // Writes to --out when given, else to the command's stdout stream.
  void write(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    file << text;
  }
};

struct Common {
  std::string format;
  std::string out_path;
  double tol = kDefaultTolerance;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", c.out_path, "Write output to PATH instead of stdout");
  cmd->add_option("--tol", c.tol, "Root refinement tolerance")->check(CLI::Range(1e-15, 1e-6));
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

std::string zero_set_csv(const ZeroSet& zs) {
  std::ostringstream os;
  os << "kind,value,residual\n";
  std::size_t r = 0;
  for (double v : zs.regular) os << "regular," << sig(v, 17) << ',' << sig(zs.residuals[r++], 17) << '\n';
  for (double v : zs.exceptional) os << "exceptional," << sig(v, 17) << ',' << sig(zs.residuals[r++], 17) << '\n';
  return os.str();
}

std::string zero_set_text(const ZeroSet& zs) {
  std::ostringstream os;
  os << family_name(zs.family);
  if (zs.family == XopFamily::xm_laguerre_i) os << " m=" << zs.m;
  os << " n=" << zs.n << " alpha=" << sig(zs.alpha, 12);
  if (zs.beta) os << " beta=" << sig(*zs.beta, 12);
  os << "\nregular:    ";
  for (double v : zs.regular) os << ' ' << sig(v, 12);
  os << "\nexceptional:";
  for (double v : zs.exceptional) os << ' ' << sig(v, 12);
  os << '\n';
  for (const auto& w : zs.warnings) os << "warning: " << w << '\n';
  return os.str();
}

std::string report_text(const lab::Report& report) {
  std::ostringstream os;
  int failed = 0;
  int findings = 0;
  for (const auto& c : report.checks) {
    std::string tag = c.passed ? "PASS" : "FAIL";
    if (c.exploratory && !c.passed) {
      tag = "FINDING";
      ++findings;
    } else if (!c.passed) {
      ++failed;
    }
    os << std::left << std::setw(8) << tag << c.name;
    for (const auto& p : c.params) os << ' ' << p.name << '=' << sig(p.value, 10);
    if (c.exploratory) os << " [exploratory]";
    os << " worst=" << sig(c.worst_residual, 6) << " | " << c.detail << '\n';
  }
  os << "suite " << report.suite << ": " << report.checks.size() << " checks, " << failed << " failed, " << findings
     << " findings\n";
  return os.str();
}

std::string report_csv(const lab::Report& report) {
  std::ostringstream os;
  os << "name,params,passed,exploratory,worst_residual\n";
  for (const auto& c : report.checks) {
    os << c.name << ',';
    for (std::size_t i = 0; i < c.params.size(); ++i) os << (i ? ";" : "") << c.params[i].name << '=' << sig(c.params[i].value, 17);
    os << ',' << (c.passed ? "true" : "false") << ',' << (c.exploratory ? "true" : "false") << ','
       << sig(c.worst_residual, 17) << '\n';
  }
  return os.str();
}

std::string render(const lab::Report& report, const std::string& format) {
  if (format == "json") return dump(to_json(report));
  if (format == "csv") return report_csv(report);
  return report_text(report);
}

// ---------------------------------------------------------------------------

std::string limit_render(const lab::LimitTable& tab, const lab::CheckResult& verdict, double alpha,
                         const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["target"] = tab.target;
    j["n"] = tab.n;
    if (tab.target == "laguerre") j["alpha"] = alpha;
    j["sequence"] = tab.sequence;
    j["ks"] = tab.ks;
    j["limits"] = tab.limits;
    j["scaled"] = tab.scaled;
    j["errors"] = tab.errors;
    j["passed"] = verdict.passed;
    j["detail"] = verdict.detail;
    return dump(j);
  }
  std::ostringstream os;
  const char* param = tab.target == "laguerre" ? "beta" : "alpha";
  if (format == "csv") {
    os << param << ",k,scaled,limit,error\n";
    for (std::size_t j = 0; j < tab.sequence.size(); ++j)
      for (std::size_t i = 0; i < tab.ks.size(); ++i)
        os << sig(tab.sequence[j], 17) << ',' << tab.ks[i] << ',' << sig(tab.scaled[j][i], 17) << ','
           << sig(tab.limits[i], 17) << ',' << sig(tab.errors[j][i], 17) << '\n';
    return os.str();
  }
  os << "limit toward " << tab.target << ", n=" << tab.n << '\n';
  os << std::left << std::setw(6) << "k" << std::setw(14) << "limit";
  for (double s : tab.sequence) os << std::setw(14) << (std::string(param) + "=" + sig(s, 3));
  os << '\n';
  for (std::size_t i = 0; i < tab.ks.size(); ++i) {
    os << std::setw(6) << tab.ks[i] << std::setw(14) << sig(tab.limits[i], 6);
    for (std::size_t j = 0; j < tab.sequence.size(); ++j) os << std::setw(14) << sig(tab.errors[j][i], 4);
    os << '\n';
  }
  os << (verdict.passed ? "PASS" : "FAIL") << ": " << verdict.detail << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

struct ZerosArgs {
  Common common;
  std::string family;
  int m = 1;
  int n = 0;
  double alpha = 0.0;
  std::optional<double> beta;
};

int cmd_zeros(const ZerosArgs& a, const Sink& sink, std::ostream& err) {
  const auto family = parse_family(a.family);
  if (!family) {
    err << "error: unknown family '" << a.family << "'\n";
    return kUsage;
  }
  ZeroSet zs;
  switch (*family) {
    case XopFamily::x1_laguerre:
      zs = find_zeros_x1_laguerre(a.n, a.alpha, a.common.tol);
      break;
    case XopFamily::x1_jacobi:
      if (!a.beta) {
        err << "error: --beta is required for x1-jacobi\n";
        return kUsage;
      }
      zs = find_zeros_x1_jacobi(a.n, JacobiParams(a.alpha, *a.beta), a.common.tol);
      break;
    case XopFamily::xm_laguerre_i:
      zs = find_zeros_xm_laguerre(a.m, a.n, a.alpha, a.common.tol);
      break;
  }
  for (const auto& w : zs.warnings) err << "warning: " << w << '\n';
  if (a.common.format == "json") {
    sink.write(dump(to_json(zs)));
  } else if (a.common.format == "csv") {
    sink.write(zero_set_csv(zs));
  } else {
    sink.write(zero_set_text(zs));
  }
  return kOk;
}

struct TableArgs {
  Common common;
  int m = 4;
  double alpha = 1.0;
  std::vector<int> ns{6, 10, 14};
};

int cmd_table(const TableArgs& a, const Sink& sink) {
  const auto table = compute_table(a.m, a.alpha, a.ns);
  if (a.common.format == "json") {
    nlohmann::ordered_json j;
    j["m"] = table.m;
    j["alpha"] = table.alpha;
    j["ns"] = table.ns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < table.values.size(); ++k) {
      nlohmann::ordered_json row;
      row["k"] = k + 1;
      row["values"] = table.values[k];
      row["limit"] = table.limits[k];
      rows.push_back(row);
    }
    j["rows"] = rows;
    sink.write(dump(j));
  } else if (a.common.format == "csv") {
    sink.write(table_csv(table));
  } else {
    std::ostringstream os;
    os << "exceptional zeros z_{m,n,k}, m=" << table.m << ", alpha=" << sig(table.alpha, 6) << '\n';
    os << std::left << std::setw(6) << "k";
    for (int n : table.ns) os << std::setw(12) << ("n=" + std::to_string(n));
    os << "limit\n";
    for (std::size_t k = 0; k < table.values.size(); ++k) {
      os << std::setw(6) << k + 1;
      for (double v : table.values[k]) os << std::setw(12) << sig(v, 6);
      os << sig(table.limits[k], 6) << '\n';
    }
    sink.write(os.str());
  }
  return kOk;
}

struct VerifyArgs {
  Common common;
  std::string suite;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<int> ns;
  int n_max = 0;
  int m = 0;
};

int cmd_verify(const VerifyArgs& a, const Sink& sink, std::ostream& err) {
  const auto suite = lab::parse_suite(a.suite);
  if (!suite) {
    err << "error: unknown suite '" << a.suite << "'\n";
    return kUsage;
  }
  lab::SuiteOptions opts;
  if (!a.alphas.empty()) opts.alphas = a.alphas;
  if (!a.betas.empty()) opts.betas = a.betas;
  if (!a.ns.empty()) opts.ns = a.ns;
  if (a.n_max > 0) opts.n_max = a.n_max;
  if (a.m > 0) opts.m = a.m;
  const lab::Report report = lab::run_suite(*suite, opts);
  sink.write(render(report, a.common.format));
  if (report.has_findings()) err << "note: exploratory checks reported FINDINGs\n";
  return report.gating_passed() ? kOk : kCheckFailed;
}

struct LimitArgs {
  Common common;
  std::string target;
  int n = 4;
  double alpha = 1.0;
  std::vector<double> betas;
  std::vector<double> alphas;
};

int cmd_limit(const LimitArgs& a, const Sink& sink, std::ostream& err) {
  lab::LimitTable tab;
  if (a.target == "laguerre") {
    if (a.betas.empty()) {
      err << "error: --betas is required for --target laguerre\n";
      return kUsage;
    }
    tab = lab::jacobi_to_laguerre_table(a.n, a.alpha, a.betas);
  } else {
    if (a.alphas.empty()) {
      err << "error: --alphas is required for --target hermite\n";
      return kUsage;
    }
    tab = lab::laguerre_to_hermite_table(a.n, a.alphas);
  }
  const auto verdict = lab::check_limit_table(tab);
  sink.write(limit_render(tab, verdict, a.alpha, a.common.format));
  return verdict.passed ? kOk : kCheckFailed;
}

struct OracleArgs {
  Common common;
  std::string family;
  int n = 0;
  double alpha = 0.0;
  std::optional<double> beta;
};

int cmd_oracle(const OracleArgs& a, const Sink& sink, std::ostream& err) {
  const auto family = parse_family(a.family);
  if (!family || *family == XopFamily::xm_laguerre_i) {
    err << "error: the oracle supports x1-laguerre and x1-jacobi\n";
    return kUsage;
  }
  oracle::GsSequence seq;
  ZeroSet from_oracle;
  ZeroSet from_formula;
  if (*family == XopFamily::x1_laguerre) {
    seq = oracle::x1_laguerre_sequence(a.n, a.alpha);
    from_oracle = oracle::oracle_zeros_x1_laguerre(a.n, a.alpha, a.common.tol);
    from_formula = find_zeros_x1_laguerre(a.n, a.alpha, a.common.tol);
  } else {
    if (!a.beta) {
      err << "error: --beta is required for x1-jacobi\n";
      return kUsage;
    }
    const JacobiParams p(a.alpha, *a.beta);
    seq = oracle::x1_jacobi_sequence(a.n, p);
    from_oracle = oracle::oracle_zeros_x1_jacobi(a.n, p, a.common.tol);
    from_formula = find_zeros_x1_jacobi(a.n, p, a.common.tol);
  }
  const auto zo = from_oracle.all();
  const auto zf = from_formula.all();
  double max_diff = 0.0;
  for (std::size_t i = 0; i < zo.size(); ++i) max_diff = std::max(max_diff, std::abs(zo[i] - zf[i]));
  const double orth = seq.orthogonality_residual();
  const bool ok = max_diff <= 1e-8 && orth <= 1e-8;
  const auto monic = seq.polys.back().to_monomial().monic();

  if (a.common.format == "json") {
    nlohmann::ordered_json j;
    j["family"] = a.family;
    j["n"] = a.n;
    j["alpha"] = a.alpha;
    if (a.beta) j["beta"] = *a.beta;
    j["coefficients"] = monic.coeffs();
    j["oracle_zeros"] = zo;
    j["formula_zeros"] = zf;
    j["max_zero_difference"] = max_diff;
    j["orthogonality_residual"] = orth;
    j["rule_order"] = seq.rule_order;
    j["passed"] = ok;
    sink.write(dump(j));
  } else {
    std::ostringstream os;
    os << "monic coefficients (ascending powers):";
    for (double c : monic.coeffs()) os << ' ' << sig(c, 12);
    os << "\noracle zeros: ";
    for (double z : zo) os << ' ' << sig(z, 12);
    os << "\nformula zeros:";
    for (double z : zf) os << ' ' << sig(z, 12);
    os << "\nmax zero difference " << sig(max_diff, 4) << ", orthogonality residual " << sig(orth, 4)
       << ", rule order " << seq.rule_order << '\n'
       << (ok ? "PASS" : "FAIL") << '\n';
    sink.write(os.str());
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

nlohmann::ordered_json to_json(const ZeroSet& zs) {
  nlohmann::ordered_json j;
  j["family"] = family_name(zs.family);
  if (zs.family == XopFamily::xm_laguerre_i) j["m"] = zs.m;
  j["n"] = zs.n;
  j["alpha"] = zs.alpha;
  if (zs.beta) j["beta"] = *zs.beta;
  j["regular"] = zs.regular;
  j["exceptional"] = zs.exceptional;
  j["residuals"] = zs.residuals;
  j["tolerance"] = zs.tolerance;
  return j;
}

ZeroSet zero_set_from_json(const nlohmann::json& j) {
  ZeroSet zs;
  const auto family = parse_family(j.at("family").get<std::string>());
  if (!family) throw std::invalid_argument("unknown family in ZeroSet JSON");
  zs.family = *family;
  if (j.contains("m")) zs.m = j.at("m").get<int>();
  zs.n = j.at("n").get<int>();
  zs.alpha = j.at("alpha").get<double>();
  if (j.contains("beta")) zs.beta = j.at("beta").get<double>();
  zs.regular = j.at("regular").get<std::vector<double>>();
  zs.exceptional = j.at("exceptional").get<std::vector<double>>();
  zs.residuals = j.at("residuals").get<std::vector<double>>();
  zs.tolerance = j.at("tolerance").get<double>();
  return zs;
}

nlohmann::ordered_json to_json(const lab::Report& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& p : c.params) params[p.name] = p.value;
    cj["params"] = params;
    cj["passed"] = c.passed;
    cj["exploratory"] = c.exploratory;
    cj["worst_residual"] = c.worst_residual;
    cj["detail"] = (c.exploratory && !c.passed) ? "FINDING: " + c.detail : c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["all_passed"] = report.gating_passed();
  return j;
}

ExceptionalTable compute_table(int m, double alpha, const std::vector<int>& ns) {
  ExceptionalTable t;
  t.m = m;
  t.alpha = alpha;
  t.ns = ns;
  t.values.assign(std::size_t(m), {});
  for (int n : ns) {
    auto exc = find_zeros_xm_laguerre(m, n, alpha).exceptional;
    std::reverse(exc.begin(), exc.end());
    for (int k = 0; k < m; ++k) t.values[std::size_t(k)].push_back(exc[std::size_t(k)]);
  }
  for (double x : classical::zeros(classical::Family::laguerre(alpha - 1.0), m)) t.limits.push_back(-x);
  return t;
}

std::string table_csv(const ExceptionalTable& t) {
  std::ostringstream os;
  os << 'k';
  for (int n : t.ns) os << ",n=" << n;
  os << ",limit\n";
  for (std::size_t k = 0; k < t.values.size(); ++k) {
    os << k + 1;
    for (double v : t.values[k]) os << ',' << sig(v, 6);
    os << ',' << sig(t.limits[k], 6) << '\n';
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of exceptional orthogonal polynomials: compute, tabulate, verify"};
  app.name("xop");
  app.require_subcommand(1);

  ZerosArgs za;
  auto* zeros = app.add_subcommand("zeros", "Regular and exceptional zeros of one polynomial");
  add_common(zeros, za.common, "json");
  zeros->add_option("--family", za.family, "x1-laguerre | x1-jacobi | xm-laguerre-i")->required();
  zeros->add_option("--m", za.m, "Number of exceptional zeros (xm-laguerre-i)");
  zeros->add_option("--n", za.n, "Degree")->required();
  zeros->add_option("--alpha", za.alpha, "alpha")->required();
  zeros->add_option("--beta", za.beta, "beta (x1-jacobi)");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Exceptional Xm-Laguerre zeros against their limits");
  add_common(table, ta.common, "csv");
  table->add_option("--m", ta.m, "m");
  table->add_option("--alpha", ta.alpha, "alpha");
  table->add_option("--n", ta.ns, "Degrees, comma separated")->delimiter(',');

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, va.common, "text");
  verify->add_option("--suite", va.suite, "thm1 | thm2 | thm3 | identities | lemma | conjecture | open-problem | remark | all")
      ->required();
  verify->add_option("--alpha,--alphas", va.alphas, "alpha grid, comma separated")->delimiter(',');
  verify->add_option("--beta,--betas", va.betas, "beta grid, comma separated")->delimiter(',');
  verify->add_option("--n", va.ns, "Degree sequence, comma separated")->delimiter(',');
  verify->add_option("--n-max", va.n_max, "Largest degree");
  verify->add_option("--m", va.m, "m for Xm-Laguerre suites");

  LimitArgs la;
  auto* limit = app.add_subcommand("limit", "Scaled-zero limit experiments");
  add_common(limit, la.common, "text");
  limit->add_option("--target", la.target, "laguerre | hermite")->required()->check(CLI::IsMember({"laguerre", "hermite"}));
  limit->add_option("--n", la.n, "Degree");
  limit->add_option("--alpha", la.alpha, "alpha (laguerre target)");
  limit->add_option("--betas", la.betas, "Ascending beta sequence")->delimiter(',');
  limit->add_option("--alphas", la.alphas, "Ascending alpha sequence")->delimiter(',');

  OracleArgs oa;
  auto* orc = app.add_subcommand("oracle", "Gram-Schmidt reconstruction against the closed formulas");
  add_common(orc, oa.common, "text");
  orc->add_option("--family", oa.family, "x1-laguerre | x1-jacobi")->required();
  orc->add_option("--n", oa.n, "Degree")->required();
  orc->add_option("--alpha", oa.alpha, "alpha")->required();
  orc->add_option("--beta", oa.beta, "beta (x1-jacobi)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (zeros->parsed()) return cmd_zeros(za, {out, za.common.out_path}, err);
    if (table->parsed()) return cmd_table(ta, {out, ta.common.out_path});
    if (verify->parsed()) return cmd_verify(va, {out, va.common.out_path}, err);
    if (limit->parsed()) return cmd_limit(la, {out, la.common.out_path}, err);
    if (orc->parsed()) return cmd_oracle(oa, {out, oa.common.out_path}, err);
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const IsolationFailure& e) {
    err << "isolation failure: " << e.what() << " (" << e.partial().size() << " partial brackets)\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace xop::cli
