// Command-line front end: constants, weyl, bubble, landscape, saddle,
// curvature-check, classify and verify-all subcommands.  Artifacts go to
// stdout (or --out); diagnostics go to stderr.
// Exit codes: 0 ok, 1 configuration error, 2 I/O error, 3 failed check.

#include "CLI11.hpp"
#include "json.hpp"

#include "yamabe/bubble.hpp"
#include "yamabe/classify.hpp"
#include "yamabe/constants.hpp"
#include "yamabe/curvature.hpp"
#include "yamabe/energy.hpp"
#include "yamabe/oracle.hpp"
#include "yamabe/rng.hpp"
#include "yamabe/saddle.hpp"
#include "yamabe/verify.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace yamabe;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot open output file: " + out_path);
  out << text;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open spec file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
  return j;
}

// File format: {"kind":"diagonal","A":[[...],...]} or
// {"kind":"full","n":N,"entries":[[i,j,k,l,value],...]} with 1-based indices;
// omitted entries are zero.  "full" specs are symmetrized unless raw = true.
WeylForm load_weyl_spec(const std::string& path, bool raw = false) {
  const json j = load_json_file(path);
  const std::string kind = j.value("kind", "");
  if (kind == "diagonal") {
    const auto& rows = j.at("A");
    const int n = static_cast<int>(rows.size());
    Mat A(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        throw IoError("diagonal spec: A must be square");
      for (int k = 0; k < n; ++k) A(i, k) = rows[i][k].get<double>();
    }
    return diagonal_weyl(A);
  }
  if (kind == "full") {
    const int n = j.at("n").get<int>();
    if (n < 2) throw IoError("full spec: implausible dimension");
    Rank4 rawt(n);
    for (const auto& e : j.at("entries")) {
      if (e.size() != 5) throw IoError("full spec: entries are [i,j,k,l,value]");
      const int i = e[0].get<int>() - 1, jj = e[1].get<int>() - 1,
                k = e[2].get<int>() - 1, l = e[3].get<int>() - 1;
      if (i < 0 || jj < 0 || k < 0 || l < 0 || i >= n || jj >= n || k >= n || l >= n)
        throw IoError("full spec: index out of range");
      rawt(i, jj, k, l) = e[4].get<double>();
    }
    if (raw) {
      WeylForm W;
      W.n = n;
      W.w = rawt;
      return W;
    }
    return project_weyl(rawt);
  }
  throw IoError("weyl spec: kind must be \"diagonal\" or \"full\"");
}

json validation_to_json(const WeylValidation& v) {
  return json{{"antisym_first", v.antisym_first},
              {"antisym_second", v.antisym_second},
              {"pair_sym", v.pair_sym},
              {"bianchi", v.bianchi},
              {"trace", v.trace},
              {"norm_sq", v.norm_sq},
              {"accepted", v.accepted},
              {"trivial", v.trivial}};
}

std::vector<double> parse_range(const std::string& spec) {
  // "a:b:steps" inclusive
  double a, b;
  int steps;
  char c1, c2;
  std::istringstream is(spec);
  if (!(is >> a >> c1 >> b >> c2 >> steps) || c1 != ':' || c2 != ':' || steps < 1)
    throw CLI::ValidationError("range must be a:b:steps");
  std::vector<double> out;
  for (int i = 0; i < steps; ++i)
    out.push_back(steps == 1 ? a : a + (b - a) * i / (steps - 1.0));
  return out;
}

int run_constants(int n, bool exact, bool as_json, const std::string& out) {
  const ConstantsBundle b = constants_bundle(n);
  if (as_json) {
    json j{{"n", n},      {"omega", b.omega},   {"kn_pow", b.kn_pow},
           {"lambda_n", b.lambda_n}, {"cn", b.cn}};
    j["an"] = b.an ? json(*b.an) : json(nullptr);
    if (exact) {
      json e{{"omega", b.omega_exact.to_string()},
             {"kn_pow", b.kn_pow_exact.to_string()},
             {"lambda_n", b.lambda_exact.to_string()}};
      std::ostringstream cn;
      cn << b.cn_exact;
      e["cn"] = cn.str();
      if (b.an_exact) e["an"] = b.an_exact->to_string();
      if (n == 10) {
        // the closed identity relating a_10 to omega_9
        e["a10_identity"] =
            "2 * a_10 / (10^4 * 8^6) = (5/567) * omega_9 = " +
            (ExactScalar(BigRat(5) / 567) * b.omega_exact).to_string();
      }
      j["exact"] = e;
    }
    emit(j.dump(2), out);
    return 0;
  }
  std::ostringstream os;
  os.precision(17);
  os << "n        = " << n << "\n";
  os << "omega    = " << b.omega << (exact ? "  [" + b.omega_exact.to_string() + "]" : "")
     << "\n";
  os << "kn_pow   = " << b.kn_pow
     << (exact ? "  [" + b.kn_pow_exact.to_string() + "]" : "") << "\n";
  os << "lambda_n = " << b.lambda_n
     << (exact ? "  [" + b.lambda_exact.to_string() + "]" : "") << "\n";
  os << "cn       = " << b.cn << "\n";
  if (b.an) {
    os << "an       = " << *b.an
       << (exact && b.an_exact ? "  [" + b.an_exact->to_string() + "]" : "") << "\n";
  } else {
    os << "an       = undefined for n < 7\n";
  }
  if (exact && n == 10)
    os << "identity: 2 * a_10 / (10^4 * 8^6) = (5/567) * omega_9\n";
  emit(os.str(), out);
  return 0;
}

int run_bubble_check(int n, const std::string& spec, std::uint64_t seed,
                     std::uint64_t budget, const std::string& out) {
  const WeylForm W = spec.empty() ? diagonal_weyl(canonical_diagonal_matrix(n))
                                  : load_weyl_spec(spec);
  if (W.n != n) throw CLI::ValidationError("spec dimension does not match --dim");
  CounterRng rng{seed, 0, 0};
  json report;
  report["n"] = n;

  // bubble equation residual at random points
  {
    Vec z(n, 0.0);
    z[0] = 0.15;
    const BubbleParams p(n, 1.2, z);
    double worst = 0.0;
    Vec x(n);
    for (int rep = 0; rep < 1000; ++rep) {
      for (int i = 0; i < n; ++i) x[i] = 3.0 * rng.next_symmetric();
      const Mat H = bubble_hessian(p, x);
      double lap = 0.0;
      for (int i = 0; i < n; ++i) lap -= H(i, i);
      const double rhs = std::pow(bubble_eval(p, x), (n + 2.0) / (n - 2.0));
      worst = std::max(worst, std::fabs(lap - rhs) / std::max(rhs, 1e-30));
    }
    report["bubble_equation_max_rel_residual"] = worst;
  }
  // kernel scaling relations against finite differences
  {
    const BubbleParams p(n, 1.1, Vec(n, 0.0));
    Vec x(n, 0.2);
    const double step = 1e-4;
    double worst = 0.0;
    {
      const BubbleParams pp(n, p.t + step, p.z), pm(n, p.t - step, p.z);
      const double fd = (bubble_eval(pp, x) - bubble_eval(pm, x)) / (2.0 * step);
      worst = std::max(worst, std::fabs(kernel_z(0, p, x) - 2.0 / (n - 2.0) * p.t * fd));
    }
    for (int j = 1; j <= n; ++j) {
      Vec zp(n, 0.0), zm(n, 0.0);
      zp[j - 1] = step;
      zm[j - 1] = -step;
      const BubbleParams pp(n, p.t, zp), pm(n, p.t, zm);
      const double fd = (bubble_eval(pp, x) - bubble_eval(pm, x)) / (2.0 * step);
      worst = std::max(worst, std::fabs(kernel_z(j, p, x) + double(n) * p.t * fd));
    }
    report["kernel_fd_max_residual"] = worst;
  }
  // corrector residual and orthogonality
  {
    double worst = 0.0;
    Vec x(n);
    for (int rep = 0; rep < 100; ++rep) {
      for (int i = 0; i < n; ++i) x[i] = 3.0 * rng.next_symmetric();
      worst = std::max(worst, std::fabs(corrector_residual(W, rep % n, (rep + 1) % n, x)));
    }
    report["corrector_max_residual"] = worst;
    json orth = json::array();
    for (int j : {0, 1, n}) {
      const OracleResult r = corrector_kernel_orthogonality(W, 0, 1, j, budget, seed + j);
      orth.push_back({{"j", j},
                      {"value", r.value},
                      {"standard_error", r.standard_error},
                      {"within_3se", std::fabs(r.value) <= 3.0 * r.standard_error}});
    }
    report["kernel_orthogonality"] = orth;
  }
  // the annihilation identity
  {
    Vec z(n, 0.0);
    z[0] = 0.2;
    const BubbleParams p(n, 1.3, z);
    const OracleResult r = annihilation_integral(W, p, budget, seed + 31);
    report["annihilation"] = {{"value", r.value},
                              {"standard_error", r.standard_error},
                              {"within_3se", std::fabs(r.value) <= 3.0 * r.standard_error}};
  }
  emit(report.dump(2), out);
  return 0;
}

int run_landscape(int n, const std::string& spec, double u0, const std::string& t_range,
                  const std::string& z_range, const std::string& z_dirs,
                  std::uint64_t budget, std::uint64_t seed, const std::string& out) {
  const WeylForm W = spec.empty() ? diagonal_weyl(canonical_diagonal_matrix(n))
                                  : load_weyl_spec(spec);
  if (W.n != n) throw CLI::ValidationError("spec dimension does not match --dim");
  const ModelData model(W, u0);
  const std::vector<double> ts = parse_range(t_range);
  const std::vector<double> ss = parse_range(z_range);
  std::vector<Vec> dirs;
  if (!z_dirs.empty()) {
    const json j = load_json_file(z_dirs);
    for (const auto& row : j) {
      Vec d = row.get<std::vector<double>>();
      if (static_cast<int>(d.size()) != n) throw IoError("direction dimension mismatch");
      const double nr = std::sqrt(norm2_sq(d));
      if (nr == 0.0) throw IoError("zero direction");
      for (double& v : d) v /= nr;
      dirs.push_back(d);
    }
  } else {
    Vec e(n, 0.0);
    e[0] = 1.0;
    dirs.push_back(e);
  }
  std::ostringstream csv;
  csv.precision(12);
  csv << "t,s,direction_index,F,F_err\n";
  for (double t : ts)
    for (size_t d = 0; d < dirs.size(); ++d)
      for (double s : ss) {
        Vec z(n);
        for (int i = 0; i < n; ++i) z[i] = s * dirs[d][i];
        const AssembledEnergy a = f_assembled(model, t, z, budget, seed);
        csv << t << "," << s << "," << d << "," << a.value << "," << a.standard_error
            << "\n";
      }
  emit(csv.str(), out);
  return 0;
}

json certificate_to_json(const SaddleCertificate& c) {
  return json{{"t0", c.t0},
              {"f_at_min", c.f_at_min},
              {"hess_t", c.hess_t},
              {"eta", c.eta},
              {"eps_box", c.eps_box},
              {"edge_min", c.edge_min},
              {"rim_max", c.rim_max},
              {"box_max", c.box_max},
              {"slope_left", c.slope_left},
              {"slope_right", c.slope_right},
              {"margin", c.margin},
              {"sampling_gap", c.sampling_gap},
              {"spot_check_error", c.spot_check_error},
              {"spot_check_bound", c.spot_check_bound},
              {"remainder_ok", c.remainder_ok},
              {"verdict", c.pass ? "pass" : "fail"},
              {"violated", c.violated}};
}

int run_saddle(int n, const std::string& spec, double u0, double eta, double eps,
               std::uint64_t seed, std::uint64_t budget, bool as_json,
               const std::string& out) {
  const WeylForm W = spec.empty() ? diagonal_weyl(canonical_diagonal_matrix(n))
                                  : load_weyl_spec(spec);
  if (W.n != n) throw CLI::ValidationError("spec dimension does not match --dim");
  const ModelData model(W, u0);
  const SaddleCertificate cert =
      (eta > 0.0 && eps > 0.0)
          ? certify_saddle(model, eta, eps, 4096, seed, budget)
          : certify_saddle_auto(model, seed, budget);
  if (as_json) {
    emit(certificate_to_json(cert).dump(2), out);
  } else {
    std::ostringstream os;
    os.precision(12);
    os << "t0 = " << cert.t0 << ", F(t0,0) = " << cert.f_at_min
       << ", d2F/dt2 = " << cert.hess_t << "\n"
       << "box: eta = " << cert.eta << ", eps = " << cert.eps_box << "\n"
       << "edge_min = " << cert.edge_min << ", rim_max = " << cert.rim_max
       << ", box_max = " << cert.box_max << "\n"
       << "slopes: " << cert.slope_left << " / " << cert.slope_right
       << ", margin = " << cert.margin << "\n"
       << "verdict: " << (cert.pass ? "pass" : "fail (" + cert.violated + ")") << "\n";
    emit(os.str(), out);
  }
  return cert.pass ? 0 : 3;
}

int run_curvature_check(int n, const std::string& spec, const std::string& eps_list,
                        int points, double step, const std::string& out) {
  const WeylForm W = spec.empty() ? diagonal_weyl(canonical_diagonal_matrix(n))
                                  : load_weyl_spec(spec);
  if (W.n != n) throw CLI::ValidationError("spec dimension does not match --dim");
  std::vector<double> epses;
  {
    std::istringstream is(eps_list);
    std::string tok;
    while (std::getline(is, tok, ',')) epses.push_back(std::stod(tok));
  }
  if (epses.size() < 2) throw CLI::ValidationError("need at least two eps values");
  json rows = json::array();
  CounterRng rng{4242, 0, 0};
  std::vector<Vec> xs;
  for (int p = 0; p < points; ++p) {
    Vec x(n);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = rng.next_symmetric();
      r2 += x[i] * x[i];
    }
    const double target = 0.1 + 0.4 * p / std::max(1, points - 1);
    const double f = target / std::sqrt(r2);
    for (double& v : x) v *= f;
    xs.push_back(x);
  }
  std::vector<std::vector<double>> inv(epses.size()), chris(epses.size()),
      scal(epses.size());
  std::vector<double> weyl_dev(epses.size()), center_dev(epses.size());
  for (size_t k = 0; k < epses.size(); ++k) {
    const MetricField m(W, epses[k]);
    for (const Vec& x : xs) {
      inv[k].push_back(inverse_expansion_remainder(m, x));
      chris[k].push_back(christoffel_expansion_remainder(m, x, step));
      scal[k].push_back(scalar_expansion_remainder(m, x, step) / (epses[k] * epses[k]));
    }
    weyl_dev[k] = weyl_deviation_at(m, xs.back(), step);
    center_dev[k] = weyl_linearization(m, step);
  }
  for (size_t k = 0; k + 1 < epses.size(); ++k) {
    json row;
    row["eps"] = epses[k];
    row["eps_next"] = epses[k + 1];
    json per_point = json::array();
    for (int p = 0; p < points; ++p) {
      per_point.push_back({{"inverse_ratio", inv[k][p] / inv[k + 1][p]},
                           {"christoffel_ratio", chris[k][p] / chris[k + 1][p]},
                           {"scalar_ratio", scal[k][p] / scal[k + 1][p]}});
    }
    row["points"] = per_point;
    row["weyl_deviation_ratio"] = weyl_dev[k] / weyl_dev[k + 1];
    row["weyl_center_deviation"] = center_dev[k];
    row["expected"] = {{"inverse", 8.0}, {"christoffel", 4.0}, {"scalar", 2.0},
                       {"weyl", 2.0}};
    rows.push_back(row);
  }
  emit(json{{"n", n}, {"step", step}, {"ratios", rows}}.dump(2), out);
  return 0;
}

int run_classify(int n, bool lcf, bool weyl_nonzero, const std::string& u0_vs,
                 const std::string& pert, bool as_json, const std::string& out) {
  GeometrySpec spec;
  spec.n = n;
  spec.lcf = lcf;
  spec.weyl_everywhere_nonzero = weyl_nonzero;
  spec.u0_vs_threshold = threshold_relation_from_string(u0_vs);
  spec.perturbation_sign = perturbation_sign_from_string(pert);
  const ClassifiedRegime res = classify(spec);
  if (as_json) {
    emit(json{{"n", n},
              {"lcf", lcf},
              {"weyl_everywhere_nonzero", weyl_nonzero},
              {"u0_vs_threshold", u0_vs},
              {"perturbation", pert},
              {"verdict", to_string(res.verdict)},
              {"rule", res.rule}}
             .dump(2),
         out);
  } else {
    emit(std::string(to_string(res.verdict)) + "  (" + res.rule + ")", out);
  }
  return 0;
}

int run_verify(int n, std::uint64_t seed, std::uint64_t budget, double tol_scale,
               bool as_json, const std::string& out) {
  VerifyConfig config;
  config.n = n;
  config.seed = seed;
  config.mc_budget = budget;
  config.tol_scale = tol_scale;
  const VerifyReport report = run_verify_all(config);
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"pass", c.pass},
                        {"detail", c.detail},
                        {"seconds", c.seconds}});
    emit(json{{"all_pass", report.all_pass},
              {"total_seconds", report.total_seconds},
              {"checks", checks}}
             .dump(2),
         out);
  } else {
    std::ostringstream os;
    for (const auto& c : report.checks) {
      os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " (" << c.seconds << "s)\n";
      if (!c.pass) os << "      " << c.detail << "\n";
    }
    os << (report.all_pass ? "all checks passed" : "checks failed") << "\n";
    emit(os.str(), out);
  }
  return report.all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and computation toolkit for reduced-energy blow-up analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 12345;
  std::uint64_t mc_samples = 200000;
  std::string out_path;
  app.add_option("--seed", seed, "RNG seed for every stochastic component");
  app.add_option("--mc-samples", mc_samples, "Monte Carlo sample budget");
  app.add_option("--out", out_path, "write the artifact to a file instead of stdout");

  // constants
  auto* c_cmd = app.add_subcommand("constants", "dimensional constants bundle");
  int c_dim = 11;
  bool c_exact = false, c_json = false;
  c_cmd->add_option("--dim", c_dim, "dimension n")->required();
  c_cmd->add_flag("--exact", c_exact, "include exact renderings");
  c_cmd->add_flag("--json", c_json, "emit JSON");

  // weyl
  auto* w_cmd = app.add_subcommand("weyl", "Weyl-form utilities");
  w_cmd->require_subcommand(1);
  std::string w_spec;
  int w_dim = 11;
  int w_samples = 100000;
  auto* wv = w_cmd->add_subcommand("validate", "validate a form against all symmetries");
  wv->add_option("--spec", w_spec, "weyl spec JSON")->required();
  auto* ws = w_cmd->add_subcommand("sample", "draw a random valid form");
  ws->add_option("--dim", w_dim, "dimension n")->required();
  auto* wc = w_cmd->add_subcommand("coercivity", "minimum of sum h^2 on the unit sphere");
  wc->add_option("--spec", w_spec, "weyl spec JSON")->required();
  wc->add_option("--samples", w_samples, "random sweep size");

  // bubble
  auto* b_cmd = app.add_subcommand("bubble", "bubble and corrector identities");
  b_cmd->require_subcommand(1);
  auto* bc = b_cmd->add_subcommand("check", "run the identity battery");
  int b_dim = 11;
  std::string b_spec;
  bc->add_option("--dim", b_dim, "dimension n")->required();
  bc->add_option("--spec", b_spec, "weyl spec JSON (defaults to the diagonal family)");

  // landscape
  auto* l_cmd = app.add_subcommand("landscape", "sample F(t, s e) to CSV");
  int l_dim = 11;
  std::string l_spec, l_trange = "0.5:2.0:16", l_zrange = "0:0.2:5", l_dirs;
  double l_u0 = 1.0;
  l_cmd->add_option("--dim", l_dim, "dimension n")->required();
  l_cmd->add_option("--spec", l_spec, "weyl spec JSON (defaults to the diagonal family)");
  l_cmd->add_option("--u0", l_u0, "background value u0(x0)");
  l_cmd->add_option("--t-range", l_trange, "a:b:steps");
  l_cmd->add_option("--z-range", l_zrange, "a:b:steps");
  l_cmd->add_option("--z-dirs", l_dirs, "JSON file with direction vectors");

  // saddle
  auto* s_cmd = app.add_subcommand("saddle", "saddle certificate");
  int s_dim = 11;
  std::string s_spec;
  double s_u0 = 1.0, s_eta = 0.0, s_eps = 0.0;
  bool s_json = false;
  s_cmd->add_option("--dim", s_dim, "dimension n")->required();
  s_cmd->add_option("--spec", s_spec, "weyl spec JSON (defaults to the diagonal family)");
  s_cmd->add_option("--u0", s_u0, "background value u0(x0)");
  s_cmd->add_option("--eta", s_eta, "t half-width (auto shrink loop when omitted)");
  s_cmd->add_option("--eps", s_eps, "rim radius (auto shrink loop when omitted)");
  s_cmd->add_flag("--json", s_json, "emit JSON");

  // curvature-check
  auto* k_cmd = app.add_subcommand("curvature-check", "expansion remainder ratios");
  int k_dim = 11, k_points = 3;
  std::string k_spec, k_eps = "1e-2,5e-3,2.5e-3";
  double k_step = 0.03;
  k_cmd->add_option("--dim", k_dim, "dimension n")->required();
  k_cmd->add_option("--spec", k_spec, "weyl spec JSON (defaults to the diagonal family)");
  k_cmd->add_option("--eps", k_eps, "comma-separated amplitudes");
  k_cmd->add_option("--points", k_points, "evaluation points");
  k_cmd->add_option("--step", k_step, "finite-difference step");

  // classify
  auto* g_cmd = app.add_subcommand("classify", "compactness / blow-up regime");
  int g_dim = 11;
  bool g_lcf = false, g_wnz = false, g_json = false;
  std::string g_u0vs = "unknown", g_pert = "none";
  g_cmd->add_option("--dim", g_dim, "dimension n")->required();
  g_cmd->add_option("--lcf", g_lcf, "locally conformally flat");
  g_cmd->add_option("--weyl-nonzero", g_wnz, "Weyl tensor nonzero at every point");
  g_cmd->add_option("--u0-vs-threshold", g_u0vs, "above|below|equal|unknown");
  g_cmd->add_option("--perturbation", g_pert, "none|nonneg|nonpos|mixed");
  g_cmd->add_flag("--json", g_json, "emit JSON");

  // verify-all
  auto* v_cmd = app.add_subcommand("verify-all", "run the full verification battery");
  int v_dim = 11;
  double v_tol_scale = 1.0;
  bool v_json = false;
  v_cmd->add_option("--dim", v_dim, "dimension n");
  v_cmd->add_option("--tol-scale", v_tol_scale, "tolerance multiplier (sabotage hook)");
  v_cmd->add_flag("--json", v_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (c_cmd->parsed()) return run_constants(c_dim, c_exact, c_json, out_path);
    if (w_cmd->parsed()) {
      if (wv->parsed()) {
        const WeylForm W = load_weyl_spec(w_spec, /*raw=*/true);
        const WeylValidation v = validate_weyl(W);
        json j = validation_to_json(v);
        j["n"] = W.n;
        emit(j.dump(2), out_path);
        return v.accepted ? 0 : 3;
      }
      if (ws->parsed()) {
        const WeylForm W = random_weyl(w_dim, seed);
        json entries = json::array();
        for (int i = 0; i < w_dim; ++i)
          for (int j2 = 0; j2 < w_dim; ++j2)
            for (int k = 0; k < w_dim; ++k)
              for (int l = 0; l < w_dim; ++l)
                if (W.w(i, j2, k, l) != 0.0)
                  entries.push_back({i + 1, j2 + 1, k + 1, l + 1, W.w(i, j2, k, l)});
        emit(json{{"kind", "full"}, {"n", w_dim}, {"entries", entries}}.dump(), out_path);
        std::cerr << "sampled form with |W|^2 = " << W.norm_sq() << "\n";
        return 0;
      }
      if (wc->parsed()) {
        const WeylForm W = load_weyl_spec(w_spec);
        const CoercivityResult r = coercivity_check(W, w_samples, 64, seed);
        emit(json{{"minimum", r.minimum},
                  {"sweep_minimum", r.sweep_minimum},
                  {"minimizer", r.minimizer},
                  {"strictly_positive", r.minimum > 0.0}}
                 .dump(2),
             out_path);
        return 0;
      }
    }
    if (b_cmd->parsed())
      return run_bubble_check(b_dim, b_spec, seed, mc_samples, out_path);
    if (l_cmd->parsed())
      return run_landscape(l_dim, l_spec, l_u0, l_trange, l_zrange, l_dirs, mc_samples,
                           seed, out_path);
    if (s_cmd->parsed())
      return run_saddle(s_dim, s_spec, s_u0, s_eta, s_eps, seed, mc_samples, s_json,
                        out_path);
    if (k_cmd->parsed())
      return run_curvature_check(k_dim, k_spec, k_eps, k_points, k_step, out_path);
    if (g_cmd->parsed())
      return run_classify(g_dim, g_lcf, g_wnz, g_u0vs, g_pert, g_json, out_path);
    if (v_cmd->parsed()) {
      const std::uint64_t budget = mc_samples < 1000000 ? 1000000 : mc_samples;
      return run_verify(v_dim, seed, budget, v_tol_scale, v_json, out_path);
    }
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
