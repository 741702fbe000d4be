#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uncstates/acceptance.hpp"
#include "uncstates/io.hpp"
#include "uncstates/uncstates.hpp"

#ifndef UNCSTATES_VERSION
#define UNCSTATES_VERSION "0.1.0"
#endif

using namespace uncstates;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

io::RunConfig g_config;

json meta(double tolerance) {
  return {{"tool", "uncstates"}, {"version", UNCSTATES_VERSION}, {"seed", g_config.seed}, {"tolerance", tolerance},
          {"branch", "principal"}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::UsageError, "cannot write " + path);
  out << text;
}

Complex get_complex(const json& j, const char* key, Complex fallback) {
  return j.contains(key) ? io::complex_from_json(j[key]) : fallback;
}

Complex require_complex(const json& j, const char* key) {
  require(j.contains(key), ErrorKind::UsageError, std::string("missing parameter '") + key + "'");
  return io::complex_from_json(j[key]);
}

double require_real(const json& j, const char* key) {
  require(j.contains(key) && j[key].is_number(), ErrorKind::UsageError,
          std::string("missing numeric parameter '") + key + "'");
  return j[key].get<double>();
}

CMatrix matrix_from_json(const json& j, const char* key) {
  require(j.contains(key) && j[key].is_array(), ErrorKind::UsageError, std::string("missing matrix '") + key + "'");
  const json& rows = j[key];
  const int n = static_cast<int>(rows.size());
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    require(rows[r].is_array() && static_cast<int>(rows[r].size()) == n, ErrorKind::UsageError,
            std::string("matrix '") + key + "' must be square");
    for (int c = 0; c < n; ++c) m(r, c) = io::complex_from_json(rows[r][c]);
  }
  return m;
}

Complex parse_alpha(const std::string& s) {
  std::stringstream ss(s);
  std::string re, im;
  std::getline(ss, re, ',');
  std::getline(ss, im);
  try {
    return {std::stod(re), im.empty() ? 0.0 : std::stod(im)};
  } catch (const std::exception&) {
    fail(ErrorKind::UsageError, "alpha must be <re,im>, got '" + s + "'");
  }
}

SqueezeFrame frame_from_params(const json& p) {
  if (p.contains("r")) return SqueezeFrame::from_r(require_real(p, "r"), p.value("theta", 0.0));
  return SqueezeFrame(require_complex(p, "u"), require_complex(p, "v"));
}

/// Residual ||(A - z) psi|| with A one level larger than the state.
double eigen_residual(const FockVector& s, const CMatrix& A, Complex z) {
  const CVector c = detail::padded_vec(s.coeffs(), static_cast<int>(A.rows()));
  return (A * c - z * c).norm();
}

json build_state(const std::string& family, const json& p, bool check) {
  const int dim = p.value("dim", g_config.single_mode_dim);
  FockVector s;
  std::optional<std::pair<CMatrix, Complex>> eigen;
  if (family == "cs") {
    const Complex a = require_complex(p, "alpha");
    s = canonical_cs(a, dim);
    eigen = {build_rep(RepSpec::heisenberg(dim + 1)).ladder_minus.entries, a};
  } else if (family == "ss") {
    const Complex a = require_complex(p, "alpha");
    const SqueezeFrame fr = frame_from_params(p);
    s = p.value("form", std::string("eigen")) == "stoler" ? displaced_squeezed_stoler(a, fr, dim)
                                                          : displaced_squeezed(a, fr, dim);
    const OperatorSet ops = build_rep(RepSpec::heisenberg(dim + 1));
    eigen = {fr.u * ops.ladder_minus.entries + fr.v * ops.ladder_plus.entries, a};
  } else if (family == "spin") {
    const double j = require_real(p, "j");
    s = p.contains("tau") ? spin_cs(require_complex(p, "tau"), j)
                          : spin_cs_angles(require_real(p, "theta"), require_real(p, "phi"), j);
  } else if (family == "su11") {
    s = su11_cs(require_complex(p, "xi"), require_real(p, "k"), dim);
  } else if (family == "bg") {
    const double k = require_real(p, "k");
    const Complex z = require_complex(p, "z");
    s = bg_cs(z, k, dim);
    eigen = {build_rep(RepSpec::su11(k, dim + 1)).ladder_minus.entries, z};
  } else if (family == "qcs") {
    const double q = require_real(p, "q");
    const Complex a = require_complex(p, "alpha");
    s = q_cs(a, q, dim);
    eigen = {build_rep(RepSpec::qboson(q, dim + 1)).ladder_minus.entries, a};
  } else if (family == "ous") {
    const std::string alg = p.value("algebra", std::string("heisenberg"));
    RepSpec spec;
    if (alg == "heisenberg")
      spec = RepSpec::heisenberg(dim + 2);
    else if (alg == "su11")
      spec = RepSpec::su11(require_real(p, "k"), dim + 2);
    else if (alg == "su2")
      spec = RepSpec::su2(require_real(p, "j"));
    else
      fail(ErrorKind::UsageError, "ous algebra must be heisenberg, su11 or su2");
    const OperatorSet ops = build_rep(spec);
    OUSParams op;
    op.u = require_complex(p, "u");
    op.v = require_complex(p, "v");
    op.z = require_complex(p, "z");
    s = ladder_ous(ops, op, spec.finite() ? spec.dim() : dim);
    const int d = s.dim() + (spec.finite() ? 0 : 1);
    const OperatorSet big = spec.finite() ? ops : build_rep(spec.with_truncation(d));
    eigen = {op.u * big.ladder_minus.entries + op.v * big.ladder_plus.entries, op.z};
  } else if (family == "suq11-ous") {
    const double k = require_real(p, "k"), q = require_real(p, "q");
    const Complex u = require_complex(p, "u"), v = require_complex(p, "v"), z = require_complex(p, "z");
    s = suq11_ous(z, u, v, q, k, dim);
    const OperatorSet ops = build_rep(RepSpec::suq11(k, q, dim + 1));
    eigen = {u * ops.ladder_minus.entries + v * ops.ladder_plus.entries, z};
  } else if (family == "mm-ss") {
    const int dpm = p.value("dim_per_mode", g_config.per_mode_dim);
    const CMatrix U = matrix_from_json(p, "U"), V = matrix_from_json(p, "V");
    std::vector<Complex> alphas;
    for (const auto& a : p.at("alphas")) alphas.push_back(io::complex_from_json(a));
    s = multimode_ss(alphas, U, V, dpm);
    if (check) {
      // Residual of each A_m on the interior of a one-level padded space.
      const int m = static_cast<int>(alphas.size()), dp = dpm + 1;
      const FockVector sp = tensor_padded(s, dp);
      std::vector<CMatrix> a(m);
      for (int i = 0; i < m; ++i) a[i] = mode_lowering(dp, m, i);
      double worst = 0.0;
      for (int i = 0; i < m; ++i) {
        CMatrix A = CMatrix::Zero(a[0].rows(), a[0].cols());
        for (int l = 0; l < m; ++l) A += U(i, l) * a[l] + V(i, l) * a[l].adjoint();
        worst = std::max(worst, (A * sp.coeffs() - alphas[i] * sp.coeffs()).norm());
      }
      json out = io::to_json(s);
      out["diagnostics"] = {{"norm_error", std::abs(s.norm() - 1.0)},
                            {"guard_tail_mass", guard_tail_mass(s)},
                            {"eigen_residual", worst}};
      return out;
    }
  } else {
    fail(ErrorKind::UsageError, "unknown family '" + family + "'");
  }
  json out = io::to_json(s);
  if (check) {
    json d = {{"norm_error", std::abs(s.norm() - 1.0)}, {"guard_tail_mass", guard_tail_mass(s)}};
    if (eigen) d["eigen_residual"] = eigen_residual(s, eigen->first, eigen->second);
    out["diagnostics"] = d;
  }
  return out;
}

/// Operators for a state's representation, one or two levels larger than the state.
std::vector<OperatorMatrix> parse_ops(const std::string& spec, const RepSpec& rep, int state_dim) {
  if (rep.kind == Algebra::Heisenberg && rep.modes > 1) {
    require(spec == "qp", ErrorKind::UsageError, "multimode states support --ops qp only");
    const int dpm = static_cast<int>(std::llround(std::pow(state_dim, 1.0 / rep.modes))) + 1;
    const int total = static_cast<int>(std::pow(dpm, rep.modes));
    std::vector<OperatorMatrix> out;
    for (int m = 0; m < rep.modes; ++m) {
      const CMatrix a = mode_lowering(dpm, rep.modes, m);
      out.emplace_back((a + a.adjoint()) / std::sqrt(2.0), true, total, "q" + std::to_string(m + 1));
    }
    for (int m = 0; m < rep.modes; ++m) {
      const CMatrix a = mode_lowering(dpm, rep.modes, m);
      out.emplace_back((a - a.adjoint()) / (std::sqrt(2.0) * I), true, total, "p" + std::to_string(m + 1));
    }
    return out;
  }
  const OperatorSet ops = build_rep(rep.finite() ? rep : rep.with_truncation(state_dim + 2));
  static const std::map<std::string, std::string> aliases = {
      {"qp", "q,p"}, {"x12", "x1,x2"}, {"x123", "x1,x2,x3"}, {"K12", "x1,x2"},
      {"K123", "x1,x2,x3"}, {"J12", "x1,x2"}, {"J123", "x1,x2,x3"}};
  const auto it = aliases.find(spec);
  std::stringstream ss(it == aliases.end() ? spec : it->second);
  std::vector<OperatorMatrix> out;
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name == "q" || name == "p") {
      require(ops.position.has_value(), ErrorKind::UsageError, "q and p need a Heisenberg state");
      out.push_back(name == "q" ? *ops.position : *ops.momentum);
    } else if (name == "x1" || name == "K1" || name == "J1") {
      out.push_back(ops.hermitian_x1);
    } else if (name == "x2" || name == "K2" || name == "J2") {
      out.push_back(ops.hermitian_x2);
    } else if (name == "x3" || name == "K3" || name == "J3" || name == "N") {
      out.push_back(ops.cartan);
    } else {
      fail(ErrorKind::UsageError, "unknown operator '" + name + "'");
    }
  }
  require(!out.empty(), ErrorKind::UsageError, "empty operator list");
  return out;
}

int parse_orders(const std::string& s, int n) {
  const auto dots = s.find("..");
  const std::string hi = dots == std::string::npos ? s : s.substr(dots + 2);
  int r = 0;
  try {
    r = std::stoi(hi);
  } catch (const std::exception&) {
    fail(ErrorKind::UsageError, "orders must be N or 1..N");
  }
  require(r >= 1 && r <= n, ErrorKind::UsageError, "orders out of range for the operator tuple");
  return r;
}

int ur_check(const std::string& state_path, const std::string& ops_spec, const std::string& orders, const std::string& out) {
  const State st = io::state_from_json(io::read_json_file(state_path));
  const RepSpec rep = std::visit([](const auto& x) { return x.label(); }, st);
  const auto ops = parse_ops(ops_spec, rep, state_dim(st));
  const MomentSet ms = moments(st, ops);
  const int rmax = parse_orders(orders, ms.n());
  const UncertaintyReport full = build_report(ms, g_config.equality_tol);
  json report = io::to_json(full);
  json kept = json::array();
  bool violated = full.psd_min_eig < -g_config.psd_tol;
  for (int r = 1; r <= rmax; ++r) {
    kept.push_back(report["orders"][r - 1]);
    if (full.slacks[r - 1] < -g_config.equality_tol * full.scale(r)) violated = true;
  }
  report["orders"] = kept;
  report["moments"] = io::to_json(ms);
  report["ops"] = ops_spec;
  report["meta"] = meta(g_config.equality_tol);
  write_text(out, io::emit(report));
  return violated ? kExitVerification : kExitOk;
}

json grid_from_arg(const std::string& arg) {
  if (arg == "default" || arg.empty()) return json::object();
  return io::parse_json_arg(arg);
}

int ur_scan(const std::string& family, const std::string& grid_arg, int order, const std::string& out) {
  const json g = grid_from_arg(grid_arg);
  std::vector<double> re = g.value("re", acceptance::grid_axis()), im = g.value("im", acceptance::grid_axis());
  const bool su11 = family == "su11-cs";
  require(su11 || family == "spin-cs", ErrorKind::UsageError, "scan family must be su11-cs or spin-cs");
  const double param = g.value(su11 ? "k" : "j", 1.0);
  const int dim = g.value("dim", 300);
  const OperatorSet ops = su11 ? build_rep(RepSpec::su11(param, dim + 2)) : build_rep(RepSpec::su2(param));
  const std::vector<OperatorMatrix> tuple = {ops.hermitian_x1, ops.hermitian_x2, ops.cartan};
  require(order >= 1 && order <= 3, ErrorKind::UsageError, "order must be 1, 2 or 3");
  json points = json::array();
  bool violated = false;
  int equal = 0;
  for (double x : re)
    for (double y : im) {
      const FockVector s = su11 ? su11_cs({x, y}, param, dim) : spin_cs({x, y}, param);
      const UncertaintyReport rep = build_report(moments(s, tuple), g_config.equality_tol);
      const double slack = rep.slacks[order - 1];
      violated = violated || slack < -g_config.equality_tol * rep.scale(order);
      equal += rep.equal(order) ? 1 : 0;
      points.push_back({{"param", io::to_json(Complex{x, y})},
                        {"lhs", rep.char_sigma[order - 1]},
                        {"rhs", rep.char_cmat[order - 1]},
                        {"slack", slack},
                        {"equal", rep.equal(order)}});
    }
  json report = {{"family", family}, {su11 ? "k" : "j", param}, {"order", order}, {"points", points},
                 {"equal_count", equal}, {"meta", meta(g_config.equality_tol)}};
  if (su11) report["dim"] = dim;
  write_text(out, io::emit(report));
  return violated ? kExitVerification : kExitOk;
}

int appendix_b(double k, const std::string& grid_arg, const std::string& out) {
  const json g = grid_from_arg(grid_arg);
  AppendixBGrid grid = AppendixBGrid::standard();
  const auto load = [&](const char* key, std::vector<Complex>& dst) {
    if (!g.contains(key)) return;
    dst.clear();
    for (const auto& v : g[key]) dst.push_back(io::complex_from_json(v));
  };
  load("u1", grid.u1);
  load("v1", grid.v1);
  load("delta", grid.delta);
  grid.dim = g.value("dim", grid.dim);
  const AppendixBReport rep = appendix_b_scan(k, grid, g_config.equality_tol, g_config.margin);
  json points = json::array();
  for (const auto& p : rep.points) {
    json jp = {{"u1", io::to_json(p.u1)}, {"v1", io::to_json(p.v1)}, {"z1", io::to_json(p.z1)},
               {"s", io::to_json(p.s)}, {"cs_branch", p.cs_branch}, {"slack2", p.slack2},
               {"slack3", p.slack3}, {"scale", p.scale}, {"equal", p.equal}};
    jp["fidelity"] = std::isnan(p.fidelity) ? json(nullptr) : json(p.fidelity);
    points.push_back(jp);
  }
  json report = {{"k", rep.k},
                 {"dim", grid.dim},
                 {"points", points},
                 {"summary",
                  {{"on_manifold", rep.on_manifold},
                   {"off_manifold", rep.off_manifold},
                   {"max_on_slack", rep.max_on_slack},
                   {"min_off_relative_slack", rep.min_off_relative_slack},
                   {"min_fidelity", rep.min_fidelity},
                   {"unique", rep.unique}}},
                 {"margin", rep.margin},
                 {"meta", meta(rep.tolerance)}};
  write_text(out, io::emit(report));
  return rep.unique ? kExitOk : kExitVerification;
}

int distance(const std::string& f1, const std::string& f2, const std::string& ops_spec, int order,
             const std::string& g_arg, const std::string& out) {
  const State a = io::state_from_json(io::read_json_file(f1));
  const State b = io::state_from_json(io::read_json_file(f2));
  const RepSpec rep = std::visit([](const auto& x) { return x.label(); }, a);
  const int d = std::max(state_dim(a), state_dim(b));
  const auto ops = parse_ops(ops_spec, rep, d);
  require(order >= 1 && order <= static_cast<int>(ops.size()), ErrorKind::UsageError, "order out of range");
  GKind kind;
  if (g_arg.rfind("xsq:", 0) == 0) {
    const auto x = parse_ops(g_arg.substr(4), rep, d);
    require(x.size() == 1, ErrorKind::UsageError, "xsq needs exactly one operator");
    kind = GKind::xsquared(x.front());
  } else {
    require(g_arg == "trace", ErrorKind::UsageError, "--g must be trace or xsq:<op>");
  }
  const double g = g_functional(a, b, kind);
  const double c1 = char_coeffs(moments(a, ops).sigma)[order];
  const double c2 = char_coeffs(moments(b, ops).sigma)[order];
  const double d2 = distance_r(a, b, ops, order, kind);
  json report = {{"D2", d2}, {"g", g}, {"Cr1", c1}, {"Cr2", c2}, {"order", order}, {"ops", ops_spec},
                 {"g_kind", g_arg}, {"meta", meta(g_config.equality_tol)}};
  write_text(out, io::emit(report));
  return d2 < -g_config.equality_tol * std::max(1.0, c1 + c2) ? kExitVerification : kExitOk;
}

FrequencyProfile profile_from_json(const json& j) {
  const std::string kind = j.value("kind", std::string("constant"));
  const double w0 = j.value("omega0", 1.0), w1 = j.value("omega1", w0);
  if (kind == "constant") return FrequencyProfile::constant(w0);
  if (kind == "sudden_jump") return FrequencyProfile::sudden_jump(w0, w1, require_real(j, "t_switch"));
  if (kind == "smooth_ramp") return FrequencyProfile::smooth_ramp(w0, w1, require_real(j, "t_switch"));
  fail(ErrorKind::UsageError, "profile kind must be constant, sudden_jump or smooth_ramp");
}

std::string csv_number(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << (x == 0.0 ? 0.0 : x);
  return os.str();
}

int dynamics(const std::string& profile_arg, const std::string& alpha, double t_end, double dt, int dim,
             const std::string& out) {
  const FrequencyProfile prof = profile_from_json(io::parse_json_arg(profile_arg));
  require(t_end > 0.0 && dt > 0.0, ErrorKind::UsageError, "t-end and dt must be positive");
  const DynamicsRun run = run_dynamics(prof, parse_alpha(alpha), t_end, dt, dim > 0 ? dim : g_config.single_mode_dim);
  std::ostringstream os;
  os << "t,Re u,Im u,Re v,Im v,wronskian_drift,invariant_residual,fidelity_to_frame\n";
  for (size_t i = 0; i < run.uv.size(); ++i) {
    const UVSample& s = run.uv[i];
    os << csv_number(run.eps.times[i]) << ',' << csv_number(s.u.real()) << ',' << csv_number(s.u.imag()) << ','
       << csv_number(s.v.real()) << ',' << csv_number(s.v.imag()) << ',' << csv_number(run.eps.wronskian_drift[i])
       << ',' << csv_number(run.residual[i]) << ',' << csv_number(run.fidelity[i]) << '\n';
  }
  write_text(out, os.str());
  return kExitOk;
}

int dump_ops(const std::string& rep_arg, const std::string& name, const std::string& out) {
  const RepSpec rep = io::rep_from_json(io::parse_json_arg(rep_arg));
  const OperatorSet ops = build_rep(rep);
  std::vector<const OperatorMatrix*> all = {&ops.ladder_minus, &ops.ladder_plus, &ops.cartan, &ops.hermitian_x1,
                                            &ops.hermitian_x2};
  if (ops.position) all.push_back(&*ops.position);
  if (ops.momentum) all.push_back(&*ops.momentum);
  json list = json::array();
  for (const auto* op : all)
    if (name.empty() || op->name == name) list.push_back(io::to_json(*op, rep));
  require(!list.empty(), ErrorKind::UsageError, "no operator named '" + name + "'");
  write_text(out, io::emit({{"operators", list}, {"meta", meta(g_config.equality_tol)}}));
  return kExitOk;
}

int selftest(int only, bool as_json) {
  json lines = json::array();
  int failed = 0;
  if (!as_json) std::cout << "# uncstates selftest seed=" << g_config.seed << "\n";
  for (int id = 1; id <= 12; ++id) {
    if (only && id != only) continue;
    const auto r = acceptance::run_criterion(id, g_config.seed);
    failed += r.pass ? 0 : 1;
    if (as_json)
      lines.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    else
      std::cout << acceptance::format_line(r) << std::endl;
  }
  if (as_json) std::cout << io::emit({{"criteria", lines}, {"failed", failed}, {"meta", meta(g_config.equality_tol)}});
  return failed ? kExitVerification : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized coherent, squeezed and intelligent states; uncertainty relations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(UNCSTATES_VERSION));
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (default: $UNCSTATES_CONFIG)");

  std::function<int()> action;
  std::string out;

  auto* state = app.add_subcommand("state", "Build states");
  state->require_subcommand(1);
  auto* build = state->add_subcommand("build", "Build a state in the Fock basis");
  std::string family, params = "{}";
  bool check = false;
  build->add_option("--family", family, "cs|ss|spin|su11|bg|qcs|ous|suq11-ous|mm-ss")->required();
  build->add_option("--params", params, "JSON text or file");
  build->add_option("--out", out, "Output file (default stdout)");
  build->add_flag("--check", check, "Append residual diagnostics");
  build->callback([&] {
    action = [&] {
      write_text(out, io::emit(build_state(family, io::parse_json_arg(params), check)));
      return kExitOk;
    };
  });

  auto* ur = app.add_subcommand("ur", "Uncertainty relations");
  ur->require_subcommand(1);
  auto* ur_chk = ur->add_subcommand("check", "Characteristic inequalities for a state");
  std::string state_path, ops_spec = "qp", orders = "2";
  bool json_flag = false;
  ur_chk->add_option("--state", state_path)->required();
  ur_chk->add_option("--ops", ops_spec, "qp|x12|x123|K12|K123|J12|J123 or a comma list");
  ur_chk->add_option("--orders", orders, "N or 1..N");
  ur_chk->add_flag("--json", json_flag, "JSON output (the default)");
  ur_chk->add_option("--out", out);
  ur_chk->callback([&] { action = [&] { return ur_check(state_path, ops_spec, orders, out); }; });

  std::string scan_family = "su11-cs", grid = "default";
  int order = 2;
  const auto add_scan = [&](CLI::App* parent) {
    auto* sc = parent->add_subcommand("scan", "Characteristic slack over a CS parameter grid");
    sc->add_option("--family", scan_family, "su11-cs|spin-cs");
    sc->add_option("--grid", grid, "JSON {re, im, k|j, dim} or 'default'");
    sc->add_option("--order", order);
    sc->add_option("--out", out);
    sc->callback([&] { action = [&] { return ur_scan(scan_family, grid, order, out); }; });
  };
  double k = 1.0;
  const auto add_appendix = [&](CLI::App* parent) {
    auto* ab = parent->add_subcommand("appendix-b", "Equality-manifold scan over (u1, v1, z1)");
    ab->add_option("--k", k);
    ab->add_option("--grid", grid, "JSON {u1, v1, delta, dim} or 'default'");
    ab->add_option("--out", out);
    ab->callback([&] { action = [&] { return appendix_b(k, grid, out); }; });
  };
  add_scan(ur);
  add_appendix(ur);
  add_scan(&app);
  add_appendix(&app);

  auto* dist = app.add_subcommand("distance", "Distance between two states");
  std::string s1, s2, g_arg = "trace";
  dist->add_option("--state1", s1)->required();
  dist->add_option("--state2", s2)->required();
  dist->add_option("--ops", ops_spec);
  dist->add_option("--order", order);
  dist->add_option("--g", g_arg, "trace|xsq:<op>");
  dist->add_option("--out", out);
  dist->callback([&] { action = [&] { return distance(s1, s2, ops_spec, order, g_arg, out); }; });

  auto* dyn = app.add_subcommand("dynamics", "Time-dependent oscillator");
  std::string profile, alpha = "0,0";
  double t_end = 1.0, dt = 1e-2;
  int dim = 0;
  dyn->add_option("--profile", profile, "JSON {kind, omega0, omega1, t_switch}")->required();
  dyn->add_option("--alpha", alpha, "re,im");
  dyn->add_option("--t-end", t_end);
  dyn->add_option("--dt", dt);
  dyn->add_option("--dim", dim);
  dyn->add_option("--out", out);
  dyn->callback([&] { action = [&] { return dynamics(profile, alpha, t_end, dt, dim, out); }; });

  auto* dump = app.add_subcommand("dump-ops", "Dump representation matrices");
  std::string rep_arg, op_name;
  dump->add_option("--rep", rep_arg, "JSON rep spec")->required();
  dump->add_option("--name", op_name);
  dump->add_option("--out", out);
  dump->callback([&] { action = [&] { return dump_ops(rep_arg, op_name, out); }; });

  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  int only = 0;
  self->add_option("--only", only, "Run a single criterion");
  self->add_flag("--json", json_flag);
  self->callback([&] { action = [&] { return selftest(only, json_flag); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  try {
    g_config = io::load_config(config_path);
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return e.kind() == ErrorKind::VerificationFailure ? kExitVerification : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
