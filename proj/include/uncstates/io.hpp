#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "uncstates/fock.hpp"
#include "uncstates/uncertainty.hpp"

namespace uncstates::io {

using nlohmann::json;

inline json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

/// Accepts a number, [re, im] or {"re": .., "im": ..}.
inline Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
  fail(ErrorKind::SerializationError, "expected a complex number, got " + j.dump());
}

inline json to_json(const RepSpec& r) {
  json j;
  j["kind"] = to_string(r.kind);
  switch (r.kind) {
    case Algebra::SU11Discrete: j["k"] = r.k; break;
    case Algebra::SU11OneMode: j["parity"] = r.parity == Parity::Even ? "even" : "odd"; break;
    case Algebra::SU2: j["j"] = r.j; break;
    case Algebra::QBoson: j["q"] = r.q; break;
    case Algebra::SUq11: j["k"] = r.k; j["q"] = r.q; break;
    case Algebra::SUq2: j["j"] = r.j; j["q"] = r.q; break;
    case Algebra::Heisenberg: break;
  }
  if (!r.finite()) j["truncation"] = r.truncation;
  if (r.modes > 1) j["modes"] = r.modes;
  return j;
}

inline RepSpec rep_from_json(const json& j) {
  static const std::pair<const char*, Algebra> kinds[] = {
      {"Heisenberg", Algebra::Heisenberg}, {"SU11Discrete", Algebra::SU11Discrete},
      {"SU11OneMode", Algebra::SU11OneMode}, {"SU2", Algebra::SU2}, {"QBoson", Algebra::QBoson},
      {"SUq11", Algebra::SUq11}, {"SUq2", Algebra::SUq2}};
  RepSpec r;
  const std::string kind = j.value("kind", "");
  bool found = false;
  for (const auto& [name, a] : kinds)
    if (kind == name) {
      r.kind = a;
      found = true;
    }
  if (!found) fail(ErrorKind::SerializationError, "unknown rep kind '" + kind + "'");
  r.k = j.value("k", r.k);
  r.j = j.value("j", r.j);
  r.q = j.value("q", r.q);
  r.parity = j.value("parity", std::string("even")) == "odd" ? Parity::Odd : Parity::Even;
  r.truncation = j.value("truncation", r.truncation);
  r.modes = j.value("modes", 1);
  r.validate();
  return r;
}

inline json to_json(const FockVector& s) {
  json c = json::array();
  for (int n = 0; n < s.dim(); ++n) c.push_back(to_json(s[n]));
  return {{"rep", to_json(s.label())}, {"dim", s.dim()}, {"coeffs", c}};
}

inline json to_json(const DensityMatrix& rho) {
  json e = json::array();
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) e.push_back(to_json(rho.entries()(r, c)));
  return {{"rep", to_json(rho.label())}, {"dim", rho.dim()}, {"entries", e}};
}

inline json to_json(const State& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

inline State state_from_json(const json& j) {
  const RepSpec rep = rep_from_json(j.at("rep"));
  const int dim = j.at("dim").get<int>();
  if (j.contains("coeffs")) {
    const json& c = j["coeffs"];
    require(static_cast<int>(c.size()) == dim, ErrorKind::SerializationError, "coeffs length differs from dim");
    CVector v(dim);
    for (int n = 0; n < dim; ++n) v[n] = complex_from_json(c[n]);
    return FockVector(rep, v);
  }
  const json& e = j.at("entries");
  require(static_cast<int>(e.size()) == dim * dim, ErrorKind::SerializationError, "entries length differs from dim^2");
  CMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = complex_from_json(e[r * dim + c]);
  return DensityMatrix(rep, m);
}

inline json to_json(const OperatorMatrix& op, const RepSpec& rep) {
  json e = json::array();
  for (int r = 0; r < op.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < op.dim(); ++c) row.push_back(to_json(op.entries(r, c)));
    e.push_back(row);
  }
  return {{"rep", to_json(rep)}, {"name", op.name}, {"dim", op.dim()}, {"hermitian", op.hermitian},
          {"interior", op.interior}, {"entries", e}};
}

inline json to_json(const UncertaintyReport& rep) {
  json orders = json::array();
  for (size_t i = 0; i < rep.slacks.size(); ++i) {
    const int r = static_cast<int>(i) + 1;
    orders.push_back({{"r", r}, {"lhs", rep.char_sigma[i]}, {"rhs", rep.char_cmat[i]}, {"slack", rep.slacks[i]},
                      {"equal", rep.equal(r)}, {"scale", rep.scale(r)}});
  }
  return {{"orders", orders}, {"psd_min_eig", rep.psd_min_eig}, {"tolerance", rep.tolerance}};
}

inline json to_json(const MomentSet& ms) {
  json s = json::array(), c = json::array();
  for (int i = 0; i < ms.n(); ++i) {
    json rs = json::array(), rc = json::array();
    for (int k = 0; k < ms.n(); ++k) {
      rs.push_back(ms.sigma(i, k));
      rc.push_back(ms.cmat(i, k));
    }
    s.push_back(rs);
    c.push_back(rc);
  }
  json m = json::array();
  for (int i = 0; i < ms.n(); ++i) m.push_back(ms.means[i]);
  return {{"means", m}, {"sigma", s}, {"cmat", c}};
}

/// Defaults plus optional overrides from a JSON file.
struct RunConfig {
  int single_mode_dim = 64;
  int per_mode_dim = 20;
  double equality_tol = kEqualityTol;
  double psd_tol = kPsdTol;
  double margin = kMarginFactor;
  std::string format = "json";
  unsigned long long seed = 20261019ULL;

  void validate() const {
    require(equality_tol > 0.0 && psd_tol > 0.0 && margin > 0.0, ErrorKind::UsageError, "tolerances must be positive");
    require(single_mode_dim >= 8 && per_mode_dim >= 8, ErrorKind::UsageError, "truncations must be at least 8");
    require(format == "json" || format == "csv", ErrorKind::UsageError, "format must be json or csv");
  }

  json to_json() const {
    return {{"truncation", {{"single_mode", single_mode_dim}, {"per_mode", per_mode_dim}}},
            {"tolerances", {{"equality", equality_tol}, {"psd", psd_tol}, {"margin", margin}}},
            {"format", format},
            {"seed", seed}};
  }

  static RunConfig from_json(const json& j) {
    RunConfig c;
    if (j.contains("truncation")) {
      c.single_mode_dim = j["truncation"].value("single_mode", c.single_mode_dim);
      c.per_mode_dim = j["truncation"].value("per_mode", c.per_mode_dim);
    }
    if (j.contains("tolerances")) {
      c.equality_tol = j["tolerances"].value("equality", c.equality_tol);
      c.psd_tol = j["tolerances"].value("psd", c.psd_tol);
      c.margin = j["tolerances"].value("margin", c.margin);
    }
    c.format = j.value("format", c.format);
    c.seed = j.value("seed", c.seed);
    c.validate();
    return c;
  }
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::UsageError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::SerializationError, path + ": " + e.what());
  }
}

/// Explicit path, else $UNCSTATES_CONFIG, else defaults.
inline RunConfig load_config(const std::string& path) {
  std::string p = path;
  if (p.empty()) {
    const char* env = std::getenv("UNCSTATES_CONFIG");
    if (env != nullptr) p = env;
  }
  if (p.empty()) return {};
  return RunConfig::from_json(read_json_file(p));
}

/// Inline JSON text or a path to a JSON file.
inline json parse_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::exception& e) {
      fail(ErrorKind::UsageError, std::string("malformed JSON argument: ") + e.what());
    }
  }
  return read_json_file(arg);
}

inline std::string emit(const json& j) {
  try {
    return j.dump(2) + "\n";
  } catch (const json::exception& e) {
    fail(ErrorKind::SerializationError, e.what());
  }
}

}  // namespace uncstates::io
