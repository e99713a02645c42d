#include "smt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "smt/chebyshev.hpp"
#include "smt/exactmath.hpp"
#include "smt/inverse.hpp"
#include "smt/parallel.hpp"
#include "smt/rangecheck.hpp"
#include "smt/specfun.hpp"
#include "smt/spectral.hpp"
#include "smt/transform.hpp"
#include "smt/ucp.hpp"

namespace smt::cli {

namespace {

using json = nlohmann::json;

/// Bad input of any kind; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProfileSpec {
  std::string family = "bump";
  double center = 0.5;
  double width = 0.3;
};

struct Settings {
  std::string sub;
  int n = 3;
  int m = 0;
  int k = 6;
  int max_k = 12;
  double lambda_max = 40.0;
  int grid = 0;     // 0: subcommand default
  double tol = 0.0;  // 0: subcommand default
  std::uint64_t seed = default_seed;
  std::string out;
  int threads = 0;
  int nodes = 32;
  int panels = 8;
  bool quad_given = false;
  ProfileSpec profile;
  std::string input;
  std::string node_kind = "chebyshev";
  InversionConfig inv;
  std::string method = "collocation";
  std::string data = "forward";
  std::string precision = "double";
  double epsilon = 0.0;  // 0: per-dimension default
  double ucp_center = 0.6;
  double ucp_width = 0.15;

  QuadratureRule quad() const { return QuadratureRule(nodes, panels); }
};

// ---------------------------------------------------------------- formatting

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string join_csv(const std::vector<double>& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ',';
    s += format_number(row[i]);
  }
  return s;
}

struct Output {
  std::string version = SMT_VERSION;
  std::string hash;
  std::uint64_t seed = default_seed;
  std::string sub;

  void header(std::ostream& os) const {
    os << "# smt " << version << "\n# subcommand " << sub << "\n# config_hash " << hash << "\n# seed " << seed
       << "\n";
  }

  void csv(const std::string& path, const std::vector<std::string>& cols,
           const std::vector<std::vector<double>>& rows) const {
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot open output file '" + path + "'");
    header(f);
    for (std::size_t i = 0; i < cols.size(); ++i) f << (i ? "," : "") << cols[i];
    f << "\n";
    for (const auto& r : rows) f << join_csv(r) << "\n";
  }

  void report(const std::string& path, json j) const {
    j["_header"] = {{"config_hash", hash}, {"seed", seed}, {"subcommand", sub}, {"version", version}};
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot open output file '" + path + "'");
    f << j.dump(2) << "\n";
  }
};

// -------------------------------------------------------------------- config

std::size_t line_of(const std::string& text, std::size_t byte) {
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string text = ss.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ":" + std::to_string(line_of(text, e.byte)) + ": malformed JSON: " + e.what());
  }
}

void check_keys(const json& j, const std::vector<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
T get_as(const json& j, const std::string& key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + ": field '" + key + "' has the wrong type");
  }
}

std::uint64_t parse_seed(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      const std::string s = v.get<std::string>();
      const auto r = std::stoull(s, &used, 0);
      if (used == s.size()) return r;
    } catch (...) {
    }
  }
  throw ConfigError(where + ": field 'seed' must be an unsigned integer or a 0x-prefixed string");
}

std::uint64_t parse_seed(const std::string& s) { return parse_seed(json(s), "--seed"); }

void apply_profile(Settings& st, const json& p, const std::string& where, bool allow_dims) {
  std::vector<std::string> allowed = {"family", "center", "width"};
  if (allow_dims) {
    allowed.push_back("n");
    allowed.push_back("m");
  }
  check_keys(p, allowed, where);
  if (p.contains("family")) st.profile.family = get_as<std::string>(p, "family", where);
  if (p.contains("center")) st.profile.center = get_as<double>(p, "center", where);
  if (p.contains("width")) st.profile.width = get_as<double>(p, "width", where);
  if (p.contains("n")) st.n = get_as<int>(p, "n", where);
  if (p.contains("m")) st.m = get_as<int>(p, "m", where);
}

std::vector<std::string> allowed_keys(const std::string& sub) {
  std::vector<std::string> keys = {"quadrature", "tol", "out", "threads", "seed", "grid", "n", "m"};
  auto add = [&keys](std::initializer_list<const char*> more) {
    for (const char* s : more) keys.emplace_back(s);
  };
  if (sub == "forward") add({"profile", "nodes"});
  if (sub == "invert") add({"profile", "input", "inversion", "method"});
  if (sub == "range-check") add({"profile", "input"});
  if (sub == "cross-check") add({"profile", "lambda_max"});
  if (sub == "mk-check") add({"k", "precision"});
  if (sub == "identities") add({"max_k"});
  if (sub == "zeros") add({"profile", "data"});
  if (sub == "ucp-demo") add({"ucp"});
  return keys;
}

void apply_config(Settings& st, const json& j, const std::string& where) {
  check_keys(j, allowed_keys(st.sub), where + " (" + st.sub + ")");
  if (j.contains("quadrature")) {
    const json& q = j["quadrature"];
    check_keys(q, {"nodes", "panels"}, where + ": quadrature");
    if (q.contains("nodes")) st.nodes = get_as<int>(q, "nodes", where + ": quadrature");
    if (q.contains("panels")) st.panels = get_as<int>(q, "panels", where + ": quadrature");
    st.quad_given = true;
  }
  if (j.contains("tol")) st.tol = get_as<double>(j, "tol", where);
  if (j.contains("out")) st.out = get_as<std::string>(j, "out", where);
  if (j.contains("threads")) st.threads = get_as<int>(j, "threads", where);
  if (j.contains("seed")) st.seed = parse_seed(j["seed"], where);
  if (j.contains("grid")) st.grid = get_as<int>(j, "grid", where);
  if (j.contains("n")) st.n = get_as<int>(j, "n", where);
  if (j.contains("m")) st.m = get_as<int>(j, "m", where);
  if (j.contains("k")) st.k = get_as<int>(j, "k", where);
  if (j.contains("max_k")) st.max_k = get_as<int>(j, "max_k", where);
  if (j.contains("lambda_max")) st.lambda_max = get_as<double>(j, "lambda_max", where);
  if (j.contains("profile")) apply_profile(st, j["profile"], where + ": profile", false);
  if (j.contains("nodes")) st.node_kind = get_as<std::string>(j, "nodes", where);
  if (j.contains("input")) st.input = get_as<std::string>(j, "input", where);
  if (j.contains("method")) st.method = get_as<std::string>(j, "method", where);
  if (j.contains("data")) st.data = get_as<std::string>(j, "data", where);
  if (j.contains("precision")) st.precision = get_as<std::string>(j, "precision", where);
  if (j.contains("inversion")) {
    const json& v = j["inversion"];
    const std::string w = where + ": inversion";
    check_keys(v, {"unknowns", "collocation", "svd_cutoff"}, w);
    if (v.contains("unknowns")) st.inv.n_unknowns = get_as<int>(v, "unknowns", w);
    if (v.contains("collocation")) st.inv.n_collocation = get_as<int>(v, "collocation", w);
    if (v.contains("svd_cutoff")) st.inv.svd_cutoff = get_as<double>(v, "svd_cutoff", w);
  }
  if (j.contains("ucp")) {
    const json& v = j["ucp"];
    const std::string w = where + ": ucp";
    check_keys(v, {"epsilon", "center", "width"}, w);
    if (v.contains("epsilon")) st.epsilon = get_as<double>(v, "epsilon", w);
    if (v.contains("center")) st.ucp_center = get_as<double>(v, "center", w);
    if (v.contains("width")) st.ucp_width = get_as<double>(v, "width", w);
  }
}

void fill_defaults(Settings& st) {
  const std::string& s = st.sub;
  if (st.grid == 0) {
    if (s == "forward") st.grid = 129;
    if (s == "range-check") st.grid = 101;
    if (s == "cross-check") st.grid = 20;
    if (s == "mk-check") st.grid = 100;
    if (s == "zeros") st.grid = 10;
    if (s == "ucp-demo") st.grid = 801;
    if (s == "invert") st.grid = st.inv.n_collocation;
  }
  if (st.tol == 0.0) {
    if (s == "range-check") st.tol = st.input.empty() ? 1e-6 : 1e-5;
    if (s == "cross-check" || s == "mk-check") st.tol = 1e-8;
    if (s == "zeros") st.tol = 1e-6;
    if (s == "invert") st.tol = 1e-3;
  }
  if (s == "invert") st.inv.n_collocation = st.grid;
  if (s == "ucp-demo") {
    if (st.epsilon == 0.0) st.epsilon = st.n == 3 ? 0.25 : 0.2;
    if (st.m == 0) st.m = 4 * ((st.n - 3) / 2) + 2;
  }
}

void validate(const Settings& st) {
  try {
    make_dimension(st.n);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("n: ") + e.what());
  }
  if (st.m < 0) throw ConfigError("m must be >= 0");
  if (st.nodes < 2 || st.panels < 1) throw ConfigError("quadrature: need nodes >= 2 and panels >= 1");
  if (st.sub != "identities") {
    const int least = (st.sub == "mk-check" || st.sub == "zeros") ? 1 : (st.sub == "forward" ? 3 : 2);
    if (st.grid < least) throw ConfigError("grid must be >= " + std::to_string(least));
  }
  if (st.tol < 0.0) throw ConfigError("tol must be >= 0");
  if (st.profile.family != "bump") throw ConfigError("profile: unknown family '" + st.profile.family + "'");
  if (!(st.profile.width > 0.0) || st.profile.center - st.profile.width < 0.0 ||
      st.profile.center + st.profile.width >= 1.0)
    throw ConfigError("profile: bump support must lie in [0, 1)");
  if (st.node_kind != "chebyshev" && st.node_kind != "uniform")
    throw ConfigError("nodes must be 'chebyshev' or 'uniform'");
  if (st.method != "collocation" && st.method != "closed_form")
    throw ConfigError("method must be 'collocation' or 'closed_form'");
  if (st.data != "forward" && st.data != "offcenter") throw ConfigError("data must be 'forward' or 'offcenter'");
  if (st.precision != "double" && st.precision != "wide")
    throw ConfigError("precision must be 'double' or 'wide'");
  if (st.k < 0 || st.k > 20) throw ConfigError("k must lie in 0..20");
  if (st.max_k < 0 || st.max_k > 16) throw ConfigError("max_k must lie in 0..16");
  if (!(st.lambda_max > 0.5)) throw ConfigError("lambda_max must exceed 0.5");
  try {
    if (st.sub == "invert") smt::validate(st.inv);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

json resolved(const Settings& st) {
  json j;
  j["subcommand"] = st.sub;
  j["n"] = st.n;
  j["m"] = st.m;
  j["grid"] = st.grid;
  j["tol"] = st.tol;
  j["seed"] = st.seed;
  j["quadrature"] = {{"nodes", st.nodes}, {"panels", st.panels}};
  const std::string& s = st.sub;
  if (s == "forward" || s == "invert" || s == "range-check" || s == "cross-check" || s == "zeros")
    j["profile"] = {{"family", st.profile.family}, {"center", st.profile.center}, {"width", st.profile.width}};
  if (s == "forward") j["nodes"] = st.node_kind;
  if (s == "invert" || s == "range-check") j["input"] = st.input;
  if (s == "invert") {
    j["method"] = st.method;
    j["inversion"] = {{"unknowns", st.inv.n_unknowns},
                      {"collocation", st.inv.n_collocation},
                      {"svd_cutoff", st.inv.svd_cutoff}};
  }
  if (s == "cross-check") j["lambda_max"] = st.lambda_max;
  if (s == "mk-check") {
    j["k"] = st.k;
    j["precision"] = st.precision;
  }
  if (s == "identities") j["max_k"] = st.max_k;
  if (s == "zeros") j["data"] = st.data;
  if (s == "ucp-demo") j["ucp"] = {{"epsilon", st.epsilon}, {"center", st.ucp_center}, {"width", st.ucp_width}};
  return j;
}

// ----------------------------------------------------------------- CSV input

struct Table {
  std::vector<std::string> cols;
  std::vector<std::vector<double>> rows;

  std::vector<double> column(const std::string& name) const {
    const auto it = std::find(cols.begin(), cols.end(), name);
    if (it == cols.end()) throw ConfigError("input: missing column '" + name + "'");
    const auto c = static_cast<std::size_t>(it - cols.begin());
    std::vector<double> v;
    for (const auto& r : rows) v.push_back(r[c]);
    return v;
  }
  bool has(const std::string& name) const { return std::find(cols.begin(), cols.end(), name) != cols.end(); }
};

Table read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read input '" + path + "'");
  Table t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (t.cols.empty()) {
      t.cols = cells;
      continue;
    }
    if (cells.size() != t.cols.size())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(t.cols.size()) +
                        " fields");
    std::vector<double> row;
    for (const auto& c : cells) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(c, &used));
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw ConfigError(path + ":" + std::to_string(lineno) + ": not a number: '" + c + "'");
      }
    }
    t.rows.push_back(std::move(row));
  }
  if (t.rows.empty()) throw ConfigError(path + ": no data rows");
  return t;
}

/// Samples must sit on the Chebyshev-Lobatto grid spanned by their extremes.
SampledH sampled_from(std::vector<double> t, std::vector<double> h) {
  std::vector<std::size_t> idx(t.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&t](std::size_t a, std::size_t b) { return t[a] > t[b]; });
  std::vector<double> ts, hs;
  for (auto i : idx) {
    ts.push_back(t[i]);
    hs.push_back(h[i]);
  }
  const double a = ts.back(), b = ts.front();
  if (!(a > 0.0 && b < 2.0 && b > a)) throw ConfigError("input: t must span an interval inside (0, 2)");
  const auto nodes = SampledH::nodes(a, b, static_cast<int>(ts.size()) - 1);
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (std::abs(nodes[i] - ts[i]) > 1e-9 * (b - a))
      throw ConfigError("input: samples are not on the Chebyshev-Lobatto grid of [" + format_number(a) + ", " +
                        format_number(b) + "]; generate them with `forward --nodes chebyshev`");
  return SampledH(a, b, hs);
}

// --------------------------------------------------------------- subcommands

RadialProfile profile_of(const Settings& st) { return RadialProfile::bump(st.profile.center, st.profile.width); }

/// Chebyshev samples cover the support of h only.
std::vector<double> t_grid(const Settings& st, const RadialProfile& f) {
  if (st.node_kind == "chebyshev") {
    const double lo = std::max(t_floor, 1.0 - f.hi()), hi = std::min(2.0 - t_floor, 1.0 + f.hi());
    auto v = SampledH::nodes(lo, hi, st.grid - 1);
    std::reverse(v.begin(), v.end());
    return v;
  }
  return uniform_grid(st.grid, t_floor, 2.0 - t_floor);
}

void say(const std::string& sub, bool pass, const std::string& detail) {
  std::cout << sub << ": " << (pass ? "PASS" : "FAIL") << (detail.empty() ? "" : " " + detail) << "\n";
}

int cmd_forward(const Settings& st, const Output& out) {
  const Dimension dim = make_dimension(st.n);
  const RadialProfile f = profile_of(st);
  const auto quad = st.quad();
  const auto ts = t_grid(st, f);
  std::vector<std::string> cols = {"t", "g", "h"};
  if (st.m == 0)
    for (int p = 0; p <= dim.k; ++p) cols.push_back("dp_h_" + std::to_string(p));
  const auto rows = parallel_map<std::vector<double>>(ts.size(), [&](std::size_t i) {
    const double t = ts[i];
    std::vector<double> r{t};
    if (st.m == 0) {
      const double h = forward_h(f, dim, t, quad);
      r.push_back(h / std::pow(t, dim.n - 2));
      r.push_back(h);
      for (int p = 0; p <= dim.k; ++p) r.push_back(forward_h_dp(f, dim, t, p, quad));
    } else {
      const double g = forward_harmonic(f, dim, st.m, t, quad);
      r.push_back(g);
      r.push_back(g * std::pow(t, dim.n - 2));
    }
    return r;
  });
  if (!st.out.empty()) out.csv(st.out, cols, rows);
  say("forward", true, std::to_string(rows.size()) + " rows");
  return 0;
}

int cmd_range_check(const Settings& st, const Output& out) {
  const Dimension dim = make_dimension(st.n);
  const auto quad = st.quad();
  const auto grid = uniform_grid(st.grid, 0.01, 1.0);
  GeneralRangeReport rep;
  double floor = 0.0;
  if (!st.input.empty()) {
    const Table tab = read_csv(st.input);
    const auto t = tab.column("t");
    std::vector<double> h;
    if (tab.has("h")) {
      h = tab.column("h");
    } else {
      const auto g = tab.column("g");
      for (std::size_t i = 0; i < t.size(); ++i) h.push_back(g[i] * std::pow(t[i], dim.n - 2));
    }
    const SampledH sh = sampled_from(t, h);
    if (sh.max_order() < dim.k) throw ConfigError("input: spectral order insufficient for k");
    if (st.m == 0)
      rep.range = range_residual(sh, dim.k, grid);
    else
      rep = general_range_check(sh, dim, st.m, grid, quad);
    floor = sh.noise_floor(st.m + dim.k);
  } else if (st.m == 0) {
    rep.range = range_residual(make_smt_profile(profile_of(st), dim, quad), grid);
  } else {
    rep = general_range_check(profile_of(st), dim, st.m, grid, quad);
  }
  const bool pass = rep.range.normalized <= st.tol && rep.defects_ok;
  json j = {{"sup_residual", rep.range.sup_residual},
            {"normalized", rep.range.normalized},
            {"scale", rep.range.scale},
            {"k", rep.range.k_used},
            {"defects", rep.defects},
            {"defect_scale", rep.defect_scale},
            {"route_mismatch", rep.route_mismatch},
            {"noise_floor", floor},
            {"tol", st.tol},
            {"verdict", pass ? "PASS" : "FAIL"}};
  if (!st.out.empty()) {
    out.report(st.out + ".json", j);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < grid.size(); ++i) rows.push_back({grid[i], rep.range.residual[i]});
    out.csv(st.out + ".csv", {"t", "residual"}, rows);
  }
  say("range-check", pass, "normalized=" + format_number(rep.range.normalized));
  return pass ? 0 : 1;
}

int cmd_cross_check(const Settings& st, const Output& out) {
  const Dimension dim = make_dimension(st.n);
  const RadialProfile f = profile_of(st);
  const auto quad = st.quad();
  const SupportedFunction h{[&](double t) { return forward_h(f, dim, t, quad); }, 1.0 - f.hi(), 1.0 + f.hi()};
  std::vector<double> lams;
  for (int i = 0; i < st.grid; ++i) lams.push_back(0.5 + (st.lambda_max - 0.5) * i / (st.grid - 1));
  const auto res = parallel_map<IdentityResidual>(
      lams.size(), [&](std::size_t i) { return cross_product_residual(h, dim.k, lams[i], quad); });
  double worst = 0.0;
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < lams.size(); ++i) {
    worst = std::max(worst, res[i].residual);
    rows.push_back({lams[i], res[i].lhs, res[i].rhs, res[i].residual});
  }
  const bool pass = worst <= st.tol;
  if (!st.out.empty()) {
    out.csv(st.out + ".csv", {"lambda", "lhs", "rhs", "residual"}, rows);
    out.report(st.out + ".json", {{"max_residual", worst}, {"tol", st.tol}, {"verdict", pass ? "PASS" : "FAIL"}});
  }
  say("cross-check", pass, "max_residual=" + format_number(worst));
  return pass ? 0 : 1;
}

int cmd_mk_check(const Settings& st, const Output& out) {
  const auto samples = mk_samples(st.seed, st.grid);
  const bool wide_mode = st.precision == "wide";
  std::vector<std::pair<int, std::size_t>> jobs;
  for (int k = 0; k <= st.k; ++k)
    for (std::size_t i = 0; i < samples.size(); ++i) jobs.emplace_back(k, i);
  const auto res = parallel_map<IdentityResidual>(jobs.size(), [&](std::size_t j) {
    const auto [k, i] = jobs[j];
    return wide_mode ? mk_residual_wide(k, samples[i].first, samples[i].second)
                     : mk_residual(k, samples[i].first, samples[i].second);
  });
  double worst = 0.0;
  std::vector<std::vector<double>> rows;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const auto& s = samples[jobs[j].second];
    worst = std::max(worst, res[j].residual);
    rows.push_back({static_cast<double>(jobs[j].first), s.first, s.second, res[j].lhs, res[j].rhs, res[j].residual});
  }
  const bool pass = worst <= st.tol;
  if (!st.out.empty()) {
    out.csv(st.out + ".csv", {"k", "lambda", "t", "lhs", "rhs", "residual"}, rows);
    out.report(st.out + ".json", {{"max_residual", worst}, {"tol", st.tol}, {"verdict", pass ? "PASS" : "FAIL"}});
  }
  say("mk-check", pass, "max_residual=" + format_number(worst) + " seed=" + hex64(st.seed));
  return pass ? 0 : 1;
}

int cmd_identities(const Settings& st, const Output& out) {
  const auto rows = identity_sweep(st.max_k);
  bool all = true;
  std::printf("%-16s %-34s %8s  %s\n", "identity", "range", "cases", "verdict");
  json j = json::array();
  for (const auto& r : rows) {
    all = all && r.ok();
    std::printf("%-16s %-34s %8d  %s\n", r.name.c_str(), r.range.c_str(), r.cases, r.ok() ? "PASS" : "FAIL");
    j.push_back({{"name", r.name}, {"range", r.range}, {"cases", r.cases}, {"passed", r.passed}});
  }
  if (!st.out.empty()) out.report(st.out + ".json", {{"identities", j}, {"verdict", all ? "PASS" : "FAIL"}});
  say("identities", all, "");
  return all ? 0 : 1;
}

int cmd_zeros(const Settings& st, const Output& out) {
  const Dimension dim = make_dimension(st.n);
  const auto quad = st.quad();
  SupportedFunction g;
  if (st.data == "forward") {
    const RadialProfile f = profile_of(st);
    g = SupportedFunction{[f, dim, quad](double t) { return forward_radial(f, dim, t, quad); },
                          std::max(t_floor, 1.0 - f.hi()), 1.0 + f.hi()};
  } else {
    const RadialProfile b = RadialProfile::bump(0.7, 0.2);  // shifted by 0.7 to (1.2, 1.6)
    g = SupportedFunction{[b, dim](double t) { return b(t - 0.7) / std::pow(t, dim.n - 2); }, 1.2, 1.6};
  }
  const ZeroOracleReport rep = bessel_zero_vanishing(g, dim, st.m, st.grid, quad);
  const bool pass = rep.max_ratio <= st.tol;
  if (!st.out.empty()) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < rep.zeros.size(); ++i)
      rows.push_back({rep.zeros[i], rep.values[i], rep.max_abs > 0.0 ? rep.values[i] / rep.max_abs : 0.0});
    out.csv(st.out + ".csv", {"zero", "abs_F", "ratio"}, rows);
    out.report(st.out + ".json", {{"max_ratio", rep.max_ratio},
                                  {"max_abs", rep.max_abs},
                                  {"tol", st.tol},
                                  {"verdict", pass ? "PASS" : "FAIL"}});
  }
  say("zeros", pass, "max_ratio=" + format_number(rep.max_ratio));
  return pass ? 0 : 1;
}

int cmd_invert(const Settings& st, const Output& out) {
  const Dimension dim = make_dimension(st.n);
  const auto quad = st.quad();
  json j;
  std::vector<double> rs, fs;
  bool pass = true;
  std::string detail;
  if (st.method == "closed_form") {
    if (st.n != 3) throw ConfigError("method closed_form needs n = 3");
    if (!st.input.empty()) throw ConfigError("method closed_form works from a profile, not from samples");
    const RadialProfile f = profile_of(st);
    auto dh = [&](double t) { return forward_h_jet(f, dim, t, 1, quad).derivative(1); };
    double err = 0.0, scale = 0.0;
    for (int i = 0; i < st.grid; ++i) {
      const double r = r_floor + (0.999 - r_floor) * i / (st.grid - 1);
      const double v = invert_radial_n3(dh, r);
      rs.push_back(r);
      fs.push_back(v);
      err = std::max(err, std::abs(v - f(r)));
      scale = std::max(scale, std::abs(f(r)));
    }
    const double rel = scale > 0.0 ? err / scale : err;
    pass = rel <= st.tol;
    j = {{"relative_sup_error", rel}};
    detail = "relative_sup_error=" + format_number(rel);
  } else {
    std::vector<double> t, g;
    std::optional<RadialProfile> truth;
    if (!st.input.empty()) {
      const Table tab = read_csv(st.input);
      t = tab.column("t");
      g = tab.column("g");
    } else {
      truth = profile_of(st);
      t = collocation_points(st.inv.n_collocation);
      g = parallel_map<double>(t.size(), [&](std::size_t i) { return forward_radial(*truth, dim, t[i], quad); });
    }
    InversionResult res;
    try {
      res = invert_radial(t, g, dim, st.inv, quad);
    } catch (const std::runtime_error& e) {
      say("invert", false, e.what());
      return 1;
    }
    rs = res.r;
    fs = res.f;
    j = {{"effective_rank", res.effective_rank},
         {"residual_norm", res.residual_norm},
         {"relative_residual", res.relative_residual},
         {"sigma_max", res.sigma_max},
         {"sigma_min_kept", res.sigma_min_kept}};
    detail = "rank=" + std::to_string(res.effective_rank);
    if (truth) {
      const double e = relative_l2_error(res, [&](double r) { return (*truth)(r); });
      j["relative_l2_error"] = e;
      pass = e <= st.tol;
      detail += " relative_l2_error=" + format_number(e);
    }
  }
  j["tol"] = st.tol;
  j["verdict"] = pass ? "PASS" : "FAIL";
  if (!st.out.empty()) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < rs.size(); ++i) rows.push_back({rs[i], fs[i]});
    out.csv(st.out + ".csv", {"r", "f"}, rows);
    out.report(st.out + ".json", j);
  }
  say("invert", pass, detail);
  return pass ? 0 : 1;
}

int cmd_ucp(const Settings& st, const Output& out) {
  const UcpSpec spec{st.n, st.epsilon, st.m, st.ucp_center, st.ucp_width};
  try {
    smt::validate(spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const QuadratureRule quad = st.quad_given ? st.quad() : ucp_quadrature(spec);
  const UcpReport rep = verify_counterexample(spec, quad, ucp_grid(st.grid));
  const double tol = st.tol > 0.0 ? st.tol : rep.tol;
  const bool pass = rep.nontrivial && rep.f_zero_on_ball && rep.ratio_inside <= tol;
  if (!st.out.empty()) {
    std::vector<std::vector<double>> gr, fr;
    for (std::size_t i = 0; i < rep.t.size(); ++i) gr.push_back({rep.t[i], rep.g[i]});
    const RadialProfile f = build_counterexample(spec);
    for (int i = 0; i <= 1000; ++i) {
      const double r = 0.999 * i / 1000;
      fr.push_back({r, f(r)});
    }
    out.csv(st.out + "_g.csv", {"t", "g"}, gr);
    out.csv(st.out + "_f.csv", {"r", "f"}, fr);
    out.report(st.out + ".json", {{"ratio_inside", rep.ratio_inside},
                                  {"max_inside", rep.max_inside},
                                  {"max_outside", rep.max_outside},
                                  {"max_global", rep.max_global},
                                  {"f_zero_on_ball", rep.f_zero_on_ball},
                                  {"nontrivial", rep.nontrivial},
                                  {"panels", quad.panels()},
                                  {"tol", tol},
                                  {"verdict", pass ? "PASS" : "FAIL"}});
  }
  say("ucp-demo", pass, "ratio_inside=" + format_number(rep.ratio_inside));
  return pass ? 0 : 1;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string config_hash(const std::string& canonical_json) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_json) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

int run(const std::vector<std::string>& args) {
  const std::vector<std::string> subs = {"forward",  "invert", "range-check", "cross-check",
                                         "mk-check", "identities", "zeros", "ucp-demo"};
  CLI::App app{"Spherical mean transform toolkit", "smt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SMT_VERSION);

  struct Flags {
    std::optional<int> n, m, k, grid, max_k;
    std::optional<double> lambda_max, tol;
    std::optional<std::string> seed, out, config, profile, input, nodes, method, data, precision;
  };
  std::vector<Flags> flags(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    auto* sc = app.add_subcommand(subs[i]);
    Flags& f = flags[i];
    sc->add_option("--n", f.n, "odd dimension >= 3");
    sc->add_option("--m", f.m, "harmonic degree, or derivative order for ucp-demo");
    sc->add_option("--k", f.k, "largest k for mk-check");
    sc->add_option("--lambda-max", f.lambda_max, "upper end of the lambda sweep");
    sc->add_option("--grid", f.grid, "grid size or sample count");
    sc->add_option("--tol", f.tol, "verdict tolerance");
    sc->add_option("--seed", f.seed, "64-bit seed (decimal or 0x-prefixed)");
    sc->add_option("--out", f.out, "output path or prefix");
    sc->add_option("--config", f.config, "JSON config file");
    if (subs[i] == "identities") sc->add_option("--max-k", f.max_k, "largest k in the sweeps");
    if (subs[i] == "forward" || subs[i] == "invert" || subs[i] == "range-check" || subs[i] == "cross-check" ||
        subs[i] == "zeros")
      sc->add_option("--profile", f.profile, "profile JSON file {family, center, width, n, m}");
    if (subs[i] == "invert" || subs[i] == "range-check") sc->add_option("--input", f.input, "CSV samples");
    if (subs[i] == "forward") sc->add_option("--nodes", f.nodes, "chebyshev or uniform");
    if (subs[i] == "invert") sc->add_option("--method", f.method, "collocation or closed_form");
    if (subs[i] == "zeros") sc->add_option("--data", f.data, "forward or offcenter");
    if (subs[i] == "mk-check") sc->add_option("--precision", f.precision, "double or wide");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Settings st;
    const Flags* f = nullptr;
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (app.got_subcommand(subs[i])) {
        st.sub = subs[i];
        f = &flags[i];
      }
    if (f->config) apply_config(st, read_json_file(*f->config), *f->config);
    if (f->profile) apply_profile(st, read_json_file(*f->profile), *f->profile, true);
    if (f->n) st.n = *f->n;
    if (f->m) st.m = *f->m;
    if (f->k) st.k = *f->k;
    if (f->grid) st.grid = *f->grid;
    if (f->max_k) st.max_k = *f->max_k;
    if (f->lambda_max) st.lambda_max = *f->lambda_max;
    if (f->tol) st.tol = *f->tol;
    if (f->seed) st.seed = parse_seed(*f->seed);
    if (f->out) st.out = *f->out;
    if (f->input) st.input = *f->input;
    if (f->nodes) st.node_kind = *f->nodes;
    if (f->method) st.method = *f->method;
    if (f->data) st.data = *f->data;
    if (f->precision) st.precision = *f->precision;
    if (st.sub == "invert" && st.method == "closed_form" && st.tol == 0.0) st.tol = 1e-8;
    fill_defaults(st);
    validate(st);
    set_default_threads(st.threads);

    Output out;
    out.sub = st.sub;
    out.seed = st.seed;
    out.hash = config_hash(resolved(st).dump());

    if (st.sub == "forward") return cmd_forward(st, out);
    if (st.sub == "invert") return cmd_invert(st, out);
    if (st.sub == "range-check") return cmd_range_check(st, out);
    if (st.sub == "cross-check") return cmd_cross_check(st, out);
    if (st.sub == "mk-check") return cmd_mk_check(st, out);
    if (st.sub == "identities") return cmd_identities(st, out);
    if (st.sub == "zeros") return cmd_zeros(st, out);
    return cmd_ucp(st, out);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc)); }

}  // namespace smt::cli
