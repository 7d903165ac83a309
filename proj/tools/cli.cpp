// Copyright 2026 The Catchall Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "catchall/core_model.hpp"
#include "catchall/csv.hpp"
#include "catchall/estimate.hpp"
#include "catchall/montecarlo.hpp"
#include "catchall/random.hpp"
#include "catchall/simulate.hpp"
#include "catchall/spectral.hpp"

namespace catchall::cli {

namespace {

using nlohmann::json;

struct DgpFlags {
  double theta = 0.9;
  double sigma2_eps = 1.0;
  double sigma2_eta = 1.0;

  StructuralParams params() const { return {theta, sigma2_eps, sigma2_eta}; }

  json to_json() const {
    return {{"theta", theta}, {"sigma2_eps", sigma2_eps},
            {"sigma2_eta", sigma2_eta}};
  }
};

void add_dgp_flags(CLI::App* cmd, DgpFlags& dgp) {
  cmd->add_option("--theta", dgp.theta, "AR coefficient of the latent process")
      ->capture_default_str();
  cmd->add_option("--sigma2-eps", dgp.sigma2_eps, "innovation variance")
      ->capture_default_str();
  cmd->add_option("--sigma2-eta", dgp.sigma2_eta, "measurement-error variance")
      ->capture_default_str();
}

[[noreturn]] void usage_error(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

int parse_int(const std::string& text) {
  const double v = parse_double(text);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw Error(ErrorCode::kParse, "not an integer: '" + text + "'");
  }
  return static_cast<int>(v);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) {
      items.push_back(item);
    }
  }
  return items;
}

std::vector<int> parse_horizons(const std::string& text) {
  std::vector<int> ks;
  try {
    for (const auto& item : split_list(text)) {
      ks.push_back(parse_int(item));
    }
  } catch (const Error& e) {
    usage_error(std::string("bad --horizons: ") + e.what());
  }
  if (ks.empty()) {
    usage_error("--horizons needs at least one value");
  }
  for (int k : ks) {
    if (k < 1) {
      usage_error("horizons must be >= 1");
    }
  }
  return ks;
}

WeightScheme parse_weights(const std::string& text) {
  std::map<int, double> weights;
  try {
    for (const auto& item : split_list(text)) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) {
        usage_error("weights are written k:w, got '" + item + "'");
      }
      const int k = parse_int(item.substr(0, colon));
      if (!weights.emplace(k, parse_double(item.substr(colon + 1))).second) {
        usage_error("horizon " + std::to_string(k) + " weighted twice");
      }
    }
  } catch (const Error& e) {
    usage_error(std::string("bad --weights: ") + e.what());
  }
  if (weights.empty()) {
    usage_error("--weights needs at least one k:w pair");
  }
  return WeightScheme(std::move(weights));
}

json weights_json(const WeightScheme& w) {
  json arr = json::array();
  for (const auto& [k, weight] : w.weights()) {
    arr.push_back({{"k", k}, {"weight", weight}});
  }
  return arr;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifest(const std::string& command, json parameters,
              std::optional<std::uint64_t> seed) {
  json m = {{"command", command},
            {"parameters", std::move(parameters)},
            {"rng_algorithm", kRngAlgorithm},
            {"library_version", kLibraryVersion},
            {"timestamp", utc_timestamp()}};
  m["master_seed"] = seed ? json(*seed) : json(nullptr);
  return m;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kParse, "cannot open '" + path + "' for writing");
  }
  return out;
}

std::string write_manifest(const std::string& data_path, const json& m) {
  const std::string path = data_path + ".manifest.json";
  auto out = open_output(path);
  out << m.dump(2) << '\n';
  return path;
}

std::vector<double> read_series_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  }
  return read_csv_column(in, "y");
}

json extrema_json(const std::vector<Extremum>& xs) {
  json arr = json::array();
  for (const Extremum& e : xs) {
    arr.push_back({{"lambda", e.freq}, {"value", e.value}});
  }
  return arr;
}

void print_extrema(std::ostream& out, const char* name,
                   const std::vector<Extremum>& xs) {
  out << name << " =";
  for (const Extremum& e : xs) {
    out << ' ' << format_double(e.freq);
  }
  out << '\n';
}

// ---------------------------------------------------------------- simulate

struct SimulateFlags {
  DgpFlags dgp;
  std::size_t length = 1000;
  std::size_t burn_in = 0;
  std::uint64_t seed = 1;
  std::string out;
  bool emit_latent = false;
  bool as_json = false;
};

int cmd_simulate(const SimulateFlags& f, std::ostream& out) {
  const StructuralParams p = f.dgp.params();
  validate(p);
  const SeriesPath x =
      simulate_latent(p, SimConfig{f.length, f.burn_in, f.seed});
  const SeriesPath y = observe(x, p.sigma2_eta, f.seed);

  auto csv = open_output(f.out);
  write_csv_row(csv, f.emit_latent ? std::vector<std::string>{"t", "y", "x"}
                                   : std::vector<std::string>{"t", "y"});
  for (std::size_t t = 1; t <= y.size(); ++t) {
    std::vector<std::string> row{std::to_string(t), format_double(y.at(t))};
    if (f.emit_latent) {
      row.push_back(format_double(x.at(t)));
    }
    write_csv_row(csv, row);
  }
  json params = f.dgp.to_json();
  params.update({{"length", f.length},
                 {"burn_in", f.burn_in},
                 {"emit_latent", f.emit_latent},
                 {"out", f.out}});
  const std::string sidecar =
      write_manifest(f.out, manifest("simulate", params, f.seed));
  if (f.as_json) {
    out << json{{"out", f.out}, {"rows", y.size()}, {"manifest", sidecar}}.dump(2)
        << '\n';
  } else {
    out << "wrote " << y.size() << " rows to " << f.out << '\n'
        << "manifest " << sidecar << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ reduce

struct ReduceFlags {
  DgpFlags dgp;
  std::string horizons = "1,2,5,10";
  bool as_json = false;
};

int cmd_reduce(const ReduceFlags& f, std::ostream& out) {
  const StructuralParams p = f.dgp.params();
  validate(p);
  const Arma11Params arma = reduce_to_arma(p);
  const ReducedMoments m = bias_constant(p);
  const std::vector<int> ks = parse_horizons(f.horizons);

  json plims = json::array();
  json factors = json::array();
  for (int k : ks) {
    plims.push_back({{"k", k}, {"value", plim_k(p, Horizon(k))}});
    factors.push_back(
        {{"k", k}, {"value", asy_variance_factor(p.theta, Horizon(k))}});
  }
  if (f.as_json) {
    const json report = {{"theta", arma.theta},   {"alpha", arma.alpha},
                         {"sigma2_u", arma.sigma2_u}, {"c", m.c},
                         {"sigma2_x", m.sigma2_x}, {"sigma2_y", m.sigma2_y},
                         {"plims", plims},         {"var_factors", factors}};
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  out << "theta    = " << format_double(arma.theta) << '\n'
      << "alpha    = " << format_double(arma.alpha) << '\n'
      << "sigma2_u = " << format_double(arma.sigma2_u) << '\n'
      << "c        = " << format_double(m.c) << '\n'
      << "sigma2_x = " << format_double(m.sigma2_x) << '\n'
      << "sigma2_y = " << format_double(m.sigma2_y) << '\n';
  for (std::size_t i = 0; i < ks.size(); ++i) {
    out << "k=" << ks[i]
        << "  plim = " << format_double(plims[i]["value"].get<double>())
        << "  var_factor = "
        << format_double(factors[i]["value"].get<double>()) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- estimate

struct EstimateFlags {
  std::string in;
  std::optional<int> k;
  std::string weights;
  std::string method;
  bool demean = false;
  bool as_json = false;
  std::string profile;
  int profile_points = 512;
  double lo = 1e-4;
  double hi = 1.0 - 1e-4;
};

int cmd_estimate(const EstimateFlags& f, std::ostream& out) {
  const SeriesPath raw = SeriesPath::ingested(read_series_file(f.in));
  const SeriesPath y = f.demean ? demeaned(raw) : raw;
  const auto v = y.values();
  if (std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; })) {
    usage_error("input series has zero variance");
  }

  const WeightScheme w = f.weights.empty()
                             ? WeightScheme::point_mass(Horizon(f.k.value_or(1)))
                             : parse_weights(f.weights);
  std::string method = f.method;
  if (method.empty()) {
    method = f.weights.empty() ? "closed" : "minimize";
  }
  SearchOptions search;
  search.lo = f.lo;
  search.hi = f.hi;

  EstimateResult r;
  if (method == "closed") {
    const auto k = w.as_point_mass();
    if (!k) {
      usage_error("--method closed needs a single positively weighted horizon");
    }
    r = estimate_closed_form(y, *k);
  } else {
    r = estimate_catchall(y, w, search);
  }

  std::string profile_manifest;
  if (!f.profile.empty()) {
    if (f.profile_points < 2) {
      usage_error("--profile-points must be >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(f.profile_points));
    const double step = (search.hi - search.lo) / (f.profile_points - 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      grid[i] = search.lo + step * static_cast<double>(i);
    }
    grid.back() = search.hi;
    auto csv = open_output(f.profile);
    write_csv_row(csv, {"theta", "Q"});
    for (const auto& [theta, q] : profile_objective(y, w, grid)) {
      write_csv_row(csv, {format_double(theta), format_double(q)});
    }
    const json params = {{"in", f.in},           {"weights", weights_json(w)},
                         {"demean", f.demean},   {"lo", search.lo},
                         {"hi", search.hi},      {"points", f.profile_points}};
    profile_manifest =
        write_manifest(f.profile, manifest("estimate", params, std::nullopt));
  }

  json n_terms = json::array();
  for (const auto& [k, n] : r.n_terms) {
    n_terms.push_back({{"k", k}, {"n", n}});
  }
  if (f.as_json) {
    json report = {{"theta_hat", r.theta_hat},
                   {"objective", r.objective_value},
                   {"method", to_string(r.method)},
                   {"weights", weights_json(w)},
                   {"n_terms", n_terms},
                   {"outside_unit_interval", r.outside_unit_interval},
                   {"demeaned", f.demean},
                   {"T", y.size()}};
    if (!profile_manifest.empty()) {
      report["profile"] = f.profile;
    }
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  out << "theta_hat = " << format_double(r.theta_hat) << '\n'
      << "objective = " << format_double(r.objective_value) << '\n'
      << "method    = " << to_string(r.method) << '\n'
      << "n_terms   =";
  for (const auto& [k, n] : r.n_terms) {
    out << " k" << k << ':' << n;
  }
  out << '\n';
  if (r.outside_unit_interval) {
    out << "warning: closed-form root lies outside (0, 1)\n";
  }
  if (!profile_manifest.empty()) {
    out << "profile written to " << f.profile << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumFlags {
  std::string in;
  std::string out;
  std::size_t half_width = 0;
  bool theory = false;
  DgpFlags dgp;
  std::size_t grid_points = kDefaultGridPoints;
  bool as_json = false;
};

int cmd_spectrum(const SpectrumFlags& f, std::ostream& out) {
  json summary;
  json params;
  SpectralFeatures feats;
  if (f.theory) {
    const StructuralParams p = f.dgp.params();
    const auto grid = frequency_grid(f.grid_points);
    const SpectralCurve fx = spectrum_ar1(p, grid);
    const SpectralCurve fy = spectrum_y(p, grid);
    const SpectralBounds b = identification_bounds(fy);
    feats = find_features(fy);

    auto csv = open_output(f.out);
    write_csv_row(csv, {"lambda", "f_x", "f_y", "lower", "upper"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
      write_csv_row(csv, {format_double(grid[i]), format_double(fx.values()[i]),
                          format_double(fy.values()[i]),
                          format_double(b.lower.values()[i]),
                          format_double(b.upper.values()[i])});
    }
    summary = {{"mode", "theory"},
               {"f_bar", b.f_bar},
               {"noise_variance_bound", noise_variance_bound(b)},
               {"grid_points", grid.size()},
               {"peaks", extrema_json(feats.peaks)},
               {"troughs", extrema_json(feats.troughs)}};
    params = f.dgp.to_json();
    params.update({{"theory", true}, {"grid_points", f.grid_points}});
  } else {
    if (f.in.empty()) {
      usage_error("spectrum needs --in <csv> or --theory");
    }
    const SeriesPath y = SeriesPath::ingested(read_series_file(f.in));
    const std::size_t m =
        f.half_width == 0 ? default_half_width(y.size()) : f.half_width;
    const SpectralCurve smoothed = smooth(periodogram(y), m);
    const SpectralBounds b = identification_bounds(smoothed);
    feats = find_features(smoothed);

    auto csv = open_output(f.out);
    write_csv_row(csv, {"lambda", "f_hat", "lower", "upper"});
    for (std::size_t i = 0; i < smoothed.size(); ++i) {
      write_csv_row(csv, {format_double(smoothed.freqs()[i]),
                          format_double(smoothed.values()[i]),
                          format_double(b.lower.values()[i]),
                          format_double(b.upper.values()[i])});
    }
    summary = {{"mode", "estimate"},
               {"T", y.size()},
               {"half_width", m},
               {"f_bar", b.f_bar},
               {"noise_variance_bound", noise_variance_bound(b)},
               {"peaks", extrema_json(feats.peaks)},
               {"troughs", extrema_json(feats.troughs)}};
    params = {{"in", f.in}, {"half_width", m}};
  }
  params["out"] = f.out;
  const std::string sidecar =
      write_manifest(f.out, manifest("spectrum", params, std::nullopt));
  summary["out"] = f.out;
  summary["manifest"] = sidecar;

  if (f.as_json) {
    out << summary.dump(2) << '\n';
    return kExitOk;
  }
  out << "f_bar = " << format_double(summary["f_bar"].get<double>())
      << "  (upper bound on sigma2_eta)\n";
  print_extrema(out, "peaks  ", feats.peaks);
  print_extrema(out, "troughs", feats.troughs);
  return kExitOk;
}

// ---------------------------------------------------------------------- mc

struct McFlags {
  std::string kind;
  DgpFlags dgp;
  std::optional<std::size_t> sample_size;
  std::optional<std::size_t> replications;
  std::string horizons;
  std::string weights;
  std::uint64_t seed = 20090101;
  std::string out;
  bool parallel = false;
  std::size_t half_width = 0;
  bool as_json = false;
};

int cmd_mc(const McFlags& f, std::ostream& out) {
  const bool spectral = f.kind == "spectral";
  ExperimentConfig cfg;
  cfg.dgp = f.dgp.params();
  cfg.sample_size = f.sample_size.value_or(spectral ? 4096 : 5000);
  cfg.replications = f.replications.value_or(spectral ? 100 : 500);
  cfg.master_seed = f.seed;
  cfg.parallel = f.parallel;
  if (!spectral) {
    cfg.horizons = parse_horizons(
        !f.horizons.empty() ? f.horizons
                            : (f.kind == "bias" ? "1,2,5,10" : "10,20,30"));
    if (!f.weights.empty()) {
      cfg.weights = parse_weights(f.weights);
    }
  } else {
    cfg.horizons.clear();
  }

  json params = f.dgp.to_json();
  params.update({{"kind", f.kind},
                 {"T", cfg.sample_size},
                 {"R", cfg.replications},
                 {"horizons", cfg.horizons},
                 {"parallel", cfg.parallel},
                 {"out", f.out}});
  if (cfg.weights) {
    params["weights"] = weights_json(*cfg.weights);
  }

  json summary = {{"kind", f.kind}, {"out", f.out}};
  std::ostringstream human;
  auto csv = open_output(f.out);
  if (f.kind == "bias") {
    const BiasTable table = run_bias_experiment(cfg);
    write_csv_row(csv, {"label", "k", "mean", "sd", "plim", "bias", "mcse",
                        "failures", "replications"});
    json rows = json::array();
    for (const BiasRow& r : table.rows) {
      write_csv_row(csv, {r.label, std::to_string(r.k), format_double(r.mean),
                          format_double(r.sd), format_double(r.plim),
                          format_double(r.bias), format_double(r.mcse),
                          std::to_string(r.failures),
                          std::to_string(table.replications)});
      rows.push_back({{"label", r.label}, {"k", r.k}, {"mean", r.mean},
                      {"sd", r.sd}, {"plim", r.plim}, {"bias", r.bias},
                      {"mcse", r.mcse}, {"failures", r.failures}});
      human << r.label << "  mean " << format_double(r.mean) << "  plim "
            << format_double(r.plim) << "  bias/mcse "
            << format_double(r.bias / r.mcse) << "  failures " << r.failures
            << '\n';
    }
    summary["rows"] = rows;
  } else if (f.kind == "variance") {
    const VarianceTable table = run_variance_experiment(cfg);
    write_csv_row(csv, {"label", "k", "t_var", "oracle", "ratio", "failures",
                        "replications"});
    json rows = json::array();
    for (const VarianceRow& r : table.rows) {
      write_csv_row(csv, {r.label, std::to_string(r.k), format_double(r.t_var),
                          format_double(r.oracle), format_double(r.ratio),
                          std::to_string(r.failures),
                          std::to_string(table.replications)});
      rows.push_back({{"label", r.label}, {"k", r.k}, {"t_var", r.t_var},
                      {"oracle", r.oracle}, {"ratio", r.ratio},
                      {"failures", r.failures}});
      human << r.label << "  T*var " << format_double(r.t_var) << "  oracle "
            << format_double(r.oracle) << "  ratio " << format_double(r.ratio)
            << "  failures " << r.failures << '\n';
    }
    summary["rows"] = rows;
  } else {
    const CoverageReport report = run_spectral_coverage(cfg, f.half_width);
    params["half_width"] = report.half_width;
    write_csv_row(csv, {"replication", "coverage", "f_bar", "bound_holds",
                        "peak_lambda", "peak_error_bins"});
    for (const CoverageReplication& r : report.replications) {
      write_csv_row(csv, {std::to_string(r.replication),
                          format_double(r.coverage), format_double(r.f_bar),
                          r.bound_holds ? "1" : "0", format_double(r.peak_freq),
                          format_double(r.peak_error_bins)});
    }
    summary.update(
        {{"half_width", report.half_width},
         {"mean_coverage", report.mean_coverage},
         {"bound_hold_fraction", report.bound_hold_fraction},
         {"peak_within_two_bins_fraction", report.peak_within_two_bins_fraction},
         {"mean_peak_error_bins", report.mean_peak_error_bins}});
    human << "half_width " << report.half_width << '\n'
          << "mean coverage " << format_double(report.mean_coverage) << '\n'
          << "f_bar >= sigma2_eta in "
          << format_double(report.bound_hold_fraction) << " of replications\n"
          << "peak within 2 bins in "
          << format_double(report.peak_within_two_bins_fraction)
          << " of replications\n";
  }
  summary["manifest"] =
      write_manifest(f.out, manifest("mc " + f.kind, params, f.seed));
  if (f.as_json) {
    out << summary.dump(2) << '\n';
  } else {
    out << human.str() << "wrote " << f.out << '\n';
  }
  return kExitOk;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kHorizonTooLarge:
    case ErrorCode::kBadHalfWidth:
    case ErrorCode::kSearchDomainEmpty:
    case ErrorCode::kConfigInvalid:
      return kExitUsage;
    case ErrorCode::kParse:
    case ErrorCode::kSeriesTooShort:
      return kExitData;
    case ErrorCode::kNonpositiveRatio:
      return kExitDomain;
    case ErrorCode::kInternal:
      return kExitInternal;
  }
  return kExitInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multi-step forecast-error estimation and spectral bounds for "
               "an AR(1) observed with noise"};
  app.require_subcommand(1);

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "simulate a noisy AR(1) path");
  add_dgp_flags(simulate, sim.dgp);
  simulate->add_option("-T,--length", sim.length, "sample size")
      ->capture_default_str();
  simulate->add_option("--burn-in", sim.burn_in, "discarded warm-up steps")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "64-bit seed")->capture_default_str();
  simulate->add_option("--out", sim.out, "output CSV")->required();
  simulate->add_flag("--emit-latent", sim.emit_latent, "add the latent x column");
  simulate->add_flag("--json", sim.as_json, "machine-readable report");

  ReduceFlags red;
  auto* reduce = app.add_subcommand("reduce", "ARMA(1,1) form, bias constant and plims");
  add_dgp_flags(reduce, red.dgp);
  reduce->add_option("--horizons", red.horizons, "comma-separated k values")
      ->capture_default_str();
  reduce->add_flag("--json", red.as_json, "machine-readable report");

  EstimateFlags est;
  auto* estimate = app.add_subcommand("estimate", "estimate theta from a CSV column y");
  estimate->add_option("--in", est.in, "input CSV with a y column")->required();
  auto* k_opt = estimate->add_option("--k", est.k, "single forecast horizon");
  auto* w_opt = estimate->add_option("--weights", est.weights, "k1:w1,k2:w2,...");
  k_opt->excludes(w_opt);
  estimate->add_option("--method", est.method, "closed | minimize")
      ->check(CLI::IsMember({"closed", "minimize"}));
  estimate->add_flag("--demean", est.demean, "subtract the sample mean first");
  estimate->add_option("--profile", est.profile, "write the (theta, Q) grid CSV");
  estimate->add_option("--profile-points", est.profile_points, "profile grid size")
      ->capture_default_str();
  estimate->add_option("--lo", est.lo, "search interval lower end")
      ->capture_default_str();
  estimate->add_option("--hi", est.hi, "search interval upper end")
      ->capture_default_str();
  estimate->add_flag("--json", est.as_json, "machine-readable report");

  SpectrumFlags spec;
  auto* spectrum = app.add_subcommand("spectrum", "spectral bounds for the latent density");
  spectrum->add_option("--in", spec.in, "input CSV with a y column");
  spectrum->add_option("--out", spec.out, "output CSV")->required();
  spectrum->add_option("--half-width", spec.half_width,
                       "Daniell half-width m (default floor(sqrt(T)/2))");
  spectrum->add_flag("--theory", spec.theory, "theoretical curves from parameters");
  add_dgp_flags(spectrum, spec.dgp);
  spectrum->add_option("--grid-points", spec.grid_points, "theory grid size")
      ->capture_default_str();
  spectrum->add_flag("--json", spec.as_json, "machine-readable summary");

  McFlags mcf;
  auto* mc = app.add_subcommand("mc", "Monte Carlo experiments");
  mc->add_option("kind", mcf.kind, "bias | variance | spectral")
      ->required()
      ->check(CLI::IsMember({"bias", "variance", "spectral"}));
  add_dgp_flags(mc, mcf.dgp);
  mc->add_option("-T,--length", mcf.sample_size, "sample size");
  mc->add_option("-R,--replications", mcf.replications, "replications");
  mc->add_option("--horizons", mcf.horizons, "comma-separated k values");
  mc->add_option("--weights", mcf.weights, "k1:w1,... adds a catch-all row");
  mc->add_option("--seed", mcf.seed, "master seed")->capture_default_str();
  mc->add_option("--out", mcf.out, "output CSV")->required();
  mc->add_flag("--parallel", mcf.parallel, "run replications on worker threads");
  mc->add_option("--half-width", mcf.half_width, "Daniell half-width (spectral)");
  mc->add_flag("--json", mcf.as_json, "machine-readable summary");

  std::vector<const char*> argv{"catchall"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(sim, out);
    if (*reduce) return cmd_reduce(red, out);
    if (*estimate) return cmd_estimate(est, out);
    if (*spectrum) return cmd_spectrum(spec, out);
    if (*mc) return cmd_mc(mcf, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace catchall::cli
