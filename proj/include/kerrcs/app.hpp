// Copyright 2026 The kerrcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run configuration, validation, execution and the
// figure presets. tools/kerrcs.cpp is a thin main() around this header.

#ifndef KERRCS_APP_HPP
#define KERRCS_APP_HPP

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "kerrcs/field.hpp"
#include "kerrcs/io.hpp"
#include "kerrcs/kerrcs.hpp"

namespace kerrcs::app {

/// Invalid command-line configuration. `flag()` names the offending option.
class ConfigError : public DomainError {
 public:
  ConfigError(std::string flag, const std::string& what)
      : DomainError(flag + ": " + what), flag_(std::move(flag)) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

enum class Command { kDist, kMandel, kHusimi, kWigner, kState };
enum class Format { kCsv, kJson };

inline std::string_view to_string(Command c) {
  switch (c) {
    case Command::kDist: return "dist";
    case Command::kMandel: return "mandel";
    case Command::kHusimi: return "husimi";
    case Command::kWigner: return "wigner";
    case Command::kState: return "state";
  }
  return "?";
}

inline std::string_view to_string(Format f) { return f == Format::kCsv ? "csv" : "json"; }

/// Tolerances used by one run. Named profiles give the starting point;
/// individual flags override single entries.
struct Tolerances {
  std::string profile = "default";
  TruncationPolicy truncation{};
  PhaseSpaceOptions phase_space{};

  static Tolerances named(std::string_view name) {
    Tolerances t;
    t.profile = std::string(name);
    if (name == "default") {
      // library defaults
    } else if (name == "strict") {
      t.truncation.tail_tol = 1e-15;
      t.truncation.series.rel_tol = 1e-14;
      t.phase_space.series.rel_tol = 1e-14;
      t.phase_space.husimi_truncation_tol = 1e-10;
      t.phase_space.wigner_tail_tol = 1e-12;
    } else if (name == "loose") {
      t.truncation.tail_tol = 1e-10;
      t.truncation.series.rel_tol = 1e-10;
      t.phase_space.series.rel_tol = 1e-10;
      t.phase_space.husimi_truncation_tol = 1e-6;
      t.phase_space.wigner_tail_tol = 1e-7;
    } else {
      throw ConfigError("--tolerance-profile",
                        "unknown profile '" + std::string(name) + "' (default, strict, loose)");
    }
    return t;
  }
};

struct SweepSpec {
  double alpha_min = 0.0;
  double alpha_max = 5.0;
  std::size_t points = 101;

  std::vector<double> values() const {
    std::vector<double> a(points);
    for (std::size_t i = 0; i < points; ++i) {
      a[i] = points == 1 ? alpha_min
                         : alpha_min + (alpha_max - alpha_min) * static_cast<double>(i) /
                                           static_cast<double>(points - 1);
    }
    if (points > 1) a.back() = alpha_max;
    return a;
  }
};

struct RunConfig {
  Command command = Command::kDist;
  Family family = Family::kCoherent;
  complex alpha{1.0, 0.0};
  std::size_t m = 0;
  std::optional<double> chi;
  PhaseSpaceGrid grid{};
  SweepSpec sweep{};
  std::string output;
  Format format = Format::kCsv;
  Tolerances tolerances{};
  std::optional<double> tail_tol;
  std::optional<double> wigner_tail_tol;
  std::optional<double> series_rel_tol;
  bool closed_form = false;
  // Runtime only: never changes the output bytes.
  unsigned threads = 1;

  std::optional<KerrParams> params() const {
    if (!chi) return std::nullopt;
    return KerrParams(*chi);
  }

  /// Profile plus per-flag overrides.
  Tolerances effective_tolerances() const {
    Tolerances t = tolerances;
    if (tail_tol) t.truncation.tail_tol = *tail_tol;
    if (wigner_tail_tol) t.phase_space.wigner_tail_tol = *wigner_tail_tol;
    if (series_rel_tol) {
      t.truncation.series.rel_tol = *series_rel_tol;
      t.phase_space.series.rel_tol = *series_rel_tol;
    }
    return t;
  }

  void validate() const {
    if (output.empty()) throw ConfigError("--output", "an output path is required");
    if (family == Family::kCustom) {
      throw ConfigError("--family", "family 'custom' cannot be built from flags");
    }
    const std::string fam(kerrcs::to_string(family));
    if (is_deformed(family) && !chi) {
      throw ConfigError("--chi", "family " + fam + " requires chi/omega0");
    }
    if (!is_deformed(family) && chi) {
      throw ConfigError("--chi", "family " + fam + " is undeformed and takes no chi/omega0");
    }
    if (chi && !(*chi > 0.0 && *chi < 1.0)) {
      throw ConfigError("--chi", "chi/omega0 must lie in (0, 1), got " + io::format_double(*chi));
    }
    if (!takes_photon_count(family) && m != 0) {
      throw ConfigError("--m", "family " + fam + " takes no photon count");
    }
    if (command == Command::kMandel) {
      if (!(sweep.alpha_min >= 0.0) || !std::isfinite(sweep.alpha_min)) {
        throw ConfigError("--alpha-min", "must be finite and nonnegative");
      }
      if (!(sweep.alpha_max >= sweep.alpha_min) || !std::isfinite(sweep.alpha_max)) {
        throw ConfigError("--alpha-max", "must be finite and at least --alpha-min");
      }
      if (sweep.points < 1) throw ConfigError("--points", "need at least one point");
    } else if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
      throw ConfigError("--alpha", "must be finite");
    }
    if (command == Command::kHusimi || command == Command::kWigner) {
      try {
        grid.validate();
      } catch (const DomainError& e) {
        throw ConfigError("--grid", e.what());
      }
    }
    if (command == Command::kState && format != Format::kJson) {
      throw ConfigError("--format", "state output is JSON only");
    }
    if (closed_form) {
      const bool fields = command == Command::kHusimi || command == Command::kWigner;
      const bool dist = command == Command::kDist &&
                        (family == Family::kDpancsA || family == Family::kDpancsD);
      if (!fields && !dist) {
        throw ConfigError("--closed-form",
                          "available for husimi, wigner, and dist of dpancs-a/dpancs-d");
      }
    }
    auto positive = [](const std::optional<double>& v, const char* flag) {
      if (v && !(*v > 0.0 && *v < 1.0)) throw ConfigError(flag, "must lie in (0, 1)");
    };
    positive(tail_tol, "--tail-tol");
    positive(wigner_tail_tol, "--wigner-tail-tol");
    positive(series_rel_tol, "--series-rel-tol");
  }

  /// Canonical arguments that reproduce this run (threads excluded).
  std::vector<std::string> to_args() const {
    using io::format_double;
    std::vector<std::string> a{std::string(to_string(command)), "--family",
                               std::string(kerrcs::to_string(family))};
    if (command == Command::kMandel) {
      a.insert(a.end(), {"--alpha-min", format_double(sweep.alpha_min), "--alpha-max",
                         format_double(sweep.alpha_max), "--points", std::to_string(sweep.points)});
    } else {
      a.insert(a.end(), {"--alpha", format_double(alpha.real()), "--alpha-im",
                         format_double(alpha.imag())});
    }
    a.insert(a.end(), {"--m", std::to_string(m)});
    if (chi) a.insert(a.end(), {"--chi", format_double(*chi)});
    if (command == Command::kHusimi || command == Command::kWigner) {
      a.insert(a.end(), {"--x-range", format_double(grid.x_min) + ":" + format_double(grid.x_max) +
                                          ":" + std::to_string(grid.nx),
                         "--y-range", format_double(grid.y_min) + ":" + format_double(grid.y_max) +
                                          ":" + std::to_string(grid.ny)});
    }
    a.insert(a.end(), {"--output", output, "--format", std::string(to_string(format)),
                       "--tolerance-profile", tolerances.profile});
    if (tail_tol) a.insert(a.end(), {"--tail-tol", format_double(*tail_tol)});
    if (wigner_tail_tol) a.insert(a.end(), {"--wigner-tail-tol", format_double(*wigner_tail_tol)});
    if (series_rel_tol) a.insert(a.end(), {"--series-rel-tol", format_double(*series_rel_tol)});
    if (closed_form) a.push_back("--closed-form");
    return a;
  }
};

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

struct RunReport {
  std::vector<std::string> files;  // data file, then sidecar
  /// Empty when every value was certified.
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

namespace detail {

inline StateLabel config_label(const RunConfig& c) {
  return {c.family, c.alpha, c.m, c.chi};
}

/// Closed-form evaluator for the configured family.
inline double closed_husimi(const RunConfig& c, const Tolerances& t, complex z) {
  const auto& tol = t.phase_space.series;
  switch (c.family) {
    case Family::kCoherent: return husimi_closed_coherent(c.alpha, z);
    case Family::kPacs: return husimi_closed_pacs(c.alpha, c.m, z);
    case Family::kNlcs: return husimi_closed_a(c.alpha, 0, *c.params(), z, tol);
    case Family::kDocs: return husimi_closed_d(c.alpha, 0, *c.params(), z, tol);
    case Family::kDpancsA: return husimi_closed_a(c.alpha, c.m, *c.params(), z, tol);
    case Family::kDpancsD: return husimi_closed_d(c.alpha, c.m, *c.params(), z, tol);
    case Family::kCustom: break;
  }
  throw DomainError("no closed form for this family");
}

inline double closed_wigner(const RunConfig& c, const Tolerances& t, complex z) {
  const auto& o = t.phase_space;
  switch (c.family) {
    case Family::kCoherent: return wigner_closed_coherent(z, c.alpha);
    case Family::kPacs: return wigner_closed_pacs(z, c.alpha, c.m, o);
    case Family::kNlcs: return wigner_closed_a(z, c.alpha, 0, *c.params(), o);
    case Family::kDocs: return wigner_closed_d(z, c.alpha, 0, *c.params(), o);
    case Family::kDpancsA: return wigner_closed_a(z, c.alpha, c.m, *c.params(), o);
    case Family::kDpancsD: return wigner_closed_d(z, c.alpha, c.m, *c.params(), o);
    case Family::kCustom: break;
  }
  throw DomainError("no closed form for this family");
}

inline io::json tolerances_json(const Tolerances& t) {
  return {{"profile", t.profile},
          {"tail_tol", t.truncation.tail_tol},
          {"max_dim", t.truncation.max_dim},
          {"series_rel_tol", t.truncation.series.rel_tol},
          {"series_abs_tol", t.truncation.series.abs_tol},
          {"series_max_terms", t.truncation.series.max_terms},
          {"husimi_truncation_tol", t.phase_space.husimi_truncation_tol},
          {"wigner_tail_tol", t.phase_space.wigner_tail_tol},
          {"max_kmax", t.phase_space.max_kmax}};
}

inline io::json parameters_json(const RunConfig& c) {
  io::json p = io::label_to_json(config_label(c));
  if (c.command == Command::kMandel) {
    p.erase("alpha_re");
    p.erase("alpha_im");
    p["sweep"] = {{"alpha_min", c.sweep.alpha_min},
                  {"alpha_max", c.sweep.alpha_max},
                  {"points", c.sweep.points}};
  }
  if (c.command == Command::kHusimi || c.command == Command::kWigner) {
    p["grid"] = io::grid_to_json(c.grid);
  }
  p["closed_form"] = c.closed_form;
  p["format"] = std::string(to_string(c.format));
  return p;
}

}  // namespace detail

inline std::string sidecar_path(const std::string& output) { return output + ".meta.json"; }

/// Executes one validated configuration, writing the data file and its
/// metadata sidecar. Certification failures of individual sweep points are
/// reported in the RunReport (and the sidecar) rather than thrown; anything
/// else propagates.
inline RunReport run(const RunConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const Tolerances tol = config.effective_tolerances();
  const auto params = config.params();
  const bool csv = config.format == Format::kCsv;

  RunReport report;
  io::json summary;
  std::ostringstream out;

  auto build_state = [&] {
    return make_state(config.family, config.alpha, config.m, params, 1, tol.truncation);
  };

  switch (config.command) {
    case Command::kDist: {
      const FockState state = build_state();
      PhotonDistribution d;
      if (config.closed_form) {
        const std::size_t kmax = state.dim() - 1;
        d = config.family == Family::kDpancsA
                ? closed_form_distribution_a(config.alpha, config.m, *params, kmax,
                                             tol.truncation.series)
                : closed_form_distribution_d(config.alpha, config.m, *params, kmax,
                                             tol.truncation.series);
      } else {
        d = photon_distribution(state);
      }
      summary = {{"dim", d.probabilities.size()}, {"mean", d.mean()}, {"variance", d.variance()},
                 {"mandel_q", mandel_q(d)}};
      if (csv) {
        io::write_distribution_csv(out, d);
      } else {
        out << io::dump(io::distribution_to_json(d));
      }
      break;
    }
    case Command::kMandel: {
      const auto alphas = config.sweep.values();
      const MandelSweep sweep =
          mandel_sweep(config.family, config.m, params, alphas, tol.truncation, config.threads);
      for (const auto& e : sweep.errors) {
        if (!e.empty()) report.failures.push_back(e);
      }
      summary = {{"points", alphas.size()}, {"failed_points", report.failures.size()}};
      const std::span<const MandelSweep> one(&sweep, 1);
      if (csv) {
        io::write_mandel_csv(out, one);
      } else {
        out << io::dump(io::mandel_to_json(one));
      }
      break;
    }
    case Command::kHusimi:
    case Command::kWigner: {
      const bool wig = config.command == Command::kWigner;
      const FieldKind kind = wig ? FieldKind::kWigner : FieldKind::kHusimi;
      PhaseSpaceField field;
      if (config.closed_form) {
        field = field_over_grid(
            kind, config.grid,
            [&](complex z) {
              return wig ? detail::closed_wigner(config, tol, z)
                         : detail::closed_husimi(config, tol, z);
            },
            detail::config_label(config), config.threads);
      } else {
        const FockState state = build_state();
        field = wig ? wigner_field(state, config.grid, tol.phase_space, config.threads)
                    : husimi_field(state, config.grid, tol.phase_space, config.threads);
      }
      summary = {{"min", field.min()},
                 {"max", field.max()},
                 {"integral", field.integral()},
                 {"boundary_max_abs", field.boundary_max_abs()}};
      if (wig) summary["negativity"] = negativity(field);
      if (csv) {
        io::write_field_csv(out, field);
      } else {
        out << io::dump(io::field_to_json(field));
      }
      break;
    }
    case Command::kState: {
      const FockState state = build_state();
      summary = {{"dim", state.dim()}, {"tail_bound", state.tail_bound()},
                 {"norm_squared", state.norm_squared()}};
      out << io::dump(io::state_to_json(state));
      break;
    }
  }

  io::write_text_file(config.output, out.str());
  report.files.push_back(config.output);

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  io::json meta;
  meta["schema_version"] = io::kSchemaVersion;
  meta["kerrcs_version"] = KERRCS_VERSION;
  meta["command"] = std::string(to_string(config.command));
  meta["argv"] = config.to_args();
  meta["parameters"] = detail::parameters_json(config);
  meta["tolerances"] = detail::tolerances_json(tol);
  meta["outputs"] = {config.output};
  meta["summary"] = summary;
  meta["failures"] = report.failures;
  // Everything above is a function of the config; runtime is not.
  meta["runtime"] = {{"threads", config.threads}, {"wall_time_s", wall}};
  const std::string side = sidecar_path(config.output);
  io::write_text_file(side, io::dump(meta));
  report.files.push_back(side);
  return report;
}

// ---------------------------------------------------------------------------
// Figure presets
// ---------------------------------------------------------------------------

struct FigureOptions {
  std::string output_dir = ".";
  Format format = Format::kCsv;
  Tolerances tolerances{};
  bool closed_form = false;
  unsigned threads = 1;
};

/// The run configurations that regenerate figure n (1..7).
inline std::vector<RunConfig> figure_configs(int n, const FigureOptions& opt) {
  const std::string ext = opt.format == Format::kCsv ? ".csv" : ".json";
  auto base = [&](Command cmd, Family fam, double alpha, std::size_t m,
                  std::optional<double> chi, const std::string& stem) {
    RunConfig c;
    c.command = cmd;
    c.family = fam;
    c.alpha = alpha;
    c.m = m;
    c.chi = chi;
    c.format = opt.format;
    c.tolerances = opt.tolerances;
    c.threads = opt.threads;
    c.output = opt.output_dir + "/" + stem + ext;
    return c;
  };
  const PhaseSpaceGrid wide = PhaseSpaceGrid::square(-4.0, 4.0, 161);
  std::vector<RunConfig> out;
  switch (n) {
    case 1:
      out.push_back(base(Command::kDist, Family::kPacs, 3.0, 1, std::nullopt, "fig1_pacs"));
      out.push_back(base(Command::kDist, Family::kDpancsA, 3.0, 1, 0.1, "fig1_dpancs-a"));
      out.push_back(base(Command::kDist, Family::kDpancsD, 3.0, 1, 0.1, "fig1_dpancs-d"));
      break;
    case 2:
      for (std::size_t m : {0u, 1u}) {
        const std::string suffix = "_m" + std::to_string(m);
        out.push_back(base(Command::kMandel, Family::kPacs, 0.0, m, std::nullopt,
                           "fig2_pacs" + suffix));
        out.push_back(base(Command::kMandel, Family::kDpancsA, 0.0, m, 0.15,
                           "fig2_dpancs-a" + suffix));
        out.push_back(base(Command::kMandel, Family::kDpancsD, 0.0, m, 0.15,
                           "fig2_dpancs-d" + suffix));
      }
      for (auto& c : out) c.sweep = {0.0, 5.0, 101};
      break;
    case 3:
    case 4:
    case 5:
    case 6: {
      const Command cmd = n <= 4 ? Command::kHusimi : Command::kWigner;
      const Family fam = n % 2 == 1 ? Family::kDpancsA : Family::kDpancsD;
      const std::string stem = "fig" + std::to_string(n) + "_" +
                               std::string(to_string(cmd)) + "_" +
                               std::string(kerrcs::to_string(fam));
      out.push_back(base(cmd, fam, 1.1, 1, 0.15, stem));
      out.back().grid = wide;
      break;
    }
    case 7:
      out.push_back(base(Command::kWigner, Family::kDpancsA, 0.5, 4, 0.15, "fig7_wigner_dpancs-a"));
      out.back().grid = PhaseSpaceGrid::square(-3.0, 3.0, 161);
      break;
    default:
      throw ConfigError("figure", "figure number must be 1..7, got " + std::to_string(n));
  }
  for (auto& c : out) {
    c.closed_form = opt.closed_form && c.command != Command::kMandel &&
                    (c.command != Command::kDist || c.family != Family::kPacs);
  }
  return out;
}

inline RunReport reproduce_figure(int n, const FigureOptions& opt) {
  RunReport all;
  for (const auto& c : figure_configs(n, opt)) {
    RunReport r = run(c);
    all.files.insert(all.files.end(), r.files.begin(), r.files.end());
    all.failures.insert(all.failures.end(), r.failures.begin(), r.failures.end());
  }
  return all;
}

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

inline constexpr const char* kProfileEnv = "KERRCS_TOLERANCE_PROFILE";

/// What the command line asked for.
struct Invocation {
  bool is_figure = false;
  RunConfig config;
  int figure = 0;
  FigureOptions figure_options;
};

/// Raw flag values, converted to a RunConfig after parsing.
struct RawFlags {
  std::string family = "coherent";
  double alpha = 1.0;
  double alpha_im = 0.0;
  long long m = 0;
  double chi = 0.0;
  std::string grid;
  std::string x_range = "-4:4:161";
  std::string y_range = "-4:4:161";
  double alpha_min = 0.0;
  double alpha_max = 5.0;
  long long points = 101;
  std::string output;
  std::string output_dir = ".";
  std::string format = "csv";
  std::string profile;
  double tail_tol = 0.0;
  double wigner_tail_tol = 0.0;
  double series_rel_tol = 0.0;
  bool closed_form = false;
  unsigned threads = 1;
  int figure = 0;
};

/// Registers every subcommand on `cli`. After `cli.parse(...)` succeeds,
/// call `finish_invocation(cli, flags)`.
inline void build_cli(CLI::App& cli, RawFlags& f) {
  cli.require_subcommand(1);
  auto common = [&](CLI::App* s) {
    s->add_option("--output,-o", f.output, "output file")->required();
    s->add_option("--format", f.format, "csv or json");
    s->add_option("--tolerance-profile", f.profile,
                  "default, strict or loose (overrides $KERRCS_TOLERANCE_PROFILE)");
    s->add_option("--tail-tol", f.tail_tol, "Fock truncation tail bound");
    s->add_option("--wigner-tail-tol", f.wigner_tail_tol, "completeness deficit for Wigner");
    s->add_option("--series-rel-tol", f.series_rel_tol, "relative series tolerance");
    s->add_option("--threads", f.threads, "worker threads (0 = all cores)");
  };
  auto state_flags = [&](CLI::App* s, bool with_alpha) {
    s->add_option("--family", f.family, "coherent, pacs, nlcs, docs, dpancs-a, dpancs-d")
        ->required();
    if (with_alpha) {
      s->add_option("--alpha", f.alpha, "state parameter, real part");
      s->add_option("--alpha-im", f.alpha_im, "state parameter, imaginary part");
    }
    s->add_option("--m", f.m, "number of added photons");
    s->add_option("--chi", f.chi, "chi/omega0 of the Kerr medium");
  };
  auto* dist = cli.add_subcommand("dist", "photon-number distribution");
  state_flags(dist, true);
  dist->add_flag("--closed-form", f.closed_form, "use the closed-form P_k");
  common(dist);

  auto* mandel = cli.add_subcommand("mandel", "Mandel Q over a range of real alpha");
  state_flags(mandel, false);
  mandel->add_option("--alpha-min", f.alpha_min, "first alpha");
  mandel->add_option("--alpha-max", f.alpha_max, "last alpha");
  mandel->add_option("--points", f.points, "number of alpha values");
  common(mandel);

  for (const char* name : {"husimi", "wigner"}) {
    auto* s = cli.add_subcommand(name, std::string(name) + " function on a grid");
    state_flags(s, true);
    s->add_option("--grid", f.grid, "square grid lo:hi:n");
    s->add_option("--x-range", f.x_range, "lo:hi:n along Re");
    s->add_option("--y-range", f.y_range, "lo:hi:n along Im");
    s->add_flag("--closed-form", f.closed_form, "evaluate the closed-form series");
    common(s);
  }

  auto* state = cli.add_subcommand("state", "Fock coefficients as JSON");
  state_flags(state, true);
  common(state);
  state->get_option("--format")->default_str("json");

  auto* fig = cli.add_subcommand("figure", "regenerate the data behind a figure");
  fig->add_option("n", f.figure, "figure number 1..7")->required();
  fig->add_option("--output-dir", f.output_dir, "directory for the data files");
  fig->add_option("--format", f.format, "csv or json");
  fig->add_option("--tolerance-profile", f.profile, "default, strict or loose");
  fig->add_flag("--closed-form", f.closed_form, "use closed forms for fields and P_k");
  fig->add_option("--threads", f.threads, "worker threads (0 = all cores)");
}

inline Tolerances resolve_profile(const std::string& flag_value) {
  if (!flag_value.empty()) return Tolerances::named(flag_value);
  if (const char* env = std::getenv(kProfileEnv); env != nullptr && *env != '\0') {
    try {
      return Tolerances::named(env);
    } catch (const ConfigError&) {
      throw ConfigError(kProfileEnv, "unknown profile '" + std::string(env) + "'");
    }
  }
  return Tolerances::named("default");
}

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  throw ConfigError("--format", "must be csv or json, got '" + s + "'");
}

inline PhaseSpaceGrid parse_axes(const std::string& xs, const std::string& ys) {
  PhaseSpaceGrid gx;
  PhaseSpaceGrid gy;
  try {
    gx = PhaseSpaceGrid::parse(xs);
  } catch (const DomainError& e) {
    throw ConfigError("--x-range", e.what());
  }
  try {
    gy = PhaseSpaceGrid::parse(ys);
  } catch (const DomainError& e) {
    throw ConfigError("--y-range", e.what());
  }
  return {gx.x_min, gx.x_max, gy.x_min, gy.x_max, gx.nx, gy.nx};
}

inline Invocation finish_invocation(const CLI::App& cli, const RawFlags& f) {
  Invocation inv;
  const auto subs = cli.get_subcommands();
  const CLI::App* sub = subs.front();
  const std::string name = sub->get_name();
  auto given = [&](const char* flag) {
    const CLI::Option* o = sub->get_option_no_throw(flag);
    return o != nullptr && o->count() > 0;
  };
  const Tolerances tolerances = resolve_profile(f.profile);

  if (name == "figure") {
    inv.is_figure = true;
    inv.figure = f.figure;
    if (f.figure < 1 || f.figure > 7) {
      throw ConfigError("figure", "figure number must be 1..7, got " + std::to_string(f.figure));
    }
    inv.figure_options = {f.output_dir, parse_format(f.format), tolerances, f.closed_form,
                          f.threads};
    return inv;
  }

  RunConfig& c = inv.config;
  if (name == "dist") c.command = Command::kDist;
  else if (name == "mandel") c.command = Command::kMandel;
  else if (name == "husimi") c.command = Command::kHusimi;
  else if (name == "wigner") c.command = Command::kWigner;
  else c.command = Command::kState;

  try {
    c.family = family_from_string(f.family);
  } catch (const DomainError& e) {
    throw ConfigError("--family", e.what());
  }
  c.alpha = {f.alpha, f.alpha_im};
  if (f.m < 0) throw ConfigError("--m", "must be nonnegative, got " + std::to_string(f.m));
  c.m = static_cast<std::size_t>(f.m);
  if (given("--chi")) c.chi = f.chi;
  if (c.command == Command::kHusimi || c.command == Command::kWigner) {
    if (given("--grid") && (given("--x-range") || given("--y-range"))) {
      throw ConfigError("--grid", "cannot be combined with --x-range/--y-range");
    }
    if (given("--grid")) {
      try {
        c.grid = PhaseSpaceGrid::parse(f.grid);
      } catch (const DomainError& e) {
        throw ConfigError("--grid", e.what());
      }
    } else {
      c.grid = parse_axes(f.x_range, f.y_range);
    }
  }
  if (c.command == Command::kMandel) {
    if (f.points < 1) throw ConfigError("--points", "need at least one point");
    c.sweep = {f.alpha_min, f.alpha_max, static_cast<std::size_t>(f.points)};
  }
  c.output = f.output;
  c.format = parse_format(given("--format") ? f.format
                                            : (c.command == Command::kState ? "json" : "csv"));
  c.tolerances = tolerances;
  if (given("--tail-tol")) c.tail_tol = f.tail_tol;
  if (given("--wigner-tail-tol")) c.wigner_tail_tol = f.wigner_tail_tol;
  if (given("--series-rel-tol")) c.series_rel_tol = f.series_rel_tol;
  c.closed_form = f.closed_form;
  c.threads = f.threads;
  c.validate();
  return inv;
}

/// Parses an argument vector (without the program name). Throws
/// CLI::ParseError for malformed syntax and ConfigError for bad values.
inline Invocation parse_args(const std::vector<std::string>& args) {
  CLI::App cli{"kerrcs"};
  RawFlags flags;
  build_cli(cli, flags);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  cli.parse(reversed);
  return finish_invocation(cli, flags);
}

}  // namespace kerrcs::app

#endif  // KERRCS_APP_HPP
