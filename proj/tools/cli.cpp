#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "csv_io.hpp"
#include "gsft/errors.hpp"
#include "gsft/faddeeva.hpp"
#include "gsft/reference.hpp"
#include "gsft/sampling.hpp"
#include "gsft/transform.hpp"

namespace gsft::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridFlags {
  double min;
  double max;
  std::size_t count;

  EvaluationGrid build() const {
    if (count < 1) throw InvalidArgument("--grid-count must be >= 1");
    if (count > 1 && !(min < max)) {
      throw InvalidArgument("--grid-min must be < --grid-max when --grid-count > 1");
    }
    return EvaluationGrid::uniform(min, max, count);
  }
};

struct Options {
  std::optional<double> h;
  std::optional<double> c;
  std::optional<int> n;
  int trunc_depth = TransformConfig::kDefaultTruncDepth;
  GridFlags grid{-10.0, 10.0, 2001};
  std::string formulation = "harmonic";
  std::string input;
  std::string output;
  std::string summary;
  std::string save_table;
  std::string load_table;
  std::optional<double> tolerance;
  std::size_t threads = 1;
  std::string figure;
};

void add_grid_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--grid-min", o.grid.min, "First evaluation point")->capture_default_str();
  cmd.add_option("--grid-max", o.grid.max, "Last evaluation point")->capture_default_str();
  cmd.add_option("--grid-count", o.grid.count, "Number of evaluation points")
      ->capture_default_str();
}

void add_output_flag(CLI::App& cmd, Options& o) {
  cmd.add_option("--output", o.output, "Output CSV path (default: stdout)");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  return in;
}

/// Writes through `write` to --output, or to `fallback` when no path is set.
template <class Write>
void emit(const std::string& path, std::ostream& fallback, Write&& write) {
  if (path.empty()) {
    write(fallback);
    fallback.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing output file '" + path + "'");
}

int run_eval_w(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw InvalidArgument("eval-w requires --input");
  auto in = open_input(o.input);
  const auto points = read_points_csv(in);
  std::vector<Complex> values;
  values.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      values.push_back(w(points[i]));
    } catch (const OverflowError& e) {
      throw OverflowError("data row " + std::to_string(i + 1) + ": " + e.what(),
                          e.log_magnitude());
    }
  }
  emit(o.output, out, [&](std::ostream& s) { write_w_csv(s, values); });
  return kExitOk;
}

int run_transform(const Options& o, Direction direction, std::ostream& out) {
  if (o.input.empty()) throw InvalidArgument("transform requires --input");
  const Formulation formulation = parse_formulation(o.formulation);

  auto in = open_input(o.input);
  const SampleRows rows = read_samples_csv(in);
  if (o.n && *o.n != rows.half_count) {
    throw InvalidArgument("--n " + std::to_string(*o.n) + " disagrees with samples file (N = " +
                          std::to_string(rows.half_count) + ")");
  }

  if (!o.load_table.empty()) {
    if (formulation != Formulation::table) {
      throw InvalidArgument("--load-table requires --formulation table");
    }
    auto table_in = open_input(o.load_table);
    const WeightTable table = read_weight_table(table_in);
    if (o.h && *o.h != table.config().step()) {
      throw InvalidArgument("--h disagrees with the step stored in the loaded table");
    }
    const ComplexSampledFunction samples(table.config().step(), rows.values);
    const Spectrum spectrum = direction == Direction::forward
                                  ? forward_with_table(samples, table)
                                  : inverse_with_table(samples, table);
    emit(o.output, out, [&](std::ostream& s) { write_spectrum_csv(s, spectrum); });
    return kExitOk;
  }

  if (!o.h) throw InvalidArgument("transform requires --h");
  const TransformConfig cfg(*o.h, o.c.value_or(*o.h), rows.half_count, o.trunc_depth);
  const ComplexSampledFunction samples(cfg.step(), rows.values);
  const EvaluationGrid grid = o.grid.build();

  const auto compute = [&]() -> Spectrum {
    if (formulation != Formulation::table) {
      if (!o.save_table.empty()) {
        throw InvalidArgument("--save-table requires --formulation table");
      }
      return evaluate(formulation, direction, samples, cfg, grid, o.threads);
    }
    const WeightTable table = precompute_weights(cfg, grid, direction, o.threads);
    if (!o.save_table.empty()) {
      std::ofstream table_out(o.save_table, std::ios::binary | std::ios::trunc);
      if (!table_out) throw IoError("cannot open table file '" + o.save_table + "'");
      write_weight_table(table_out, table);
      if (!table_out) throw IoError("failed writing table file '" + o.save_table + "'");
    }
    return direction == Direction::forward ? forward_with_table(samples, table)
                                           : inverse_with_table(samples, table);
  };
  const Spectrum spectrum = compute();
  emit(o.output, out, [&](std::ostream& s) { write_spectrum_csv(s, spectrum); });
  return kExitOk;
}

int run_window_demo(const Options& o, std::ostream& out) {
  const double h = o.h.value_or(0.25);
  const int n = o.n.value_or(10);
  std::vector<double> fits = {0.15, 0.2, 0.25};
  if (o.c) fits = {*o.c};
  std::vector<TransformConfig> cfgs;
  for (const double c : fits) cfgs.emplace_back(h, c, n);
  const EvaluationGrid grid = o.grid.build();

  emit(o.output, out, [&](std::ostream& s) {
    s << 't';
    for (const double c : fits) s << fmt::format(",kernel_c{}", c);
    for (const double c : fits) s << fmt::format(",window_c{}", c);
    s << '\n';
    std::vector<SampledFunction> ones;
    for (const auto& cfg : cfgs) {
      ones.push_back(SampledFunction::from_function(cfg, [](double) { return 1.0; }));
    }
    for (const double t : grid.points()) {
      s << format_double(t);
      for (const auto& cfg : cfgs) s << ',' << format_double(gaussian_kernel(t, cfg));
      for (std::size_t i = 0; i < cfgs.size(); ++i) {
        s << ',' << format_double(reconstruct(ones[i], cfgs[i], t));
      }
      s << '\n';
    }
  });
  return kExitOk;
}

int run_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  // Published steps, rounded versions of 1/(2N+1).
  const bool fig6 = o.figure == "fig6";
  const int n = fig6 ? 50 : 300;
  const double h = fig6 ? 0.0099 : 0.00166389;
  const double bound = o.tolerance.value_or(fig6 ? 1e-3 : 3e-5);
  const TransformConfig cfg = TransformConfig::with_effective_length(h, h, n, kExampleLength);
  const EvaluationGrid grid = o.grid.build();
  const ErrorEnvelope env = delta_envelope(cfg, grid, o.threads);

  emit(o.output, out, [&](std::ostream& s) { write_envelope_csv(s, env); });

  const nlohmann::ordered_json summary = {
      {"schema", 1},
      {"figure", o.figure},
      {"n", n},
      {"h", h},
      {"c", h},
      {"grid", {{"min", o.grid.min}, {"max", o.grid.max}, {"count", o.grid.count}}},
      {"max_abs_re", env.max_abs_re},
      {"max_abs_im", env.max_abs_im},
      {"bound", bound},
      {"pass", env.max_abs_re <= bound && env.max_abs_im <= bound},
  };
  const auto write_summary = [&](std::ostream& s) { s << summary.dump(2) << '\n'; };
  if (!o.summary.empty()) {
    emit(o.summary, out, write_summary);
  } else if (!o.output.empty()) {
    write_summary(out);
  } else {
    write_summary(err);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier transforms of sampled wavelets via weighted sums of Faddeeva functions",
               "gsft"};
  // --h is the sampling step, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto* eval_w = app.add_subcommand("eval-w", "Evaluate w(z) for every row of a re,im CSV");
  eval_w->add_option("--input", o.input, "CSV with header re,im")->required();
  add_output_flag(*eval_w, o);

  CLI::App* transforms[2] = {
      app.add_subcommand("transform", "Forward transform of an n,value_re,value_im samples CSV"),
      app.add_subcommand("inverse", "Inverse transform of spectrum samples")};
  for (auto* cmd : transforms) {
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("--input", o.input, "Samples CSV (n,value_re,value_im)")->required();
    cmd->add_option("--h", o.h, "Sampling step");
    cmd->add_option("--c", o.c, "Gaussian fitting parameter (default: h)");
    cmd->add_option("--n", o.n, "Half sample count N (checked against the file)");
    cmd->add_option("--trunc-depth", o.trunc_depth, "Negative-index terms kept by truncated/table")
        ->capture_default_str();
    cmd->add_option("--formulation", o.formulation, "weighted | truncated | table | harmonic")
        ->capture_default_str()
        ->check(CLI::IsMember({"weighted", "truncated", "table", "harmonic"}));
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    cmd->add_option("--save-table", o.save_table, "Write the precomputed weight table here");
    cmd->add_option("--load-table", o.load_table, "Use a previously saved weight table");
    add_grid_flags(*cmd, o);
    add_output_flag(*cmd, o);
  }

  auto* window = app.add_subcommand("window-demo", "Gaussian kernels and window reconstructions");
  window->set_help_flag("--help", "Print this help message and exit");
  window->add_option("--h", o.h, "Sampling step (default 0.25)");
  window->add_option("--c", o.c, "Single fitting parameter (default: 0.15, 0.2, 0.25)");
  window->add_option("--n", o.n, "Half sample count N (default 10)");
  add_grid_flags(*window, o);
  add_output_flag(*window, o);

  auto* reproduce = app.add_subcommand("reproduce", "Error envelope of the worked example");
  reproduce->add_option("figure", o.figure, "fig6 (N = 50) or fig7 (N = 300)")
      ->required()
      ->check(CLI::IsMember({"fig6", "fig7"}));
  reproduce->add_option("--tolerance", o.tolerance, "Pass bound (default: 1e-3 / 3e-5)");
  reproduce->add_option("--summary", o.summary, "JSON summary path");
  reproduce->add_option("--threads", o.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  add_grid_flags(*reproduce, o);
  add_output_flag(*reproduce, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  if (window->parsed()) {
    // Window demo has its own default grid.
    if (window->count("--grid-min") == 0) o.grid.min = -4.0;
    if (window->count("--grid-max") == 0) o.grid.max = 4.0;
    if (window->count("--grid-count") == 0) o.grid.count = 801;
  }

  try {
    if (eval_w->parsed()) return run_eval_w(o, out);
    if (transforms[0]->parsed()) return run_transform(o, Direction::forward, out);
    if (transforms[1]->parsed()) return run_transform(o, Direction::inverse, out);
    if (window->parsed()) return run_window_demo(o, out);
    return run_reproduce(o, out, err);
  } catch (const ParseError& e) {
    err << "gsft: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << "gsft: " << e.what() << '\n';
    return kExitIo;
  } catch (const OverflowError& e) {
    err << "gsft: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ConvergenceError& e) {
    err << "gsft: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "gsft: " << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace gsft::cli
