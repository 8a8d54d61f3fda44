// carpetdim: dimension theory of Baranski carpets from the command line.
//
// Exit codes: 0 success, 1 file/parse/usage error, 2 validation failure,
// 3 maximizer non-convergence.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "carpetdim/carpet.hpp"
#include "carpetdim/report.hpp"
#include "carpetdim/svg.hpp"
#include "carpetdim/symbolic.hpp"

namespace {

using carpetdim::CarpetSpec;
using nlohmann::ordered_json;

struct CommonFlags {
  std::string input;
  std::string format = "json";
  double tol_eq = 1e-9;
  double tol_root = 1e-13;
  int starts = 16;
  std::uint64_t seed = 0;
  bool strict_partition = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_solver_flags = true) {
  cmd->add_option("--input", f.input, "carpet spec file (JSON)")->required();
  cmd->add_option("--format", f.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  if (with_solver_flags) {
    cmd->add_option("--tol-eq", f.tol_eq, "tie tolerance for equality branches");
    cmd->add_option("--tol-root", f.tol_root, "residual tolerance for exponent solves");
    cmd->add_option("--starts", f.starts, "random restarts for the maximizer");
    cmd->add_option("--seed", f.seed, "seed for randomized components");
  }
  cmd->add_flag("--strict-partition", f.strict_partition,
                "require the ratio lists to sum to 1 (disables allow_gaps)");
}

CarpetSpec load_spec(const CommonFlags& f) {
  CarpetSpec spec = carpetdim::load_carpet_file(f.input);
  if (f.strict_partition) spec.allow_gaps = false;
  return spec;
}

// Validation gate shared by every subcommand: prints violations and exits 2.
CarpetSpec load_valid_spec(const CommonFlags& f) {
  CarpetSpec spec = load_spec(f);
  const carpetdim::ValidationReport v = carpetdim::validate(spec);
  if (!v.ok()) {
    ordered_json doc;
    doc["error"] = "validation_failed";
    doc["violations"] = v.violations;
    if (!v.warnings.empty()) doc["warnings"] = v.warnings;
    std::cout << doc.dump(2) << "\n";
    std::exit(2);
  }
  return spec;
}

carpetdim::AnalyzeOptions analyze_options(const CommonFlags& f) {
  carpetdim::AnalyzeOptions opts;
  opts.tol_eq = f.tol_eq;
  opts.tol_root = f.tol_root;
  opts.maximize.dirichlet_starts = f.starts;
  opts.maximize.seed = f.seed;
  return opts;
}

// Only boxcount has a CSV shape; everywhere else the flag is a usage error.
int reject_csv(const CommonFlags& f) {
  if (f.format == "csv") {
    std::cerr << "carpetdim: --format csv is only available for 'oracle boxcount'\n";
    return 1;
  }
  return 0;
}

int run_analyze(const CommonFlags& f) {
  if (int rc = reject_csv(f)) return rc;
  const CarpetSpec spec = load_valid_spec(f);
  const carpetdim::AnalysisReport rep = carpetdim::analyze(spec, analyze_options(f));
  if (!rep.hausdorff.branch1.converged || !rep.hausdorff.branch2.converged) {
    std::cerr << "carpetdim: maximizer did not converge within the iteration budget\n";
    return 3;
  }
  std::cout << carpetdim::report_to_json(rep) << "\n";
  return 0;
}

int run_boxcount(const CommonFlags& f, int min_exp, int max_exp) {
  const CarpetSpec spec = load_valid_spec(f);
  const carpetdim::BoxCountFit fit = carpetdim::box_count_estimate(spec, min_exp, max_exp);
  if (f.format == "csv") {
    std::cout << "delta,count\n";
    for (std::size_t i = 0; i < fit.deltas.size(); ++i)
      std::cout << carpetdim::round_sig(fit.deltas[i]) << "," << fit.counts[i] << "\n";
    return 0;
  }
  const carpetdim::ExponentProfile profile = carpetdim::assouad_lower_profile(spec, f.tol_root);
  ordered_json doc;
  doc["slope"] = carpetdim::round_sig(fit.slope);
  doc["slope_stderr"] = carpetdim::round_sig(fit.slope_stderr);
  doc["box_dimension_root"] = carpetdim::round_sig(profile.dim_box());
  ordered_json counts = ordered_json::array();
  for (std::size_t i = 0; i < fit.deltas.size(); ++i) {
    ordered_json row;
    row["delta"] = carpetdim::round_sig(fit.deltas[i]);
    row["count"] = fit.counts[i];
    counts.push_back(row);
  }
  doc["counts"] = counts;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_gridmax(const CommonFlags& f, int resolution) {
  if (int rc = reject_csv(f)) return rc;
  const CarpetSpec spec = load_valid_spec(f);
  const carpetdim::ExponentProfile profile = carpetdim::assouad_lower_profile(spec, f.tol_root);
  const carpetdim::MaximizeOptions mopts{f.starts, f.seed, 1e-12, 10000};

  ordered_json doc;
  doc["n"] = resolution;
  for (auto which : {carpetdim::Objective::G1, carpetdim::Objective::G2}) {
    const auto grid = carpetdim::simplex_grid_max(spec, which, resolution, &profile);
    const auto opt = carpetdim::maximize(spec, which, mopts);
    ordered_json entry;
    entry["grid"] = carpetdim::round_sig(grid.value);
    entry["optimizer"] = carpetdim::round_sig(opt.value);
    entry["gap"] = carpetdim::round_sig(opt.value - grid.value);
    doc[carpetdim::to_string(which)] = entry;
  }
  {
    const auto grid = carpetdim::simplex_grid_max(spec, carpetdim::Objective::F, resolution, &profile);
    ordered_json entry;
    entry["grid"] = carpetdim::round_sig(grid.value);
    entry["box_dimension_root"] = carpetdim::round_sig(profile.dim_box());
    entry["gap"] = carpetdim::round_sig(profile.dim_box() - grid.value);
    doc["f"] = entry;
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_massdiff(const CommonFlags& f, int depth, int samples) {
  if (int rc = reject_csv(f)) return rc;
  const CarpetSpec spec = load_valid_spec(f);
  const int d = spec.map_count();
  std::mt19937_64 rng(f.seed ^ 0x6a09e667f3bcc909ULL);
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::uniform_int_distribution<int> pick_depth(1, depth);
  std::exponential_distribution<double> ex(1.0);

  double max_diff = 0;
  for (int s = 0; s < samples; ++s) {
    carpetdim::SimplexPoint q;
    q.q.resize(static_cast<std::size_t>(d));
    double sum = 0;
    for (double& x : q.q) {
      x = ex(rng) + 1e-6;
      sum += x;
    }
    for (double& x : q.q) x /= sum;

    carpetdim::Word word(static_cast<std::size_t>(depth) + 4);
    for (int& letter : word) letter = pick(rng);
    const int n = pick_depth(rng);
    carpetdim::Word prefix(word.begin(), word.begin() + n);
    const double delta = carpetdim::word_geometry(spec, prefix).longer_side();
    if (!(delta < 1.0)) continue;
    const auto sq = carpetdim::approximate_square(spec, word, delta);
    const double fast = carpetdim::square_mass(spec, q, sq);
    const double brute = carpetdim::brute_mass_oracle(spec, q, sq);
    max_diff = std::max(max_diff, std::fabs(fast - brute));
  }

  ordered_json doc;
  doc["samples"] = samples;
  doc["depth"] = depth;
  doc["max_abs_diff"] = carpetdim::round_sig(max_diff);
  doc["pass_1e-12"] = max_diff <= 1e-12;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_render(const CommonFlags& f, int depth, int size, const std::string& output) {
  if (int rc = reject_csv(f)) return rc;
  const CarpetSpec spec = load_valid_spec(f);
  const std::string svg = carpetdim::render_svg(spec, depth, size);
  if (output.empty()) {
    std::cout << svg;
    return 0;
  }
  std::ofstream out(output);
  if (!out) {
    std::cerr << "carpetdim: cannot write " << output << "\n";
    return 1;
  }
  out << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimension theory of Baranski carpets"};
  app.require_subcommand(1);

  CommonFlags fa;
  CLI::App* analyze = app.add_subcommand("analyze", "full dimension and condition report");
  add_common(analyze, fa);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force and empirical cross-checks");
  oracle->require_subcommand(1);

  CommonFlags fb;
  int min_exp = 4, max_exp = 11;
  CLI::App* boxcount = oracle->add_subcommand("boxcount", "mesh box-counting slope");
  add_common(boxcount, fb);
  boxcount->add_option("--min-exp", min_exp, "smallest scale exponent (delta = 2^-k)");
  boxcount->add_option("--max-exp", max_exp, "largest scale exponent");

  CommonFlags fg;
  int grid_n = 60;
  CLI::App* gridmax = oracle->add_subcommand("gridmax", "simplex-lattice maxima vs optimizer");
  add_common(gridmax, fg);
  gridmax->add_option("--n", grid_n, "lattice resolution");

  CommonFlags fm;
  int depth = 6, samples = 400;
  CLI::App* massdiff = oracle->add_subcommand("massdiff", "square-mass formula vs enumeration");
  add_common(massdiff, fm);
  massdiff->add_option("--depth", depth, "maximum square depth")->check(CLI::Range(1, 12));
  massdiff->add_option("--samples", samples, "number of sampled squares");

  CommonFlags fr;
  int render_depth = 1, render_size = 1024;
  std::string render_output;
  CLI::App* render = app.add_subcommand("render", "draw the depth-n prefractal as SVG");
  add_common(render, fr, /*with_solver_flags=*/false);
  render->add_option("--depth", render_depth, "iteration depth");
  render->add_option("--size", render_size, "viewport edge in pixels");
  render->add_option("--output", render_output, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 1;
  }

  try {
    if (analyze->parsed()) return run_analyze(fa);
    if (boxcount->parsed()) return run_boxcount(fb, min_exp, max_exp);
    if (gridmax->parsed()) return run_gridmax(fg, grid_n);
    if (massdiff->parsed()) return run_massdiff(fm, depth, samples);
    if (render->parsed()) return run_render(fr, render_depth, render_size, render_output);
  } catch (const std::exception& e) {
    std::cerr << "carpetdim: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
