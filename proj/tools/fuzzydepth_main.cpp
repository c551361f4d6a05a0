// fuzzydepth: simplicial-type depth functions for trapezoidal fuzzy data.
//
// Subcommands: depth, median, simulate, plot, verify.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzydepth/dataset.hpp"
#include "fuzzydepth/depth.hpp"
#include "fuzzydepth/errors.hpp"
#include "fuzzydepth/metrics.hpp"
#include "fuzzydepth/simulate.hpp"
#include "fuzzydepth/svg.hpp"

namespace fd = fuzzydepth;

namespace {

fd::Sample load_sample(const std::string& path) {
  if (path == "-") return fd::load_csv(std::cin, "<stdin>");
  return fd::load_csv_file(path);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fd::IoError("cannot write " + path);
  out << text;
  if (!out) throw fd::IoError("failed writing " + path);
}

std::uint64_t seed_or_env(std::optional<std::uint64_t> seed_flag) {
  if (seed_flag) return *seed_flag;
  if (const char* env = std::getenv("FUZZYDEPTH_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

struct VerifyResult {
  bool ok = true;
  void row(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << '\n';
    ok = ok && pass;
  }
};

fd::Trapezoid random_trapezoid(fd::Rng& rng, double span) {
  double v[4];
  for (double& x : v) x = span * (2.0 * rng.uniform01() - 1.0);
  std::sort(std::begin(v), std::end(v));
  return fd::make_trapezoid(v[0], v[1], v[2], v[3]);
}

int run_verify(std::size_t trials, std::uint64_t seed) {
  VerifyResult result;
  fd::Rng rng(seed);

  // Containment probability formula against the Monte Carlo estimator.
  std::size_t within_band = 0;
  const std::size_t cases = 50;
  for (std::size_t c = 0; c < cases; ++c) {
    std::size_t n_atoms = 2 + static_cast<std::size_t>(rng.uniform01() * 4.0);
    std::vector<fd::FuzzyNumber> atoms;
    std::vector<double> probs;
    double total = 0.0;
    for (std::size_t k = 0; k < n_atoms; ++k) {
      atoms.push_back(fd::FuzzyNumber::from_trapezoid(random_trapezoid(rng, 5.0)));
      double w = 0.1 + rng.uniform01();
      probs.push_back(w);
      total += w;
    }
    for (double& p : probs) p /= total;
    fd::DiscreteFuzzyRV rv(std::move(atoms), std::move(probs));
    fd::FuzzyNumber query = fd::FuzzyNumber::from_trapezoid(random_trapezoid(rng, 5.0));
    fd::Direction u = rng.uniform01() < 0.5 ? fd::Direction::minus : fd::Direction::plus;
    double alpha = rng.uniform01();
    double p_exact = fd::containment_probability(rv, query, u, alpha);
    double p_mc = fd::mc_containment(rv, query, u, alpha, trials, seed + 17 * c);
    double band = 3.0 * std::sqrt(std::max(p_exact * (1.0 - p_exact), 0.0) /
                                  static_cast<double>(trials));
    if (std::fabs(p_exact - p_mc) <= band + 1e-12) ++within_band;
  }
  result.row("containment probability vs Monte Carlo",
             within_band >= cases - 2,
             std::to_string(within_band) + "/" + std::to_string(cases) +
                 " inside the 3-sigma band");

  // Monte Carlo determinism under a fixed seed.
  {
    fd::DiscreteFuzzyRV rv({fd::FuzzyNumber::crisp(0.0, 1.0),
                            fd::FuzzyNumber::crisp(2.0, 3.0)},
                           {0.5, 0.5});
    fd::FuzzyNumber q = fd::FuzzyNumber::singleton(1.5);
    double a = fd::mc_containment(rv, q, fd::Direction::plus, 0.25, trials, seed);
    double b = fd::mc_containment(rv, q, fd::Direction::plus, 0.25, trials, seed);
    result.row("Monte Carlo determinism", a == b, "");
  }

  // Generator: determinism, validity by construction, and the first moment
  // of the b-coordinate (E[b] = -dof).
  {
    fd::SimConfig cfg{20000, seed + 99, 10.0, 1};
    fd::Sample s1 = fd::simulate_trapezoids(cfg);
    fd::Sample s2 = fd::simulate_trapezoids(cfg);
    bool identical = true;
    double mean_b = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < s1.items().size(); ++i) {
      const fd::Trapezoid& t1 = *s1.items()[i].shape;
      const fd::Trapezoid& t2 = *s2.items()[i].shape;
      identical = identical && t1.a == t2.a && t1.b == t2.b && t1.c == t2.c &&
                  t1.d == t2.d;
      mean_b += t1.b;
    }
    double n = static_cast<double>(cfg.n);
    mean_b /= n;
    for (const fd::SampleItem& it : s1.items()) {
      double dev = it.shape->b - mean_b;
      var_b += dev * dev;
    }
    var_b /= n - 1.0;
    double se = std::sqrt(var_b / n);
    result.row("generator determinism", identical, "");
    result.row("generator moment E[b] = -dof",
               std::fabs(mean_b + static_cast<double>(cfg.dof)) <= 3.0 * se,
               "mean " + std::to_string(mean_b));
  }

  // Exact pair enumeration against quadrature over the containment formula.
  {
    fd::Rng gen(seed + 7);
    bool pass = true;
    for (int c = 0; c < 10 && pass; ++c) {
      std::vector<fd::FuzzyNumber> atoms;
      for (int k = 0; k < 3; ++k)
        atoms.push_back(fd::FuzzyNumber::from_trapezoid(random_trapezoid(gen, 4.0)));
      fd::DiscreteFuzzyRV rv(std::move(atoms), {0.25, 0.35, 0.4});
      fd::FuzzyNumber query =
          fd::FuzzyNumber::from_trapezoid(random_trapezoid(gen, 4.0));
      fd::PopulationDepths exact =
          fd::population_depths(rv, query, fd::PairScheme::iid_pairs);
      fd::CdfOracle oracle{
          [&rv](fd::Direction u, double alpha, double t) {
            return rv.cdf(u, alpha, t);
          },
          [&rv](fd::Direction u, double alpha, double t) {
            return rv.point_mass(u, alpha, t);
          }};
      fd::PopulationDepths quad = fd::population_depths(oracle, query, 4096);
      pass = std::fabs(exact.d_ms - quad.d_ms) < 5e-3 &&
             std::fabs(exact.d_fs - quad.d_fs) < 5e-3;
    }
    result.row("pair enumeration vs quadrature", pass, "iid scheme, 10 cases");
  }

  std::cout << (result.ok ? "verification passed" : "verification FAILED")
            << '\n';
  return result.ok ? 0 : 3;
}

fd::DepthReport report_from_file(const fd::ReportFile& file) {
  fd::DepthReport report;
  report.median = file.median;
  for (const fd::ReportRow& r : file.rows)
    report.rows.push_back(
        {r.d_ns, r.d_ms, r.d_fs, r.rank_ns, r.rank_ms, r.rank_fs});
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial depth functions for fuzzy-number data"};
  app.require_subcommand(1);

  // depth
  auto* depth_cmd = app.add_subcommand("depth", "Rank a dataset by depth");
  std::string depth_csv = "-";
  std::string depth_queries, depth_out, depth_format = "csv";
  std::string pairs = "strict";
  depth_cmd->add_option("csv", depth_csv, "dataset CSV ('-' for stdin)");
  depth_cmd->add_option("--queries", depth_queries,
                        "CSV of query rows evaluated against the dataset");
  depth_cmd->add_option("--pairs", pairs, "pair convention")
      ->check(CLI::IsMember({"strict", "with-diagonal"}));
  depth_cmd->add_option("--out", depth_out, "output path (default stdout)");
  depth_cmd->add_option("--format", depth_format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));

  // median
  auto* median_cmd = app.add_subcommand("median", "Print the median trapezoid");
  std::string median_csv = "-";
  median_cmd->add_option("csv", median_csv, "dataset CSV ('-' for stdin)");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Generate a synthetic dataset");
  fd::SimConfig cfg;
  std::optional<std::uint64_t> sim_seed;
  std::string sim_out;
  sim_cmd->add_option("--n", cfg.n, "sample size")->required();
  sim_cmd->add_option("--seed", sim_seed, "RNG seed (or FUZZYDEPTH_SEED)");
  sim_cmd->add_option("--sigma", cfg.sigma, "std. deviation of the location");
  sim_cmd->add_option("--dof", cfg.dof, "chi-squared degrees of freedom");
  sim_cmd->add_option("--out", sim_out, "output path (default stdout)");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Render a depth-colored SVG");
  std::string plot_csv, plot_report, plot_out, plot_by = "mS";
  fd::PlotOptions plot_options;
  plot_cmd->add_option("csv", plot_csv, "dataset CSV")->required();
  plot_cmd->add_option("--report", plot_report, "report CSV from 'depth'")
      ->required();
  plot_cmd->add_option("--top", plot_options.top_k, "deepest items to color");
  plot_cmd->add_option("--bottom", plot_options.bottom_k,
                       "shallowest items to color");
  plot_cmd->add_flag("--median", plot_options.highlight_median,
                     "stroke the median fuzzy set in black");
  plot_cmd->add_option("--by", plot_by, "depth column for the coloring")
      ->check(CLI::IsMember({"nS", "mS", "FS"}));
  plot_cmd->add_option("--out", plot_out, "output SVG path")->required();

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Run Monte Carlo and oracle cross-checks");
  std::size_t trials = 100000;
  std::optional<std::uint64_t> verify_seed;
  verify_cmd->add_option("--trials", trials, "Monte Carlo trials per case");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed (or FUZZYDEPTH_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }

  try {
    if (depth_cmd->parsed()) {
      fd::Sample sample = load_sample(depth_csv);
      fd::PairRule rule = pairs == "strict" ? fd::PairRule::strict
                                            : fd::PairRule::with_diagonal;
      fd::ReportFile file;
      if (depth_queries.empty()) {
        file = fd::assemble_report(sample, fd::rank_sample(sample, rule));
      } else {
        fd::Sample queries = load_sample(depth_queries);
        file = fd::assemble_report(queries,
                                   fd::rank_queries(sample, queries, rule));
      }
      std::ostringstream out;
      fd::write_report(file, out,
                       depth_format == "csv" ? fd::ReportFormat::csv
                                             : fd::ReportFormat::json);
      write_text(depth_out, out.str());
    } else if (median_cmd->parsed()) {
      fd::Sample sample = load_sample(median_csv);
      if (!sample.all_trapezoidal())
        throw fd::NotTrapezoidal("median needs trapezoid rows");
      std::vector<fd::Trapezoid> shapes;
      for (const fd::SampleItem& it : sample.items())
        for (std::uint32_t c = 0; c < it.count; ++c)
          shapes.push_back(*it.shape);
      fd::Trapezoid m = fd::median_trapezoid(shapes);
      std::cout << fd::format_sig12(m.a) << ',' << fd::format_sig12(m.b) << ','
                << fd::format_sig12(m.c) << ',' << fd::format_sig12(m.d)
                << '\n';
    } else if (sim_cmd->parsed()) {
      cfg.seed = seed_or_env(sim_seed);
      fd::Sample sample = fd::simulate_trapezoids(cfg);
      std::ostringstream out;
      fd::save_csv(sample, out);
      write_text(sim_out, out.str());
    } else if (plot_cmd->parsed()) {
      fd::Sample sample = load_sample(plot_csv);
      fd::ReportFile file = fd::read_report_file(plot_report);
      if (file.rows.size() != sample.items().size())
        throw fd::DomainError("report does not match the dataset");
      plot_options.by = plot_by == "nS" ? fd::DepthKind::naive
                        : plot_by == "FS" ? fd::DepthKind::simplicial
                                          : fd::DepthKind::modified;
      write_text(plot_out, fd::render_svg(file, plot_options));
    } else if (verify_cmd->parsed()) {
      return run_verify(trials, seed_or_env(verify_seed));
    }
  } catch (const fd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
