#include "fuzzydepth/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fuzzydepth/errors.hpp"

namespace fuzzydepth {

double Rng::uniform01() {
  // 53 random bits, the usual [0,1) double.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  has_spare_ = true;
  return u * m;
}

double Rng::chi_squared(unsigned dof) {
  double sum = 0.0;
  for (unsigned i = 0; i < dof; ++i) {
    double z = normal();
    sum += z * z;
  }
  return sum;
}

std::size_t Rng::pick(std::span<const double> weights) {
  double u = uniform01();
  double cum = 0.0;
  for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
    cum += weights[k];
    if (u < cum) return k;
  }
  return weights.size() - 1;
}

Sample simulate_trapezoids(const SimConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("simulation needs n >= 2");
  if (!(cfg.sigma > 0.0)) throw ConfigError("simulation needs sigma > 0");
  if (cfg.dof == 0) throw ConfigError("simulation needs dof >= 1");

  Rng rng(cfg.seed);
  std::vector<SampleItem> items;
  items.reserve(cfg.n);
  for (std::uint64_t i = 0; i < cfg.n; ++i) {
    double x1 = cfg.sigma * rng.normal();
    double x2 = rng.chi_squared(cfg.dof);
    double x3 = rng.chi_squared(cfg.dof);
    double x4 = rng.chi_squared(cfg.dof);
    Trapezoid t = make_trapezoid(x1 - x2 - x3, x1 - x2, x1 + x2, x1 + x2 + x4);
    items.push_back({FuzzyNumber::from_trapezoid(t), t, 1,
                     "x" + std::to_string(i + 1)});
  }
  return Sample(std::move(items));
}

namespace {

std::vector<double> default_symmetry_grid(const DiscreteFuzzyRV& rv) {
  std::vector<double> grid{0.0, 0.5, 1.0};
  for (const FuzzyNumber& atom : rv.atoms()) {
    const PLFunction* fs[] = {&atom.upper(), &atom.lower_neg()};
    for (const PLFunction* f : fs)
      grid.insert(grid.end(), f->knots().begin(), f->knots().end());
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

// Weighted values merged within tolerance, sorted ascending.
std::vector<std::pair<double, double>> weighted_multiset(
    std::vector<std::pair<double, double>> entries) {
  std::sort(entries.begin(), entries.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& [v, p] : entries) {
    if (!merged.empty() && std::fabs(merged.back().first - v) <= 1e-12)
      merged.back().second += p;
    else
      merged.emplace_back(v, p);
  }
  return merged;
}

}  // namespace

bool f_symmetric(const DiscreteFuzzyRV& rv, const FuzzyNumber& center,
                 std::span<const double> alpha_grid) {
  std::vector<double> grid(alpha_grid.begin(), alpha_grid.end());
  if (grid.empty()) grid = default_symmetry_grid(rv);

  for (Direction u : {Direction::plus, Direction::minus}) {
    for (double alpha : grid) {
      double c = center.support(u, alpha);
      std::vector<std::pair<double, double>> diffs;
      for (std::size_t k = 0; k < rv.atoms().size(); ++k)
        diffs.emplace_back(c - rv.atoms()[k].support(u, alpha),
                           rv.probs()[k]);
      auto ms = weighted_multiset(diffs);
      for (auto& [v, p] : diffs) v = -v;
      auto neg = weighted_multiset(std::move(diffs));
      if (ms.size() != neg.size()) return false;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (std::fabs(ms[i].first - neg[i].first) > 1e-12) return false;
        if (std::fabs(ms[i].second - neg[i].second) > 1e-12) return false;
      }
    }
  }
  return true;
}

double mc_containment(const DiscreteFuzzyRV& rv, const FuzzyNumber& query,
                      Direction u, double alpha, std::size_t trials,
                      std::uint64_t seed) {
  if (trials < 1000) throw ConfigError("mc_containment needs >= 1000 trials");
  double t = query.support(u, alpha);
  std::vector<double> values;
  values.reserve(rv.atoms().size());
  for (const FuzzyNumber& atom : rv.atoms())
    values.push_back(atom.support(u, alpha));

  Rng rng(seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    double s1 = values[rng.pick(rv.probs())];
    double s2 = values[rng.pick(rv.probs())];
    if (std::min(s1, s2) <= t && t <= std::max(s1, s2)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace fuzzydepth
