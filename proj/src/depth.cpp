#include "fuzzydepth/depth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "fuzzydepth/errors.hpp"

namespace fuzzydepth {

namespace {

constexpr Direction kDirections[] = {Direction::plus, Direction::minus};

double binom2(double n) { return 0.5 * n * (n - 1.0); }

struct PairEnvelope {
  PLFunction lo, hi;
};

PairEnvelope pair_envelope(const FuzzyNumber& xi, const FuzzyNumber& xj,
                           Direction u) {
  const PLFunction& a = xi.profile(u);
  const PLFunction& b = xj.profile(u);
  return {min_envelope(a, b), max_envelope(a, b)};
}

}  // namespace

double pair_measure(const FuzzyNumber& query, const FuzzyNumber& xi,
                    const FuzzyNumber& xj, Direction u) {
  PairEnvelope env = pair_envelope(xi, xj, u);
  return measure_between(query.profile(u), env.lo, env.hi);
}

namespace {

// Shared accumulation for the three empirical depths.  Walks every
// unordered pair of distinct-item groups once; multiplicities supply the
// pair counts of the expanded sample.
struct EmpiricalAccumulator {
  double measure_plus = 0.0;
  double measure_minus = 0.0;
  double indicator = 0.0;

  void add_pair(const FuzzyNumber& query, const FuzzyNumber& xi,
                const FuzzyNumber& xj, double weight) {
    if (weight == 0.0) return;
    bool inside_both = true;
    double m[2];
    for (int k = 0; k < 2; ++k) {
      PairEnvelope env = pair_envelope(xi, xj, kDirections[k]);
      const PLFunction& g = query.profile(kDirections[k]);
      m[k] = measure_between(g, env.lo, env.hi);
      inside_both = inside_both && contained_everywhere(g, env.lo, env.hi);
    }
    measure_plus += weight * m[0];
    measure_minus += weight * m[1];
    if (inside_both) indicator += weight;
  }
};

}  // namespace

DepthTriple empirical_depths(const Sample& sample, const FuzzyNumber& query,
                             PairRule rule) {
  const auto& items = sample.items();
  const double n = static_cast<double>(sample.expanded_size());
  if (n < 2.0) throw SampleTooSmall("depth needs an expanded sample size >= 2");

  EmpiricalAccumulator acc;
  for (std::size_t g = 0; g < items.size(); ++g) {
    double cg = static_cast<double>(items[g].count);
    // Two distinct copies of the same item form a degenerate envelope.
    double same = binom2(cg);
    if (rule == PairRule::with_diagonal) same += cg;
    acc.add_pair(query, items[g].value, items[g].value, same);
    for (std::size_t h = g + 1; h < items.size(); ++h) {
      double ch = static_cast<double>(items[h].count);
      acc.add_pair(query, items[g].value, items[h].value, cg * ch);
    }
  }

  double norm = rule == PairRule::strict ? binom2(n) : binom2(n + 1.0);
  double ln_plus = acc.measure_plus / norm;
  double ln_minus = acc.measure_minus / norm;
  return DepthTriple{acc.indicator / norm, 0.5 * (ln_plus + ln_minus),
                     std::min(ln_plus, ln_minus)};
}

DiscreteFuzzyRV::DiscreteFuzzyRV(std::vector<FuzzyNumber> atoms,
                                 std::vector<double> probs)
    : atoms_(std::move(atoms)), probs_(std::move(probs)) {
  if (atoms_.empty() || atoms_.size() != probs_.size())
    throw DomainError("discrete rv needs one probability per atom");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw DomainError("probabilities must be nonnegative");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw DomainError("probabilities must sum to 1");
}

double DiscreteFuzzyRV::cdf(Direction u, double alpha, double t) const {
  double f = 0.0;
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (atoms_[k].support(u, alpha) <= t) f += probs_[k];
  return f;
}

double DiscreteFuzzyRV::point_mass(Direction u, double alpha, double t) const {
  double m = 0.0;
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (atoms_[k].support(u, alpha) == t) m += probs_[k];
  return m;
}

namespace {

double containment_from_cdf(double f, double mass) {
  // Accumulated probability weights may overshoot the unit interval by a few
  // ulps; anything beyond that is a broken oracle.
  if (!(f >= -1e-9 && f <= 1.0 + 1e-9))
    throw OracleError("CDF value outside [0,1]");
  f = std::clamp(f, 0.0, 1.0);
  double miss_above = 1.0 - f;
  double miss_below = std::max(f - mass, 0.0);
  return 1.0 - miss_above * miss_above - miss_below * miss_below;
}

}  // namespace

double containment_probability(const DiscreteFuzzyRV& rv,
                               const FuzzyNumber& query, Direction u,
                               double alpha) {
  double t = query.support(u, alpha);
  return containment_from_cdf(rv.cdf(u, alpha, t), rv.point_mass(u, alpha, t));
}

double containment_probability(const CdfOracle& oracle,
                               const FuzzyNumber& query, Direction u,
                               double alpha) {
  double t = query.support(u, alpha);
  double mass = oracle.point_mass ? oracle.point_mass(u, alpha, t) : 0.0;
  return containment_from_cdf(oracle.cdf(u, alpha, t), mass);
}

PopulationDepths population_depths(const DiscreteFuzzyRV& rv,
                                   const FuzzyNumber& query,
                                   PairScheme scheme) {
  const auto& atoms = rv.atoms();
  const auto& probs = rv.probs();

  double same_mass = 0.0;
  for (double p : probs) same_mass += p * p;
  bool condition_distinct =
      scheme == PairScheme::distinct_pairs && same_mass < 1.0;
  double norm = condition_distinct ? 1.0 - same_mass : 1.0;

  double integral[2] = {0.0, 0.0};
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    for (std::size_t l = k; l < atoms.size(); ++l) {
      double w = k == l ? probs[k] * probs[k] : 2.0 * probs[k] * probs[l];
      if (k == l && condition_distinct) continue;
      if (w == 0.0) continue;
      for (int d = 0; d < 2; ++d) {
        PairEnvelope env = pair_envelope(atoms[k], atoms[l], kDirections[d]);
        integral[d] += w * measure_between(query.profile(kDirections[d]),
                                           env.lo, env.hi);
      }
    }
  }
  double ip = integral[0] / norm;
  double im = integral[1] / norm;
  return PopulationDepths{0.5 * (ip + im), std::min(ip, im)};
}

PopulationDepths population_depths(const CdfOracle& oracle,
                                   const FuzzyNumber& query,
                                   std::size_t grid_size) {
  if (grid_size < 64)
    throw QuadratureError("oracle population depths need a grid of >= 64");
  std::size_t cells = grid_size + (grid_size % 2);  // Simpson needs even
  double integral[2];
  for (int d = 0; d < 2; ++d) {
    Direction u = kDirections[d];
    double sum = containment_probability(oracle, query, u, 0.0) +
                 containment_probability(oracle, query, u, 1.0);
    for (std::size_t i = 1; i < cells; ++i) {
      double alpha = static_cast<double>(i) / static_cast<double>(cells);
      sum += (i % 2 == 1 ? 4.0 : 2.0) *
             containment_probability(oracle, query, u, alpha);
    }
    integral[d] = sum / (3.0 * static_cast<double>(cells));
  }
  return PopulationDepths{0.5 * (integral[0] + integral[1]),
                          std::min(integral[0], integral[1])};
}

namespace {

double coordinate_median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace

Trapezoid median_trapezoid(std::span<const Trapezoid> shapes) {
  if (shapes.empty()) throw NotTrapezoidal("median of an empty sample");
  std::vector<double> a, b, c, d;
  for (const Trapezoid& t : shapes) {
    a.push_back(t.a);
    b.push_back(t.b);
    c.push_back(t.c);
    d.push_back(t.d);
  }
  return make_trapezoid(coordinate_median(std::move(a)),
                        coordinate_median(std::move(b)),
                        coordinate_median(std::move(c)),
                        coordinate_median(std::move(d)));
}

double round_sig12(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

// Dense ranks over depth values quantized to the printed precision, so that
// values that print equal share a rank.  1 is the deepest.
std::vector<std::size_t> dense_ranks(const std::vector<double>& depths) {
  std::vector<double> distinct;
  distinct.reserve(depths.size());
  for (double d : depths) distinct.push_back(round_sig12(d));
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<std::size_t> ranks(depths.size());
  for (std::size_t i = 0; i < depths.size(); ++i) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(),
                               round_sig12(depths[i]), std::greater<>());
    ranks[i] = static_cast<std::size_t>(it - distinct.begin()) + 1;
  }
  return ranks;
}

std::vector<std::size_t> maximizers(const std::vector<std::size_t>& ranks) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (ranks[i] == 1) out.push_back(i);
  return out;
}

}  // namespace

DepthReport rank_sample(const Sample& sample, PairRule rule) {
  const auto& items = sample.items();
  const double n = static_cast<double>(sample.expanded_size());
  if (n < 2.0) throw SampleTooSmall("ranking needs an expanded sample size >= 2");
  if (!sample.all_trapezoidal())
    throw NotTrapezoidal("ranking needs trapezoid shapes for the median");

  std::size_t g_count = items.size();
  std::vector<double> lp(g_count, 0.0), lm(g_count, 0.0), ind(g_count, 0.0);

  // Each unordered pair of groups is visited once; its envelopes are reused
  // across all query items.
  for (std::size_t g = 0; g < g_count; ++g) {
    for (std::size_t h = g; h < g_count; ++h) {
      double cg = static_cast<double>(items[g].count);
      double weight = h == g ? binom2(cg)
                             : cg * static_cast<double>(items[h].count);
      if (rule == PairRule::with_diagonal && h == g) weight += cg;
      if (weight == 0.0) continue;
      PairEnvelope env[2] = {
          pair_envelope(items[g].value, items[h].value, Direction::plus),
          pair_envelope(items[g].value, items[h].value, Direction::minus)};
      for (std::size_t q = 0; q < g_count; ++q) {
        bool inside = true;
        for (int d = 0; d < 2; ++d) {
          const PLFunction& prof = items[q].value.profile(kDirections[d]);
          (d == 0 ? lp : lm)[q] +=
              weight * measure_between(prof, env[d].lo, env[d].hi);
          inside = inside && contained_everywhere(prof, env[d].lo, env[d].hi);
        }
        if (inside) ind[q] += weight;
      }
    }
  }

  double norm = rule == PairRule::strict ? binom2(n) : binom2(n + 1.0);
  std::vector<double> dns(g_count), dms(g_count), dfs(g_count);
  for (std::size_t q = 0; q < g_count; ++q) {
    dns[q] = ind[q] / norm;
    dms[q] = 0.5 * (lp[q] + lm[q]) / norm;
    dfs[q] = std::min(lp[q], lm[q]) / norm;
  }

  std::vector<Trapezoid> shapes;
  for (const SampleItem& it : items)
    for (std::uint32_t c = 0; c < it.count; ++c) shapes.push_back(*it.shape);

  DepthReport report;
  report.median = median_trapezoid(shapes);
  std::vector<std::size_t> rns = dense_ranks(dns), rms = dense_ranks(dms),
                           rfs = dense_ranks(dfs);
  for (std::size_t q = 0; q < g_count; ++q)
    report.rows.push_back(
        {dns[q], dms[q], dfs[q], rns[q], rms[q], rfs[q]});
  report.max_ns = maximizers(rns);
  report.max_ms = maximizers(rms);
  report.max_fs = maximizers(rfs);
  return report;
}

DepthReport rank_queries(const Sample& sample, const Sample& queries,
                         PairRule rule) {
  if (!sample.all_trapezoidal())
    throw NotTrapezoidal("ranking needs trapezoid shapes for the median");
  std::vector<Trapezoid> shapes;
  for (const SampleItem& it : sample.items())
    for (std::uint32_t c = 0; c < it.count; ++c) shapes.push_back(*it.shape);

  std::size_t q_count = queries.items().size();
  std::vector<double> dns(q_count), dms(q_count), dfs(q_count);
  for (std::size_t q = 0; q < q_count; ++q) {
    DepthTriple t = empirical_depths(sample, queries.items()[q].value, rule);
    dns[q] = t.d_ns;
    dms[q] = t.d_ms;
    dfs[q] = t.d_fs;
  }

  DepthReport report;
  report.median = median_trapezoid(shapes);
  std::vector<std::size_t> rns = dense_ranks(dns), rms = dense_ranks(dms),
                           rfs = dense_ranks(dfs);
  for (std::size_t q = 0; q < q_count; ++q)
    report.rows.push_back({dns[q], dms[q], dfs[q], rns[q], rms[q], rfs[q]});
  report.max_ns = maximizers(rns);
  report.max_ms = maximizers(rms);
  report.max_fs = maximizers(rfs);
  return report;
}

}  // namespace fuzzydepth
