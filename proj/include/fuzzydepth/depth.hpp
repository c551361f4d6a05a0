#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fuzzydepth/fuzzy_number.hpp"

namespace fuzzydepth {

// Pair convention for the empirical U-statistic sums.
//
// strict:        pairs i < j, normalized by C(n,2).  This is the convention
//                that reproduces the published worked example values.
// with_diagonal: pairs j >= i including the diagonal, normalized by
//                C(n+1,2); kept for comparison with the literal summation
//                bounds of the sample formulas.
enum class PairRule { strict, with_diagonal };

// Pair weighting for population depths over a finitely supported variable.
//
// distinct_pairs: ordered pairs of distinct atoms, weights renormalized by
//                 1 - sum(p^2).  Matches the convention of the worked
//                 examples, where the two observations are the two distinct
//                 outcomes.  Falls back to the single degenerate pair when
//                 the variable has one atom.
// iid_pairs:      all ordered pairs including repeats (true iid draws);
//                 consistent with containment_probability and with the
//                 Monte Carlo estimator.
enum class PairScheme { distinct_pairs, iid_pairs };

struct DepthTriple {
  double d_ns;  // naive: indicator of full containment
  double d_ms;  // modified: average of the two directional measures
  double d_fs;  // simplicial: minimum of the two directional measures
};

// L_{i,j,u}: Lebesgue measure of the alphas where the query's u-profile lies
// inside the envelope of the pair (xi, xj).
double pair_measure(const FuzzyNumber& query, const FuzzyNumber& xi,
                    const FuzzyNumber& xj, Direction u);

// Empirical depths of a query with respect to a sample (leave-in; the query
// may coincide with sample items).  Multiplicities expand to repeated items.
// Throws SampleTooSmall if the expanded size is < 2.
DepthTriple empirical_depths(const Sample& sample, const FuzzyNumber& query,
                             PairRule rule = PairRule::strict);

// Finitely supported fuzzy random variable.
class DiscreteFuzzyRV {
 public:
  DiscreteFuzzyRV(std::vector<FuzzyNumber> atoms, std::vector<double> probs);

  const std::vector<FuzzyNumber>& atoms() const { return atoms_; }
  const std::vector<double>& probs() const { return probs_; }

  // CDF of the real random variable s_X(u, alpha) at t, and its point mass.
  double cdf(Direction u, double alpha, double t) const;
  double point_mass(Direction u, double alpha, double t) const;

 private:
  std::vector<FuzzyNumber> atoms_;
  std::vector<double> probs_;
};

// Distribution of the support value s_X(u, alpha) given through its CDF;
// point_mass may be omitted for continuous distributions.
struct CdfOracle {
  std::function<double(Direction, double alpha, double t)> cdf;
  std::function<double(Direction, double alpha, double t)> point_mass;
};

// P(s_query(u,alpha) in [m_X(u,alpha), M_X(u,alpha)]) over an iid pair:
//   1 - [1 - F(t)]^2 - [F(t) - P(s = t)]^2,  t = s_query(u, alpha),
// which reduces to 2 F (1 - F) for continuous distributions.
double containment_probability(const DiscreteFuzzyRV& rv,
                               const FuzzyNumber& query, Direction u,
                               double alpha);
double containment_probability(const CdfOracle& oracle,
                               const FuzzyNumber& query, Direction u,
                               double alpha);

struct PopulationDepths {
  double d_ms;
  double d_fs;
};

// Population depths of a query against a finitely supported variable.  The
// alpha-integral is exact: atom pairs are enumerated with their probability
// weights and each pair contributes a measure_between value.
PopulationDepths population_depths(const DiscreteFuzzyRV& rv,
                                   const FuzzyNumber& query,
                                   PairScheme scheme = PairScheme::distinct_pairs);

// Population depths against a CDF oracle, integrating the containment
// probability over alpha with composite Simpson quadrature.  Throws
// QuadratureError if grid_size < 64.
PopulationDepths population_depths(const CdfOracle& oracle,
                                   const FuzzyNumber& query,
                                   std::size_t grid_size);

// Coordinate-wise median trapezoid; even sizes take the midpoint of the two
// central order statistics.
Trapezoid median_trapezoid(std::span<const Trapezoid> shapes);

// Depths, dense ranks, median and maximizers for every distinct item of a
// sample, evaluated leave-in against the full sample.
struct DepthReport {
  struct Row {
    double d_ns, d_ms, d_fs;
    std::size_t rank_ns, rank_ms, rank_fs;  // dense ranks, 1 = deepest
  };
  std::vector<Row> rows;                  // one per distinct item, input order
  Trapezoid median;
  std::vector<std::size_t> max_ns, max_ms, max_fs;  // maximizer item indices
};

DepthReport rank_sample(const Sample& sample, PairRule rule = PairRule::strict);

// Like rank_sample, but the depths, ranks and maximizers are those of the
// query items, evaluated against the sample; the median is the sample's.
DepthReport rank_queries(const Sample& sample, const Sample& queries,
                         PairRule rule = PairRule::strict);

// Round to 12 significant decimal digits (round half to even); ranking and
// all printed output use this quantization.
double round_sig12(double x);

}  // namespace fuzzydepth
