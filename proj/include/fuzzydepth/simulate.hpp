#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "fuzzydepth/depth.hpp"
#include "fuzzydepth/fuzzy_number.hpp"

namespace fuzzydepth {

// Configuration of the trapezoid generator
//   X = Tra(X1 - X2 - X3, X1 - X2, X1 + X2, X1 + X2 + X4)
// with X1 ~ Normal(0, sigma^2) and X2, X3, X4 ~ ChiSquared(dof).
struct SimConfig {
  std::uint64_t n = 100;
  std::uint64_t seed = 1;
  double sigma = 10.0;
  unsigned dof = 1;
};

// Deterministic random stream: std::mt19937_64 (a fully specified engine)
// with hand-rolled transforms, so a seed pins the sample bytes on every
// platform.  Normal deviates come from the Marsaglia polar method; a
// chi-squared(k) draw is the sum of k squared standard normals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01();          // in [0,1)
  double normal();             // standard normal
  double chi_squared(unsigned dof);

  // Index k with probability weights[k] (weights sum to 1).
  std::size_t pick(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// n trapezoids drawn from the model above; deterministic given the seed.
// Every draw satisfies a <= b <= c <= d by construction.  Throws ConfigError.
Sample simulate_trapezoids(const SimConfig& cfg);

// F-symmetry check for a finitely supported variable: for each direction and
// each grid alpha, the weighted multiset of s_center - s_X values must equal
// its own negation (tolerance 1e-12).  An empty grid selects the default:
// the merged profile knots of all atoms plus {0, 1/2, 1}.
bool f_symmetric(const DiscreteFuzzyRV& rv, const FuzzyNumber& center,
                 std::span<const double> alpha_grid = {});

// Monte Carlo estimate of the pair-containment probability at one (u, alpha):
// the fraction of iid atom pairs whose support envelope contains the query's
// support value.  Unbiased; deterministic given the seed.
double mc_containment(const DiscreteFuzzyRV& rv, const FuzzyNumber& query,
                      Direction u, double alpha, std::size_t trials,
                      std::uint64_t seed);

}  // namespace fuzzydepth
