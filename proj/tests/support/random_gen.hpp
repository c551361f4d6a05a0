#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "fuzzydepth/fuzzy_number.hpp"

namespace testgen {

// Deterministic helpers for property tests.  All draws go through one
// mt19937_64 stream so a fixed seed pins every case.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * std::generate_canonical<double, 53>(engine_);
  }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform(0.0, static_cast<double>(n))) %
           n;
  }

  fuzzydepth::Trapezoid trapezoid(double lo = -5.0, double hi = 5.0) {
    double v[4] = {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi),
                   uniform(lo, hi)};
    std::sort(std::begin(v), std::end(v));
    return fuzzydepth::make_trapezoid(v[0], v[1], v[2], v[3]);
  }

  fuzzydepth::FuzzyNumber fuzzy(double lo = -5.0, double hi = 5.0) {
    return fuzzydepth::FuzzyNumber::from_trapezoid(trapezoid(lo, hi));
  }

  // Arbitrary piecewise-linear function with a few interior knots.
  fuzzydepth::PLFunction pl(double lo = -5.0, double hi = 5.0,
                            std::size_t max_interior = 3) {
    std::vector<double> knots{0.0};
    std::size_t interior = index(max_interior + 1);
    for (std::size_t i = 0; i < interior; ++i) knots.push_back(uniform(0.01, 0.99));
    knots.push_back(1.0);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    std::vector<double> values;
    values.reserve(knots.size());
    for (std::size_t i = 0; i < knots.size(); ++i)
      values.push_back(uniform(lo, hi));
    return fuzzydepth::PLFunction(std::move(knots), std::move(values));
  }

  fuzzydepth::Sample sample(std::size_t n, double lo = -5.0, double hi = 5.0) {
    std::vector<fuzzydepth::Trapezoid> shapes;
    shapes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) shapes.push_back(trapezoid(lo, hi));
    return fuzzydepth::Sample::from_trapezoids(shapes);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testgen
