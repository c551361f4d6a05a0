#pragma once

#include <span>

#include "fuzzydepth/fuzzy_number.hpp"

namespace fuzzydepth {

// Element of K_c(R): a nonempty compact interval, possibly degenerate.
struct Interval {
  double lo, hi;
};

// Throws OrderingViolation / NonFinite.
Interval make_interval(double lo, double hi);

// Membership in the pseudosimplex S_c spanned by compact intervals: the
// candidate's support values must lie between the generators' pointwise
// minimum and maximum in both directions.
bool sc_contains(std::span<const Interval> generators, const Interval& candidate);

// Membership in S_F: the levelwise pseudosimplex condition, decided exactly
// on the piecewise-linear profiles for every alpha at once.
bool sf_contains(std::span<const FuzzyNumber> generators,
                 const FuzzyNumber& candidate);

// sum_i weights[i] * generators[i] with nonnegative weights summing to 1
// (tolerance 1e-12).  Throws WeightError.
FuzzyNumber convex_hull_member(std::span<const FuzzyNumber> generators,
                               std::span<const double> weights);

// Betweenness in the Ramik-Rimanek order.  Requires a1 rr<= a2 (throws
// NotOrdered otherwise); equals sf_contains({a1,a2}, a) under that premise.
bool between(const FuzzyNumber& a1, const FuzzyNumber& a,
             const FuzzyNumber& a2);

}  // namespace fuzzydepth
