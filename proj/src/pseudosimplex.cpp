#include "fuzzydepth/pseudosimplex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fuzzydepth/errors.hpp"

namespace fuzzydepth {

Interval make_interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw NonFinite("interval endpoints must be finite");
  if (lo > hi) throw OrderingViolation("interval needs lo <= hi");
  return Interval{lo, hi};
}

bool sc_contains(std::span<const Interval> generators,
                 const Interval& candidate) {
  if (generators.empty())
    throw DomainError("sc_contains needs at least one generator");
  double lo_min = generators[0].lo, lo_max = generators[0].lo;
  double hi_min = generators[0].hi, hi_max = generators[0].hi;
  for (const Interval& g : generators.subspan(1)) {
    lo_min = std::min(lo_min, g.lo);
    lo_max = std::max(lo_max, g.lo);
    hi_min = std::min(hi_min, g.hi);
    hi_max = std::max(hi_max, g.hi);
  }
  return candidate.lo >= lo_min && candidate.lo <= lo_max &&
         candidate.hi >= hi_min && candidate.hi <= hi_max;
}

bool sf_contains(std::span<const FuzzyNumber> generators,
                 const FuzzyNumber& candidate) {
  if (generators.empty())
    throw DomainError("sf_contains needs at least one generator");
  for (Direction u : {Direction::plus, Direction::minus}) {
    std::vector<PLFunction> profiles;
    profiles.reserve(generators.size());
    for (const FuzzyNumber& g : generators) profiles.push_back(g.profile(u));
    PLFunction lo = min_envelope(profiles);
    PLFunction hi = max_envelope(profiles);
    if (!contained_everywhere(candidate.profile(u), lo, hi)) return false;
  }
  return true;
}

FuzzyNumber convex_hull_member(std::span<const FuzzyNumber> generators,
                               std::span<const double> weights) {
  if (generators.empty() || generators.size() != weights.size())
    throw WeightError("need one weight per generator");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw WeightError("weights must be nonnegative");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-12) throw WeightError("weights must sum to 1");

  PLFunction upper = affine_combine(weights[0], generators[0].upper(), 0.0,
                                    generators[0].upper());
  PLFunction lower = affine_combine(weights[0], generators[0].lower_neg(), 0.0,
                                    generators[0].lower_neg());
  for (std::size_t i = 1; i < generators.size(); ++i) {
    upper = affine_combine(1.0, upper, weights[i], generators[i].upper());
    lower = affine_combine(1.0, lower, weights[i], generators[i].lower_neg());
  }
  return FuzzyNumber(std::move(upper), std::move(lower));
}

bool between(const FuzzyNumber& a1, const FuzzyNumber& a,
             const FuzzyNumber& a2) {
  if (!rr_leq(a1, a2))
    throw NotOrdered("between needs rr_leq(a1, a2) to hold");
  return rr_leq(a1, a) && rr_leq(a, a2);
}

}  // namespace fuzzydepth
