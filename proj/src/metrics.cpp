#include "fuzzydepth/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzydepth/errors.hpp"

namespace fuzzydepth {

namespace {

PLFunction hausdorff_profile(const FuzzyNumber& a, const FuzzyNumber& b) {
  PLFunction du = pl_abs(affine_combine(1.0, a.upper(), -1.0, b.upper()));
  PLFunction dl =
      pl_abs(affine_combine(1.0, a.lower_neg(), -1.0, b.lower_neg()));
  return max_envelope(du, dl);
}

}  // namespace

double distance(const FuzzyNumber& a, const FuzzyNumber& b, Metric metric,
                double r) {
  if (metric != Metric::d_inf && !(r >= 1.0))
    throw DomainError("metric order r must be >= 1");
  switch (metric) {
    case Metric::d_inf:
      return hausdorff_profile(a, b).max_value();
    case Metric::d_r: {
      double integral = integrate_power(hausdorff_profile(a, b), r);
      return r == 1.0 ? integral : std::pow(integral, 1.0 / r);
    }
    case Metric::rho_r: {
      double iu = integrate_power(
          pl_abs(affine_combine(1.0, a.upper(), -1.0, b.upper())), r);
      double il = integrate_power(
          pl_abs(affine_combine(1.0, a.lower_neg(), -1.0, b.lower_neg())), r);
      double mean = 0.5 * (iu + il);
      return r == 1.0 ? mean : std::pow(mean, 1.0 / r);
    }
  }
  throw DomainError("unknown metric");
}

}  // namespace fuzzydepth
