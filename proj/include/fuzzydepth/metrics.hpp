#pragma once

#include "fuzzydepth/fuzzy_number.hpp"

namespace fuzzydepth {

enum class Metric {
  d_r,    // L^r average of the levelwise Hausdorff distance
  d_inf,  // sup over alpha of the levelwise Hausdorff distance
  rho_r,  // L^r distance of the support functions over direction and level
};

// For p = 1 the Hausdorff distance of alpha-levels is
//   max(|sup_A - sup_B|, |inf_A - inf_B|)(alpha),
// and all integrals over alpha are evaluated in closed form per segment.
// Throws DomainError if r < 1 (r is ignored for d_inf).
double distance(const FuzzyNumber& a, const FuzzyNumber& b, Metric metric,
                double r = 1.0);

}  // namespace fuzzydepth
