#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuzzydepth/pl_function.hpp"

namespace fuzzydepth {

// Directions of the 0-sphere.  For p = 1 the support function of a fuzzy
// number only needs u in {-1, +1}.
enum class Direction : int { minus = -1, plus = +1 };

inline Direction opposite(Direction u) {
  return u == Direction::plus ? Direction::minus : Direction::plus;
}

// Tra(a,b,c,d): membership rising on [a,b], 1 on [b,c], falling on [c,d].
struct Trapezoid {
  double a, b, c, d;
};

// Validating factory; throws OrderingViolation / NonFinite.
Trapezoid make_trapezoid(double a, double b, double c, double d);

inline Trapezoid crisp_interval(double lo, double hi) {
  return make_trapezoid(lo, lo, hi, hi);
}

inline Trapezoid crisp_point(double x) { return make_trapezoid(x, x, x, x); }

// A fuzzy number stored through its two support-function profiles:
//
//   upper(alpha)     = s_A(+1, alpha) = sup A_alpha
//   lower_neg(alpha) = s_A(-1, alpha) = -inf A_alpha
//
// Both profiles are piecewise linear, which carries trapezoids losslessly
// and is closed under every operation used here.  Construction validates
// that alpha-levels are nonempty and nested.
class FuzzyNumber {
 public:
  FuzzyNumber(PLFunction upper, PLFunction lower_neg);

  static FuzzyNumber from_trapezoid(const Trapezoid& t);
  static FuzzyNumber crisp(double lo, double hi);
  static FuzzyNumber singleton(double x);

  const PLFunction& upper() const { return upper_; }
  const PLFunction& lower_neg() const { return lower_neg_; }

  // s_A(u, alpha); throws DomainError if alpha is outside [0,1].
  double support(Direction u, double alpha) const;

  // The profile carrying s_A(u, .).
  const PLFunction& profile(Direction u) const {
    return u == Direction::plus ? upper_ : lower_neg_;
  }

  // inf / sup of the alpha-level.
  double level_inf(double alpha) const { return -lower_neg_(alpha); }
  double level_sup(double alpha) const { return upper_(alpha); }

  bool operator==(const FuzzyNumber&) const = default;

 private:
  PLFunction upper_;
  PLFunction lower_neg_;
};

// Zadeh arithmetic through support functions: s_{A+B} = s_A + s_B.
FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b);

// s_{gamma A}(u, alpha) = |gamma| s_A(sign(gamma) u, alpha); gamma = 0 yields
// the singleton at 0.
FuzzyNumber scale(double gamma, const FuzzyNumber& a);

// (1-lambda) A + lambda B for lambda in [0,1].
FuzzyNumber convex_combination(double lambda, const FuzzyNumber& a,
                               const FuzzyNumber& b);

// Ramik-Rimanek partial order: inf A_alpha <= inf B_alpha and
// sup A_alpha <= sup B_alpha for every alpha.
bool rr_leq(const FuzzyNumber& a, const FuzzyNumber& b);

// One observed fuzzy value, with multiplicity.  shape is present when the
// item entered the sample as a trapezoid (datasets, simulation), which the
// median and the plots need.
struct SampleItem {
  FuzzyNumber value;
  std::optional<Trapezoid> shape;
  std::uint32_t count = 1;
  std::string label;
};

// An ordered multiset of fuzzy numbers: the empirical distribution.
class Sample {
 public:
  Sample() = default;
  explicit Sample(std::vector<SampleItem> items);

  static Sample from_trapezoids(const std::vector<Trapezoid>& shapes);

  const std::vector<SampleItem>& items() const { return items_; }
  std::size_t distinct_size() const { return items_.size(); }

  // Total size counting multiplicities.
  std::uint64_t expanded_size() const;

  bool all_trapezoidal() const;

 private:
  std::vector<SampleItem> items_;
};

}  // namespace fuzzydepth
