#pragma once

#include <span>
#include <vector>

namespace fuzzydepth {

// Continuous piecewise-linear function of alpha on [0,1].
//
// The knot list is strictly increasing and always starts at 0 and ends at 1.
// Instances are kept in canonical form: an interior knot whose two adjacent
// segments have exactly equal slopes is merged away, so functions that are
// equal pointwise and were built from the same arithmetic compare equal
// structurally with operator==.  Immutable after construction.
class PLFunction {
 public:
  // Constant 0.
  PLFunction();

  // Throws DomainError if the knot list does not span [0,1] strictly
  // increasingly, NonFinite on NaN/infinite entries.
  PLFunction(std::vector<double> knots, std::vector<double> values);

  static PLFunction constant(double value);

  // The line through (0, at_zero) and (1, at_one).
  static PLFunction line(double at_zero, double at_one);

  // Evaluation; exact at knots.  Throws DomainError outside [0,1].
  double operator()(double alpha) const;

  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }

  double min_value() const;
  double max_value() const;

  bool operator==(const PLFunction&) const = default;

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
};

// ca*a + cb*b, again piecewise linear on the merged knot set.
PLFunction affine_combine(double ca, const PLFunction& a, double cb,
                          const PLFunction& b);

// Pointwise minimum / maximum.  Crossing points inside a cell become knots,
// so the result is exact, not sampled.
PLFunction min_envelope(const PLFunction& f, const PLFunction& g);
PLFunction max_envelope(const PLFunction& f, const PLFunction& g);
PLFunction min_envelope(std::span<const PLFunction> fs);
PLFunction max_envelope(std::span<const PLFunction> fs);

// Lebesgue measure of {alpha in [0,1] : lo(alpha) <= g(alpha) <= hi(alpha)},
// computed cell by cell from the merged knot grid; each cell contributes the
// exact solution interval of two linear inequalities.  Intervals are closed.
// Throws EnvelopeInverted if lo exceeds hi beyond tolerance 1e-12.
double measure_between(const PLFunction& g, const PLFunction& lo,
                       const PLFunction& hi);

// True iff lo <= g <= hi on all of [0,1].  Piecewise-linear functions attain
// extrema of differences at knots of the merged grid, so the check is exact
// up to a small relative slack that absorbs interpolation roundoff.
bool contained_everywhere(const PLFunction& g, const PLFunction& lo,
                          const PLFunction& hi);

// f(alpha) <= g(alpha) for every alpha, checked exactly at merged knots.
bool pl_leq(const PLFunction& f, const PLFunction& g);

// |f|, with zero crossings inserted as knots.
PLFunction pl_abs(const PLFunction& f);

// Integral of f^r over [0,1] for r >= 1, requiring f >= 0.  Each segment is
// integrated in closed form, so piecewise-polynomial integrands are exact.
double integrate_power(const PLFunction& f, double r);

// Sorted union of the knot sets.
std::vector<double> merged_knots(std::span<const PLFunction* const> fs);

}  // namespace fuzzydepth
