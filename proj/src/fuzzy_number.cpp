#include "fuzzydepth/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzydepth/errors.hpp"

namespace fuzzydepth {

namespace {

void validate_profiles(const PLFunction& upper, const PLFunction& lower_neg) {
  const PLFunction* fs[] = {&upper, &lower_neg};
  for (double x : merged_knots(fs)) {
    double u = upper(x), l = lower_neg(x);
    double slack = 1e-9 * std::max({1.0, std::fabs(u), std::fabs(l)});
    if (-l > u + slack)
      throw OrderingViolation("fuzzy number has an empty alpha-level");
  }
  // Nested levels: both profiles non-increasing in alpha.
  for (const PLFunction* f : fs) {
    const auto& ks = f->knots();
    const auto& vs = f->values();
    for (std::size_t i = 1; i < ks.size(); ++i) {
      double slack = 1e-9 * std::max({1.0, std::fabs(vs[i - 1]), std::fabs(vs[i])});
      if (vs[i] > vs[i - 1] + slack)
        throw OrderingViolation("fuzzy number alpha-levels are not nested");
    }
  }
}

}  // namespace

Trapezoid make_trapezoid(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d))
    throw NonFinite("trapezoid coordinates must be finite");
  if (!(a <= b && b <= c && c <= d))
    throw OrderingViolation("trapezoid needs a <= b <= c <= d");
  return Trapezoid{a, b, c, d};
}

FuzzyNumber::FuzzyNumber(PLFunction upper, PLFunction lower_neg)
    : upper_(std::move(upper)), lower_neg_(std::move(lower_neg)) {
  validate_profiles(upper_, lower_neg_);
}

FuzzyNumber FuzzyNumber::from_trapezoid(const Trapezoid& t) {
  return FuzzyNumber(PLFunction::line(t.d, t.c), PLFunction::line(-t.a, -t.b));
}

FuzzyNumber FuzzyNumber::crisp(double lo, double hi) {
  return from_trapezoid(crisp_interval(lo, hi));
}

FuzzyNumber FuzzyNumber::singleton(double x) {
  return from_trapezoid(crisp_point(x));
}

double FuzzyNumber::support(Direction u, double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainError("support needs alpha in [0,1]");
  return profile(u)(alpha);
}

FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b) {
  return FuzzyNumber(affine_combine(1.0, a.upper(), 1.0, b.upper()),
                     affine_combine(1.0, a.lower_neg(), 1.0, b.lower_neg()));
}

FuzzyNumber scale(double gamma, const FuzzyNumber& a) {
  if (!std::isfinite(gamma)) throw NonFinite("scale factor must be finite");
  if (gamma == 0.0) return FuzzyNumber::singleton(0.0);
  if (gamma > 0.0)
    return FuzzyNumber(affine_combine(gamma, a.upper(), 0.0, a.upper()),
                       affine_combine(gamma, a.lower_neg(), 0.0, a.lower_neg()));
  // Negative factors flip the level interval, so the profiles swap roles.
  double m = -gamma;
  return FuzzyNumber(affine_combine(m, a.lower_neg(), 0.0, a.lower_neg()),
                     affine_combine(m, a.upper(), 0.0, a.upper()));
}

FuzzyNumber convex_combination(double lambda, const FuzzyNumber& a,
                               const FuzzyNumber& b) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw DomainError("convex_combination needs lambda in [0,1]");
  if (lambda == 0.0) return a;
  if (lambda == 1.0) return b;
  return FuzzyNumber(
      affine_combine(1.0 - lambda, a.upper(), lambda, b.upper()),
      affine_combine(1.0 - lambda, a.lower_neg(), lambda, b.lower_neg()));
}

bool rr_leq(const FuzzyNumber& a, const FuzzyNumber& b) {
  // inf_A <= inf_B is lower_neg_A >= lower_neg_B.
  return pl_leq(a.upper(), b.upper()) && pl_leq(b.lower_neg(), a.lower_neg());
}

Sample::Sample(std::vector<SampleItem> items) : items_(std::move(items)) {
  for (const SampleItem& it : items_)
    if (it.count == 0) throw DomainError("sample multiplicities must be >= 1");
}

Sample Sample::from_trapezoids(const std::vector<Trapezoid>& shapes) {
  std::vector<SampleItem> items;
  items.reserve(shapes.size());
  for (const Trapezoid& t : shapes)
    items.push_back({FuzzyNumber::from_trapezoid(t), t, 1, ""});
  return Sample(std::move(items));
}

std::uint64_t Sample::expanded_size() const {
  std::uint64_t n = 0;
  for (const SampleItem& it : items_) n += it.count;
  return n;
}

bool Sample::all_trapezoidal() const {
  return std::all_of(items_.begin(), items_.end(),
                     [](const SampleItem& it) { return it.shape.has_value(); });
}

}  // namespace fuzzydepth
