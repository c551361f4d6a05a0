#include "fuzzydepth/pl_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "fuzzydepth/errors.hpp"

namespace fuzzydepth {

namespace {

constexpr double kEnvelopeTol = 1e-12;

bool all_finite(const std::vector<double>& xs) {
  return std::all_of(xs.begin(), xs.end(),
                     [](double x) { return std::isfinite(x); });
}

// Exact collinearity of three points, via cross multiplication.
bool collinear(double x0, double v0, double x1, double v1, double x2,
               double v2) {
  return (v1 - v0) * (x2 - x1) == (v2 - v1) * (x1 - x0);
}

double interpolate(double x0, double v0, double x1, double v1, double x) {
  if (x == x0) return v0;
  if (x == x1) return v1;
  return v0 + (x - x0) * (v1 - v0) / (x1 - x0);
}

// Roundoff slack for sign decisions that must tolerate values assembled by
// different but mathematically equal arithmetic.
double sign_slack(double a, double b, double c) {
  double m = std::max({1.0, std::fabs(a), std::fabs(b), std::fabs(c)});
  return 1e-12 * m;
}

}  // namespace

PLFunction::PLFunction() : knots_{0.0, 1.0}, values_{0.0, 0.0} {}

PLFunction::PLFunction(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.size() < 2 || knots_.size() != values_.size())
    throw DomainError("PLFunction needs matching knot/value lists of size >= 2");
  if (!all_finite(knots_) || !all_finite(values_))
    throw NonFinite("PLFunction knots and values must be finite");
  if (knots_.front() != 0.0 || knots_.back() != 1.0)
    throw DomainError("PLFunction knots must start at 0 and end at 1");
  for (std::size_t i = 1; i < knots_.size(); ++i)
    if (!(knots_[i - 1] < knots_[i]))
      throw DomainError("PLFunction knots must be strictly increasing");

  // Canonicalize: drop interior knots that sit exactly on the segment
  // through their neighbours.
  std::vector<double> k{knots_.front()};
  std::vector<double> v{values_.front()};
  for (std::size_t i = 1; i + 1 < knots_.size(); ++i) {
    if (collinear(k.back(), v.back(), knots_[i], values_[i], knots_[i + 1],
                  values_[i + 1]))
      continue;
    k.push_back(knots_[i]);
    v.push_back(values_[i]);
  }
  k.push_back(knots_.back());
  v.push_back(values_.back());
  knots_ = std::move(k);
  values_ = std::move(v);
}

PLFunction PLFunction::constant(double value) {
  return PLFunction({0.0, 1.0}, {value, value});
}

PLFunction PLFunction::line(double at_zero, double at_one) {
  return PLFunction({0.0, 1.0}, {at_zero, at_one});
}

double PLFunction::operator()(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainError("PLFunction evaluated outside [0,1]");
  auto it = std::lower_bound(knots_.begin(), knots_.end(), alpha);
  std::size_t i = static_cast<std::size_t>(it - knots_.begin());
  if (i < knots_.size() && knots_[i] == alpha) return values_[i];
  return interpolate(knots_[i - 1], values_[i - 1], knots_[i], values_[i],
                     alpha);
}

double PLFunction::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double PLFunction::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

std::vector<double> merged_knots(std::span<const PLFunction* const> fs) {
  std::vector<double> out;
  for (const PLFunction* f : fs)
    out.insert(out.end(), f->knots().begin(), f->knots().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PLFunction affine_combine(double ca, const PLFunction& a, double cb,
                          const PLFunction& b) {
  if (!std::isfinite(ca) || !std::isfinite(cb))
    throw NonFinite("affine_combine coefficients must be finite");
  const PLFunction* fs[] = {&a, &b};
  std::vector<double> grid = merged_knots(fs);
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    vals[i] = ca * a(grid[i]) + cb * b(grid[i]);
  return PLFunction(std::move(grid), std::move(vals));
}

namespace {

PLFunction envelope2(const PLFunction& f, const PLFunction& g, bool take_min) {
  const PLFunction* fs[] = {&f, &g};
  std::vector<double> grid = merged_knots(fs);
  std::vector<double> k, v;
  k.reserve(grid.size() + 4);
  v.reserve(grid.size() + 4);

  auto push = [&](double x, double fv, double gv) {
    k.push_back(x);
    v.push_back(take_min ? std::min(fv, gv) : std::max(fv, gv));
  };

  double f0 = f(grid[0]), g0 = g(grid[0]);
  push(grid[0], f0, g0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double x0 = grid[i - 1], x1 = grid[i];
    double f1 = f(x1), g1 = g(x1);
    double d0 = f0 - g0, d1 = f1 - g1;
    if ((d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0)) {
      // Strict sign change: the two lines cross inside the cell.
      double t = x0 + (x1 - x0) * (d0 / (d0 - d1));
      if (t > x0 && t < x1) {
        double fv = interpolate(x0, f0, x1, f1, t);
        double gv = interpolate(x0, g0, x1, g1, t);
        push(t, fv, gv);
      }
    }
    push(x1, f1, g1);
    f0 = f1;
    g0 = g1;
  }
  return PLFunction(std::move(k), std::move(v));
}

}  // namespace

PLFunction min_envelope(const PLFunction& f, const PLFunction& g) {
  return envelope2(f, g, true);
}

PLFunction max_envelope(const PLFunction& f, const PLFunction& g) {
  return envelope2(f, g, false);
}

PLFunction min_envelope(std::span<const PLFunction> fs) {
  if (fs.empty()) throw DomainError("min_envelope of an empty list");
  PLFunction acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = min_envelope(acc, fs[i]);
  return acc;
}

PLFunction max_envelope(std::span<const PLFunction> fs) {
  if (fs.empty()) throw DomainError("max_envelope of an empty list");
  PLFunction acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = max_envelope(acc, fs[i]);
  return acc;
}

namespace {

struct CellInterval {
  double lo, hi;  // possibly empty (lo > hi)
};

// Solution of d(x) >= 0 on [x0,x1] for the linear d with endpoint values
// d0, d1.  The result is a closed subinterval (or empty).
CellInterval solve_nonnegative(double x0, double x1, double d0, double d1) {
  if (d0 >= 0.0 && d1 >= 0.0) return {x0, x1};
  if (d0 < 0.0 && d1 < 0.0) return {x1, x0};  // empty
  double t = x0 + (x1 - x0) * (d0 / (d0 - d1));
  t = std::clamp(t, x0, x1);
  if (d0 >= 0.0) return {x0, t};
  return {t, x1};
}

void check_envelope(const std::vector<double>& grid, const PLFunction& lo,
                    const PLFunction& hi) {
  for (double x : grid)
    if (lo(x) > hi(x) + kEnvelopeTol)
      throw EnvelopeInverted("lower envelope exceeds upper envelope");
}

}  // namespace

double measure_between(const PLFunction& g, const PLFunction& lo,
                       const PLFunction& hi) {
  const PLFunction* fs[] = {&g, &lo, &hi};
  std::vector<double> grid = merged_knots(fs);
  check_envelope(grid, lo, hi);

  double total = 0.0;
  double g0 = g(grid[0]), l0 = lo(grid[0]), h0 = hi(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double x0 = grid[i - 1], x1 = grid[i];
    double g1 = g(x1), l1 = lo(x1), h1 = hi(x1);
    CellInterval above = solve_nonnegative(x0, x1, g0 - l0, g1 - l1);
    CellInterval below = solve_nonnegative(x0, x1, h0 - g0, h1 - g1);
    double a = std::max(above.lo, below.lo);
    double b = std::min(above.hi, below.hi);
    if (b > a) total += b - a;
    g0 = g1;
    l0 = l1;
    h0 = h1;
  }
  return std::clamp(total, 0.0, 1.0);
}

bool contained_everywhere(const PLFunction& g, const PLFunction& lo,
                          const PLFunction& hi) {
  const PLFunction* fs[] = {&g, &lo, &hi};
  std::vector<double> grid = merged_knots(fs);
  check_envelope(grid, lo, hi);
  for (double x : grid) {
    double gv = g(x), lv = lo(x), hv = hi(x);
    double slack = sign_slack(gv, lv, hv);
    if (gv < lv - slack || gv > hv + slack) return false;
  }
  return true;
}

bool pl_leq(const PLFunction& f, const PLFunction& g) {
  const PLFunction* fs[] = {&f, &g};
  for (double x : merged_knots(fs))
    if (f(x) > g(x)) return false;
  return true;
}

PLFunction pl_abs(const PLFunction& f) {
  const std::vector<double>& ks = f.knots();
  const std::vector<double>& vs = f.values();
  std::vector<double> k{ks[0]};
  std::vector<double> v{std::fabs(vs[0])};
  for (std::size_t i = 1; i < ks.size(); ++i) {
    double d0 = vs[i - 1], d1 = vs[i];
    if ((d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0)) {
      double t = ks[i - 1] + (ks[i] - ks[i - 1]) * (d0 / (d0 - d1));
      if (t > k.back() && t < ks[i]) {
        k.push_back(t);
        v.push_back(0.0);
      }
    }
    k.push_back(ks[i]);
    v.push_back(std::fabs(d1));
  }
  return PLFunction(std::move(k), std::move(v));
}

double integrate_power(const PLFunction& f, double r) {
  if (!(r >= 1.0)) throw DomainError("integrate_power needs r >= 1");
  const std::vector<double>& ks = f.knots();
  const std::vector<double>& vs = f.values();
  double total = 0.0;
  for (std::size_t i = 1; i < ks.size(); ++i) {
    double len = ks[i] - ks[i - 1];
    double v0 = vs[i - 1], v1 = vs[i];
    if (v0 < 0.0 || v1 < 0.0)
      throw DomainError("integrate_power needs a nonnegative integrand");
    if (r == 1.0) {
      total += len * 0.5 * (v0 + v1);
    } else if (v0 == v1) {
      total += len * std::pow(v0, r);
    } else {
      double slope = (v1 - v0) / len;
      total +=
          (std::pow(v1, r + 1.0) - std::pow(v0, r + 1.0)) / (slope * (r + 1.0));
    }
  }
  return total;
}

}  // namespace fuzzydepth
