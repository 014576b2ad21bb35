#pragma once

// Admissible scaling constants c > 1 for the three inclusions between a
// set of height h and windows of heights h/c and ch:
//
//   part i    window(b,h/c) inside set(b,h)    iff  2c - c^3 <= h
//   part ii   set(b,h) inside window(b,ch)     iff  h^2 c^4 - 4 c^2 + 4 <= 0
//                                                   and ch < 1
//   part iii  both at once
//
// Part i admits a ray [root of the corner cubic, inf) for every h; parts
// ii and iii admit a bounded interval exactly when h < sqrt(3)/2. The
// lower bound of part iii switches from the corner-cubic root to the
// wedge bound at the crossover height (about 0.82056).

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace carleson {

// Heights below sqrt(3)/2 are the ones admitting set-in-window constants.
inline const double kInclusionThreshold = std::sqrt(3.0) / 2.0;

inline const double kDefaultTol = 1e-12;

// Root solve outcome; |residual| is bounded by the tolerance the caller
// requested, or the solve throws instead of returning a best effort.
struct RootResult {
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

enum class IntervalKind { RayPartI, IntervalPartII, IntervalPartIII, Empty };

// Admissible constants for one inclusion: [lower, upper) with an infinite
// upper end encoding a ray, or Empty.
struct AdmissibleInterval {
  double lower = 0.0;
  double upper = 0.0;
  IntervalKind kind = IntervalKind::Empty;

  bool empty() const { return kind == IntervalKind::Empty; }
  bool contains(double c) const { return !empty() && c >= lower && c < upper; }
};

enum class InclusionPart { PartI, PartII, PartIII };

namespace detail {

inline void require_height(double h, const char* who) {
  if (!(h > 0.0 && h < 1.0))
    throw std::domain_error(std::string(who) + ": h must lie in (0,1)");
}

constexpr int kMaxBisectIterations = 200;

// Bisection on a bracket with fn(lo) > 0 > fn(hi). Stops once
// |fn(mid)| <= tol; when one_sided is set it additionally insists on
// fn(mid) <= 0, so the returned value sits where the inequality
// fn <= 0 already holds. Throws after the iteration cap.
template <class Fn>
RootResult bisect(Fn&& fn, double lo, double hi, double tol, bool one_sided = false) {
  if (!(tol > 0.0)) throw std::domain_error("bisect: tol must be positive");
  for (int it = 1; it <= kMaxBisectIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      // Bracket exhausted at one ulp; hi is the side where fn <= 0.
      const double fh = fn(hi);
      if (std::abs(fh) <= tol) return {hi, fh, it};
      break;
    }
    const double fm = fn(mid);
    if (std::abs(fm) <= tol && (!one_sided || fm <= 0.0)) return {mid, fm, it};
    if (fm > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  throw std::runtime_error("bisect: no convergence within iteration cap");
}

}  // namespace detail

// Corner cubic 2x - x^3, strictly decreasing for x > 1. Window(b,h/c)
// fits inside set(b,h) exactly when the cubic at c is at most h.
inline double corner_cubic(double x) {
  if (!(x > 1.0)) throw std::domain_error("corner_cubic: x must exceed 1");
  return 2.0 * x - x * x * x;
}

// Unique root of corner_cubic(x) = h in (1, sqrt(2)), by bisection on a
// guaranteed bracket (cubic is 1 at x=1 and 0 at x=sqrt(2)). The returned
// value lies on the admissible side: corner_cubic(value) <= h holds.
inline RootResult invert_corner_cubic(double h, double tol = kDefaultTol) {
  detail::require_height(h, "invert_corner_cubic");
  return detail::bisect([h](double x) { return 2.0 * x - x * x * x - h; }, 1.0,
                        std::sqrt(2.0), tol, /*one_sided=*/true);
}

// Lower endpoint of the wedge-condition interval. Algebraically equal to
// (sqrt(2)/h) sqrt(1 - sqrt(1-h^2)); evaluated in the cancellation-free
// form sqrt(2 / (1 + sqrt(1-h^2))). Exceeds 1 throughout (0,1).
inline double wedge_lower_bound(double h) {
  detail::require_height(h, "wedge_lower_bound");
  return std::sqrt(2.0 / (1.0 + std::sqrt(1.0 - h * h)));
}

// Roots in c of the wedge quadratic h^2 y^2 - 4y + 4 = 0, y = c^2, by the
// textbook quadratic formula. The lower root is wedge_lower_bound(h) in a
// second algebraic form; the upper root always exceeds the 1/h cap.
inline std::pair<double, double> wedge_quadratic_roots(double h) {
  detail::require_height(h, "wedge_quadratic_roots");
  const double disc = std::sqrt(1.0 - h * h);
  const double y_lo = (2.0 - 2.0 * disc) / (h * h);
  const double y_hi = (2.0 + 2.0 * disc) / (h * h);
  return {std::sqrt(y_lo), std::sqrt(y_hi)};
}

// Membership of c in the admissible set of the given part, evaluated
// straight from the defining inequalities rather than solved endpoints,
// so endpoints and direct conditions can be cross-validated.
inline bool analytic_verdict(InclusionPart which, double h, double c) {
  detail::require_height(h, "analytic_verdict");
  if (!(c > 1.0)) throw std::domain_error("analytic_verdict: c must exceed 1");
  const bool corner_ok = 2.0 * c - c * c * c <= h;
  const bool wedge_ok = h * h * c * c * c * c - 4.0 * c * c + 4.0 <= 0.0 && c * h < 1.0;
  switch (which) {
    case InclusionPart::PartI:
      return corner_ok;
    case InclusionPart::PartII:
      return wedge_ok;
    case InclusionPart::PartIII:
      return corner_ok && wedge_ok;
  }
  throw std::logic_error("analytic_verdict: unknown part");
}

namespace detail {

inline AdmissibleInterval make_interval(IntervalKind kind, double lower, double upper) {
  if (!(lower > 1.0 && lower < upper))
    throw std::logic_error("AdmissibleInterval: requires 1 < lower < upper");
  return {lower, upper, kind};
}

// Closed left endpoints are rounded onto the admissible side: the stable
// form of the wedge bound can land one ulp short of the true root, which
// would put the endpoint itself outside the set it bounds.
inline double certified_wedge_bound(double h) {
  double c = wedge_lower_bound(h);
  // Below h ~ 3e-8 the stable form rounds to exactly 1; step past it so
  // the verdict's c > 1 precondition holds.
  if (c <= 1.0) c = std::nextafter(1.0, 2.0);
  for (int i = 0; i < 8 && !analytic_verdict(InclusionPart::PartII, h, c); ++i)
    c = std::nextafter(c, std::numeric_limits<double>::infinity());
  return c;
}

}  // namespace detail

// Part i admissible constants: the ray [corner-cubic root, infinity).
inline AdmissibleInterval ray_part_i(double h, double tol = kDefaultTol) {
  return detail::make_interval(IntervalKind::RayPartI,
                               invert_corner_cubic(h, tol).value,
                               std::numeric_limits<double>::infinity());
}

// Part ii admissible constants: [wedge bound, 1/h) below the threshold,
// Empty at and above it.
inline AdmissibleInterval interval_part_ii(double h) {
  detail::require_height(h, "interval_part_ii");
  if (!(h < kInclusionThreshold)) return {};
  return detail::make_interval(IntervalKind::IntervalPartII,
                               detail::certified_wedge_bound(h), 1.0 / h);
}

// Gap between the corner cubic evaluated at the wedge bound and h itself.
// Strictly decreasing on (0, sqrt(3)/2) with a single root, the crossover
// height. The cubic is expanded inline: for very small h the wedge bound
// rounds to exactly 1, which corner_cubic's domain gate would reject.
inline double crossover_gap(double h) {
  if (!(h > 0.0 && h < kInclusionThreshold))
    throw std::domain_error("crossover_gap: h must lie in (0, sqrt(3)/2)");
  const double k = wedge_lower_bound(h);
  return 2.0 * k - k * k * k - h;
}

// Crossover height separating the corner-dominated regime from the
// wedge-dominated one. The gap changes sign between 0.82 and 0.83, which
// brackets the bisection. Value is about 0.82056.
inline RootResult solve_crossover(double tol = kDefaultTol) {
  return detail::bisect([](double h) { return crossover_gap(h); }, 0.82, 0.83, tol);
}

// Lower bound for the two-sided inclusion: max of the corner-cubic root
// and the wedge bound. Equals the former below the crossover height and
// the latter above it.
inline double combined_lower_bound(double h, double tol = kDefaultTol) {
  if (!(h > 0.0 && h < kInclusionThreshold))
    throw std::domain_error("combined_lower_bound: h must lie in (0, sqrt(3)/2)");
  return std::max(invert_corner_cubic(h, tol).value, detail::certified_wedge_bound(h));
}

// Part iii admissible constants: [combined lower bound, 1/h) below the
// threshold, Empty at and above it.
inline AdmissibleInterval interval_part_iii(double h, double tol = kDefaultTol) {
  detail::require_height(h, "interval_part_iii");
  if (!(h < kInclusionThreshold)) return {};
  return detail::make_interval(IntervalKind::IntervalPartIII,
                               combined_lower_bound(h, tol), 1.0 / h);
}

}  // namespace carleson
