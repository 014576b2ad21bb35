#pragma once

// Regions of the open unit disk attached to a boundary point b and a
// height h in (0,1):
//
//   set(b,h):    points z of the disk with |z - b| < h            (open)
//   window(b,h): points z with 1-h < |z| < 1 whose radial
//                projection z/|z| satisfies |z/|z| - b| <= h      (arc closed)
//
// plus the named boundary landmarks of the window and an explicit witness
// showing set(b,h) never fits inside window(b,h).

#include <cmath>
#include <stdexcept>

namespace carleson {

inline constexpr double kUnitCircleTol = 1e-12;

// Cartesian point of the plane. Constructors reject NaN and infinity.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  PlanePoint() = default;
  PlanePoint(double px, double py) : x(px), y(py) {
    if (!std::isfinite(px) || !std::isfinite(py))
      throw std::invalid_argument("PlanePoint: coordinates must be finite");
  }

  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }
};

inline double distance(const PlanePoint& a, const PlanePoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline PlanePoint rotated(const PlanePoint& p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Point on the unit circle. Construction checks |p| = 1 within 1e-12 and
// renormalizes, so stored coordinates have unit modulus up to rounding.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(const PlanePoint& p) {
    const double n = p.norm();
    if (std::abs(n - 1.0) > kUnitCircleTol)
      throw std::invalid_argument("BoundaryPoint: |p| must equal 1 within 1e-12");
    point_ = PlanePoint{p.x / n, p.y / n};
  }

  static BoundaryPoint from_angle(double angle) {
    return BoundaryPoint{PlanePoint{std::cos(angle), std::sin(angle)}};
  }

  const PlanePoint& point() const { return point_; }
  double angle() const { return std::atan2(point_.y, point_.x); }

 private:
  PlanePoint point_;
};

// Height parameter, restricted to the open interval (0,1). Values outside
// are construction errors, never clamped.
class Height {
 public:
  explicit Height(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0))
      throw std::invalid_argument("Height: value must lie in (0,1)");
  }

  double value() const { return value_; }

 private:
  double value_;
};

struct CarlesonSet {
  BoundaryPoint base;
  Height height;
};

struct CarlesonWindow {
  BoundaryPoint base;
  Height height;
};

// Named boundary points of window(b,h), in absolute coordinates:
//   M, N    endpoints of the boundary arc, on the unit circle
//   P, Q    corners on the inner circle of radius 1-h
//   Mprime  second intersection of the ray O->M with the circle of
//           radius h about b, at distance 1-h^2 from the origin
struct WindowLandmarks {
  double theta = 0.0;  // chord half-angle
  PlanePoint M, N, P, Q, Mprime;
};

// Half-angle of the window's boundary arc: theta = 2 asin(h/2), the unique
// solution of 2 - 2 cos(theta) = h^2 in (0, pi/3).
inline double chord_half_angle(const Height& h) {
  return 2.0 * std::asin(0.5 * h.value());
}

inline WindowLandmarks landmarks(const BoundaryPoint& b, const Height& h) {
  const double theta = chord_half_angle(h);
  const double a = b.angle();
  const double hv = h.value();
  const auto polar = [a](double r, double phi) {
    return PlanePoint{r * std::cos(a + phi), r * std::sin(a + phi)};
  };
  WindowLandmarks lm;
  lm.theta = theta;
  lm.M = polar(1.0, theta);
  lm.N = polar(1.0, -theta);
  lm.P = polar(1.0 - hv, theta);
  lm.Q = polar(1.0 - hv, -theta);
  lm.Mprime = polar(1.0 - hv * hv, theta);
  return lm;
}

// Membership in set(b,h). Both inequalities strict, no tolerance slack.
inline bool in_set(const CarlesonSet& s, const PlanePoint& z) {
  return z.norm() < 1.0 && distance(z, s.base.point()) < s.height.value();
}

// Membership in window(b,h). Radial bounds strict, the arc constraint on
// the projection closed. The origin fails the radial test for every h < 1,
// so the projection is never formed for it.
inline bool in_window(const CarlesonWindow& w, const PlanePoint& z) {
  const double r = z.norm();
  const double h = w.height.value();
  if (!(r > 1.0 - h && r < 1.0)) return false;
  const PlanePoint proj{z.x / r, z.y / r};
  return distance(proj, w.base.point()) <= h;
}

// Squared distance from b to the corner P of window(b,r): 2 r^2 - r^3.
inline double corner_distance_sq(double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("corner_distance_sq: r must lie in (0,1)");
  return 2.0 * r * r - r * r * r;
}

// Squared distance from b to the line carrying the straight edge of
// window(b,s): s^2 - s^4/4, which equals sin^2(chord_half_angle(s)).
inline double wedge_distance_sq(double s) {
  if (!(s > 0.0 && s < 1.0))
    throw std::domain_error("wedge_distance_sq: s must lie in (0,1)");
  return s * s - 0.25 * s * s * s * s;
}

// Explicit point of set(b,h) that is not in window(b,h). With theta the
// arc half-angle and phi = (theta + asin h)/2, the point cos(phi) e^{i phi}
// (taken in the frame where b = (1,0)) satisfies |z - b| = sin(phi) < h,
// while its projection e^{i phi} sits off the closed arc since phi > theta.
// Both margins stay bounded away from zero across (0,1).
inline PlanePoint set_minus_window_witness(const BoundaryPoint& b, const Height& h) {
  const double theta = chord_half_angle(h);
  const double phi = 0.5 * (theta + std::asin(h.value()));
  const double a = b.angle();
  const double r = std::cos(phi);
  return PlanePoint{r * std::cos(a + phi), r * std::sin(a + phi)};
}

}  // namespace carleson
