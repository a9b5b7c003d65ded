#ifndef PWBPLAN_BEZIER_BEZIER_HPP
#define PWBPLAN_BEZIER_BEZIER_HPP

#include <utility>
#include <vector>

#include "pwbplan/geom/point.hpp"

namespace pwbplan::bezier {

using geom::Point2;
using geom::Vec2;

// Bernstein polynomial b_i^n(t) = C(n,i) (1-t)^(n-i) t^i. The planner only
// uses n = 2; the general form exists so tests can cross-check the quadratic
// evaluation against the generic basis expansion.
double bernstein(int n, int i, double t);

struct BezierSegment {
  Point2 p0;
  Point2 p1;
  Point2 p2;
};

Point2 eval(const BezierSegment& s, double t);
Vec2 derivative(const BezierSegment& s, double t);
Vec2 second_derivative(const BezierSegment& s);

// Unsigned curvature |B' x B''| / |B'|^3. Throws a cusp error where the
// speed vanishes (coincident consecutive control points).
double curvature(const BezierSegment& s, double t);

// Location and value of the curvature maximum: 1001-point grid, then
// golden-section refinement to |dt| <= 1e-9. For a quadratic the numerator
// of kappa is constant, so the maximum sits where the speed is minimal; the
// analytic minimizer is used as a cross-check in tests.
std::pair<double, double> max_curvature(const BezierSegment& s);

// Analytic argmin of |B'(t)|^2 on [0,1].
double min_speed_param(const BezierSegment& s);

// Arc length by adaptive 16-point Gauss-Legendre quadrature, refined by
// interval halving until the panel correction is below 1e-9.
double arc_length(const BezierSegment& s);

struct PathMetrics {
  double length = 0.0;
  double max_curvature = 0.0;
};

// Piece-wise quadratic Bezier path. Construction validates the junction
// continuity residuals: C0 within 1e-9 and C1 within 1e-6.
class PwbPath {
public:
  explicit PwbPath(std::vector<BezierSegment> segments);

  const std::vector<BezierSegment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  const BezierSegment& operator[](std::size_t i) const { return segments_[i]; }

  Point2 start() const { return segments_.front().p0; }
  Point2 end() const { return segments_.back().p2; }

private:
  std::vector<BezierSegment> segments_;
};

inline constexpr double kC0Tol = 1e-9;
inline constexpr double kC1Tol = 1e-6;

PathMetrics path_metrics(const PwbPath& path);

}  // namespace pwbplan::bezier

#endif
