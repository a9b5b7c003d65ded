#include "pwbplan/bezier/bezier.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pwbplan/errors.hpp"

namespace pwbplan::bezier {

namespace {
constexpr double kCuspSpeedTol = 1e-12;
}

double bernstein(int n, int i, double t) {
  if (n < 0 || i < 0 || i > n) {
    throw Error(ErrorCode::InvalidArgument, "bernstein index out of range");
  }
  if (t < 0.0 || t > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "bernstein parameter outside [0,1]");
  }
  double binom = 1.0;
  for (int k = 1; k <= i; ++k) {
    binom *= static_cast<double>(n - i + k) / static_cast<double>(k);
  }
  return binom * std::pow(1.0 - t, n - i) * std::pow(t, i);
}

Point2 eval(const BezierSegment& s, double t) {
  if (t < 0.0 || t > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "curve parameter outside [0,1]");
  }
  const double u = 1.0 - t;
  return s.p0 * (u * u) + s.p1 * (2.0 * u * t) + s.p2 * (t * t);
}

Vec2 derivative(const BezierSegment& s, double t) {
  if (t < 0.0 || t > 1.0) {
    throw Error(ErrorCode::InvalidArgument, "curve parameter outside [0,1]");
  }
  return (s.p1 - s.p0) * (2.0 * (1.0 - t)) + (s.p2 - s.p1) * (2.0 * t);
}

Vec2 second_derivative(const BezierSegment& s) { return (s.p2 - s.p1 * 2.0 + s.p0) * 2.0; }

double curvature(const BezierSegment& s, double t) {
  const Vec2 d = derivative(s, t);
  const double speed = d.norm();
  if (speed <= kCuspSpeedTol) {
    throw Error(ErrorCode::Cusp, "curvature undefined at vanishing speed");
  }
  const Vec2 dd = second_derivative(s);
  return std::abs(d.cross(dd)) / (speed * speed * speed);
}

double min_speed_param(const BezierSegment& s) {
  const Vec2 u = s.p1 - s.p0;
  const Vec2 w = s.p2 - s.p1;
  const Vec2 g = w - u;
  const double denom = g.squared_norm();
  if (denom <= kCuspSpeedTol * kCuspSpeedTol) {
    return 0.0;  // constant speed
  }
  return std::clamp(-u.dot(g) / denom, 0.0, 1.0);
}

std::pair<double, double> max_curvature(const BezierSegment& s) {
  const bool cusp_start = (s.p1 - s.p0).norm() <= kCuspSpeedTol;
  const bool cusp_end = (s.p2 - s.p1).norm() <= kCuspSpeedTol;
  if (cusp_start || cusp_end) {
    throw Error(ErrorCode::Cusp, "curvature maximum undefined on a segment with a cusp");
  }
  const double numerator = 4.0 * std::abs((s.p1 - s.p0).cross(s.p2 - s.p1));
  if (numerator == 0.0) {
    return {min_speed_param(s), 0.0};
  }
  constexpr int kGrid = 1001;
  double best_t = 0.0;
  double best_k = -1.0;
  for (int i = 0; i < kGrid; ++i) {
    const double t = static_cast<double>(i) / (kGrid - 1);
    const double k = curvature(s, t);
    if (k > best_k) {
      best_k = k;
      best_t = t;
    }
  }
  // Golden-section refinement around the best grid cell; curvature of a
  // quadratic is unimodal because |B'|^2 is a convex quadratic in t.
  const double h = 1.0 / (kGrid - 1);
  double a = std::max(0.0, best_t - h);
  double b = std::min(1.0, best_t + h);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = curvature(s, c);
  double fd = curvature(s, d);
  while (b - a > 1e-9) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = curvature(s, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = curvature(s, d);
    }
  }
  const double t_star = 0.5 * (a + b);
  return {t_star, curvature(s, t_star)};
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the rule
// is symmetric).
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double speed(const BezierSegment& s, double t) {
  return ((s.p1 - s.p0) * (2.0 * (1.0 - t)) + (s.p2 - s.p1) * (2.0 * t)).norm();
}

double gl16(const BezierSegment& s, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
    acc += kGlWeights[i] * (speed(s, mid - half * kGlNodes[i]) + speed(s, mid + half * kGlNodes[i]));
  }
  return acc * half;
}

double adaptive_length(const BezierSegment& s, double a, double b, double whole, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gl16(s, a, mid);
  const double right = gl16(s, mid, b);
  const double refined = left + right;
  if (std::abs(refined - whole) <= 1e-9 || depth >= 24) {
    return refined;
  }
  return adaptive_length(s, a, mid, left, depth + 1) +
         adaptive_length(s, mid, b, right, depth + 1);
}

}  // namespace

double arc_length(const BezierSegment& s) {
  return adaptive_length(s, 0.0, 1.0, gl16(s, 0.0, 1.0), 0);
}

PwbPath::PwbPath(std::vector<BezierSegment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "path needs at least one segment");
  }
  for (const BezierSegment& s : segments_) {
    if (!s.p0.is_finite() || !s.p1.is_finite() || !s.p2.is_finite()) {
      throw Error(ErrorCode::InvalidGeometry, "control point is not finite");
    }
  }
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    const BezierSegment& a = segments_[i];
    const BezierSegment& b = segments_[i + 1];
    if (geom::distance(a.p2, b.p0) > kC0Tol) {
      throw Error(ErrorCode::InvalidGeometry, "path breaks positional continuity");
    }
    if (((a.p2 - a.p1) - (b.p1 - b.p0)).norm() > kC1Tol) {
      throw Error(ErrorCode::InvalidGeometry, "path breaks derivative continuity");
    }
  }
}

PathMetrics path_metrics(const PwbPath& path) {
  PathMetrics metrics;
  for (const BezierSegment& s : path.segments()) {
    metrics.length += arc_length(s);
    metrics.max_curvature = std::max(metrics.max_curvature, max_curvature(s).second);
  }
  return metrics;
}

}  // namespace pwbplan::bezier
