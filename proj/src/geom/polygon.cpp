#include "pwbplan/geom/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pwbplan/errors.hpp"

namespace pwbplan::geom {

namespace {
constexpr double kDupTol = 1e-12;
constexpr double kConvexityTol = 1e-12;
}  // namespace

double polygon_area(const std::vector<Point2>& vertices) {
  double twice = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices[i];
    const Point2& b = vertices[(i + 1) % n];
    twice += a.cross(b);
  }
  return 0.5 * twice;
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw Error(ErrorCode::InvalidGeometry, "polygon needs at least 3 vertices");
  }
  for (const Point2& v : vertices_) {
    if (!v.is_finite()) {
      throw Error(ErrorCode::InvalidGeometry, "polygon vertex is not finite");
    }
  }
  if (polygon_area(vertices_) < 0.0) {
    std::reverse(vertices_.begin(), vertices_.end());
  }
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& prev = vertices_[(i + n - 1) % n];
    const Point2& cur = vertices_[i];
    const Point2& next = vertices_[(i + 1) % n];
    if (distance(cur, next) <= kDupTol) {
      throw Error(ErrorCode::InvalidGeometry, "duplicate consecutive polygon vertices");
    }
    const double turn = (cur - prev).cross(next - cur);
    if (turn <= kConvexityTol) {
      throw Error(ErrorCode::InvalidGeometry, "polygon is not strictly convex");
    }
  }
}

double ConvexPolygon::area() const { return polygon_area(vertices_); }

Point2 ConvexPolygon::centroid() const {
  // Area-weighted centroid of the polygon.
  double twice = 0.0;
  Point2 acc{0.0, 0.0};
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    const double w = a.cross(b);
    twice += w;
    acc += (a + b) * w;
  }
  return acc / (3.0 * twice);
}

double ConvexPolygon::signed_margin(const Point2& p) const {
  double worst = -std::numeric_limits<double>::infinity();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    const Vec2 normal = (b - a).rotated_cw().normalized();
    worst = std::max(worst, normal.dot(p - a));
  }
  return worst;
}

bool ConvexPolygon::contains(const Point2& p, double tol) const { return signed_margin(p) <= tol; }

double convex_intersection_area(const ConvexPolygon& a, const ConvexPolygon& b) {
  std::vector<Point2> poly = a.vertices();
  const std::vector<Point2>& clip = b.vertices();
  const std::size_t m = clip.size();
  for (std::size_t i = 0; i < m && !poly.empty(); ++i) {
    const Point2& ca = clip[i];
    const Point2& cb = clip[(i + 1) % m];
    const Vec2 edge = cb - ca;
    std::vector<Point2> out;
    out.reserve(poly.size() + 1);
    const std::size_t n = poly.size();
    for (std::size_t j = 0; j < n; ++j) {
      const Point2& p = poly[j];
      const Point2& q = poly[(j + 1) % n];
      const double sp = edge.cross(p - ca);  // >= 0 means inside (left of edge)
      const double sq = edge.cross(q - ca);
      if (sp >= 0.0) {
        out.push_back(p);
      }
      if ((sp > 0.0 && sq < 0.0) || (sp < 0.0 && sq > 0.0)) {
        const double t = sp / (sp - sq);
        out.push_back(p + (q - p) * t);
      }
    }
    poly = std::move(out);
  }
  if (poly.size() < 3) {
    return 0.0;
  }
  return std::abs(polygon_area(poly));
}

}  // namespace pwbplan::geom
