#include "pwbplan/geom/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pwbplan/errors.hpp"

namespace pwbplan::geom {

double Polytope::max_residual(const Point2& x) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < num_facets(); ++k) {
    worst = std::max(worst, residual(k, x));
  }
  return worst;
}

Polytope polygon_to_polytope(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  Polytope p;
  p.H.resize(static_cast<Eigen::Index>(n), 2);
  p.b.resize(static_cast<Eigen::Index>(n));
  p.facet_tags.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    const Vec2 normal = (b - a).rotated_cw().normalized();
    p.H(static_cast<Eigen::Index>(i), 0) = normal.x;
    p.H(static_cast<Eigen::Index>(i), 1) = normal.y;
    p.b(static_cast<Eigen::Index>(i)) = normal.dot(a);
  }
  return p;
}

bool contains(const Polytope& p, const Point2& x, double tol) { return p.max_residual(x) <= tol; }

namespace {

// Angular gap test on the facet normals: a nonempty region is unbounded iff
// the normals leave a half-plane of directions uncovered.
bool normals_admit_recession(const Polytope& p) {
  const int k = p.num_facets();
  if (k < 3) {
    return true;
  }
  std::vector<double> angles(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    angles[static_cast<std::size_t>(i)] = std::atan2(p.H(i, 1), p.H(i, 0));
  }
  std::sort(angles.begin(), angles.end());
  double max_gap = 2.0 * M_PI - (angles.back() - angles.front());
  for (std::size_t i = 1; i < angles.size(); ++i) {
    max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
  }
  return max_gap >= M_PI - 1e-9;
}

}  // namespace

std::vector<Point2> polytope_vertices(const Polytope& p) {
  if (normals_admit_recession(p)) {
    throw Error(ErrorCode::InvalidGeometry, "polytope is unbounded");
  }
  const int k = p.num_facets();
  std::vector<Point2> candidates;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double det = p.H(i, 0) * p.H(j, 1) - p.H(i, 1) * p.H(j, 0);
      if (std::abs(det) < kConstructionTol) {
        continue;
      }
      const Point2 v{(p.b(i) * p.H(j, 1) - p.b(j) * p.H(i, 1)) / det,
                     (p.H(i, 0) * p.b(j) - p.H(j, 0) * p.b(i)) / det};
      if (contains(p, v, kFeasibilityTol)) {
        candidates.push_back(v);
      }
    }
  }
  if (candidates.empty()) {
    return {};
  }
  Point2 center{0.0, 0.0};
  for (const Point2& v : candidates) {
    center += v;
  }
  center = center / static_cast<double>(candidates.size());
  std::sort(candidates.begin(), candidates.end(), [&](const Point2& a, const Point2& b) {
    const double aa = std::atan2(a.y - center.y, a.x - center.x);
    const double ab = std::atan2(b.y - center.y, b.x - center.x);
    if (aa != ab) {
      return aa < ab;
    }
    return (a - center).squared_norm() < (b - center).squared_norm();
  });
  std::vector<Point2> vertices;
  for (const Point2& v : candidates) {
    if (vertices.empty() || distance(vertices.back(), v) > kFeasibilityTol) {
      vertices.push_back(v);
    }
  }
  while (vertices.size() > 1 && distance(vertices.front(), vertices.back()) <= kFeasibilityTol) {
    vertices.pop_back();
  }
  if (vertices.size() < 3 || std::abs(polygon_area(vertices)) < kConstructionTol) {
    return {};
  }
  return vertices;
}

double polytope_area(const Polytope& p) {
  const std::vector<Point2> v = polytope_vertices(p);
  if (v.empty()) {
    return 0.0;
  }
  return polygon_area(v);
}

namespace {

// Endpoints of facet k as the segment of its supporting line cut by the
// other constraints. Nullopt when the facet is not exposed (length <= tol).
std::optional<std::pair<Point2, Point2>> facet_segment(const Polytope& p, int k) {
  const Vec2 normal{p.H(k, 0), p.H(k, 1)};
  const Vec2 dir{-normal.y, normal.x};
  const Point2 origin = normal * p.b(k);
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (int j = 0; j < p.num_facets(); ++j) {
    if (j == k) {
      continue;
    }
    // Constraint along the line: (H_j . dir) t <= b_j - H_j . origin
    const double slope = p.H(j, 0) * dir.x + p.H(j, 1) * dir.y;
    const double offset = p.b(j) - (p.H(j, 0) * origin.x + p.H(j, 1) * origin.y);
    if (std::abs(slope) < kConstructionTol) {
      if (offset < -kFeasibilityTol) {
        return std::nullopt;
      }
      continue;
    }
    if (slope > 0.0) {
      hi = std::min(hi, offset / slope);
    } else {
      lo = std::max(lo, offset / slope);
    }
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi - lo <= kFeasibilityTol) {
    return std::nullopt;
  }
  return std::make_pair(origin + dir * lo, origin + dir * hi);
}

}  // namespace

std::optional<SharedFacet> shared_facet(const Polytope& a, const Polytope& b) {
  for (int i = 0; i < a.num_facets(); ++i) {
    const Vec2 na{a.H(i, 0), a.H(i, 1)};
    for (int j = 0; j < b.num_facets(); ++j) {
      const Vec2 nb{b.H(j, 0), b.H(j, 1)};
      if (na.dot(nb) > -1.0 + kFeasibilityTol) {
        continue;  // not antiparallel
      }
      if (std::abs(a.b(i) + b.b(j)) > kFeasibilityTol) {
        continue;  // antiparallel but different lines
      }
      const auto seg_a = facet_segment(a, i);
      const auto seg_b = facet_segment(b, j);
      if (!seg_a || !seg_b) {
        continue;
      }
      // Overlap of the two facet intervals along the shared line.
      const Vec2 dir{-na.y, na.x};
      double a0 = dir.dot(seg_a->first), a1 = dir.dot(seg_a->second);
      double b0 = dir.dot(seg_b->first), b1 = dir.dot(seg_b->second);
      if (a0 > a1) {
        std::swap(a0, a1);
      }
      if (b0 > b1) {
        std::swap(b0, b1);
      }
      const double lo = std::max(a0, b0);
      const double hi = std::min(a1, b1);
      if (hi - lo <= kFeasibilityTol) {
        continue;
      }
      const Point2 origin = na * a.b(i);
      SharedFacet facet;
      facet.facet_a = i;
      facet.facet_b = j;
      facet.p0 = origin + dir * lo;
      facet.p1 = origin + dir * hi;
      return facet;
    }
  }
  return std::nullopt;
}

}  // namespace pwbplan::geom
