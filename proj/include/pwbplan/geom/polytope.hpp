#ifndef PWBPLAN_GEOM_POLYTOPE_HPP
#define PWBPLAN_GEOM_POLYTOPE_HPP

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "pwbplan/geom/polygon.hpp"

namespace pwbplan::geom {

// Tolerance hierarchy used across the geometry layer: construction and
// degeneracy at 1e-12, containment and feasibility at 1e-9, user-facing
// checks at 1e-6.
inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kFeasibilityTol = 1e-9;
inline constexpr double kUserTol = 1e-6;

// H-representation {x | H x <= b} of a bounded convex region. Every row of H
// is unit-norm so that subtracting eps from b moves that facet exactly eps
// meters inward.
struct Polytope {
  Eigen::Matrix<double, Eigen::Dynamic, 2> H;
  Eigen::VectorXd b;
  // Label per facet; the decomposition stores the adjacent cell index here
  // (-1 where the facet lies on an obstacle or the workspace boundary).
  std::vector<int> facet_tags;

  int num_facets() const { return static_cast<int>(H.rows()); }
  double residual(int k, const Point2& x) const { return H(k, 0) * x.x + H(k, 1) * x.y - b(k); }
  double max_residual(const Point2& x) const;
};

struct SharedFacet {
  int facet_a = -1;
  int facet_b = -1;
  Point2 p0;
  Point2 p1;
  double length() const { return distance(p0, p1); }
};

Polytope polygon_to_polytope(const ConvexPolygon& poly);

bool contains(const Polytope& p, const Point2& x, double tol);

// CCW vertices of the feasible region; empty when the region is empty or has
// area below 1e-12. Throws on unbounded regions.
std::vector<Point2> polytope_vertices(const Polytope& p);

double polytope_area(const Polytope& p);

// The full-dimensional common boundary segment between two cells of one
// decomposition, or nullopt when they only touch in a point or not at all.
std::optional<SharedFacet> shared_facet(const Polytope& a, const Polytope& b);

}  // namespace pwbplan::geom

#endif
