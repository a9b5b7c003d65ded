#ifndef PWBPLAN_GEOM_POLYGON_HPP
#define PWBPLAN_GEOM_POLYGON_HPP

#include <vector>

#include "pwbplan/geom/point.hpp"

namespace pwbplan::geom {

// Strictly convex polygon with CCW vertex order. CW input is reversed on
// construction; collinear or duplicate vertices are rejected.
class ConvexPolygon {
public:
  explicit ConvexPolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

  double area() const;
  Point2 centroid() const;
  // max_k(H_k . x - b_k) over the edge half-planes, negative inside.
  double signed_margin(const Point2& p) const;
  bool contains(const Point2& p, double tol) const;

private:
  std::vector<Point2> vertices_;
};

double polygon_area(const std::vector<Point2>& vertices);  // signed, CCW positive

// Area of the intersection of two convex polygons (Sutherland-Hodgman clip).
double convex_intersection_area(const ConvexPolygon& a, const ConvexPolygon& b);

}  // namespace pwbplan::geom

#endif
