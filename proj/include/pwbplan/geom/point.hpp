#ifndef PWBPLAN_GEOM_POINT_HPP
#define PWBPLAN_GEOM_POINT_HPP

#include <cmath>

namespace pwbplan::geom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  // z-component of the 3D cross product; positive for a CCW turn.
  constexpr double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  constexpr double squared_norm() const { return x * x + y * y; }
  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }
  // 90 degree clockwise rotation.
  constexpr Vec2 rotated_cw() const { return {y, -x}; }

  bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

using Point2 = Vec2;

inline double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

}  // namespace pwbplan::geom

#endif
