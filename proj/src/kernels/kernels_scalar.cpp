#include <algorithm>
#include <limits>

#include "pwbplan/kernels/kernels.hpp"

namespace pwbplan::kernels::detail {

void eval_quadratic_scalar(const double* ts, std::size_t n, double p0x, double p0y, double p1x,
                           double p1y, double p2x, double p2y, double* xs, double* ys) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = ts[i];
    const double u = 1.0 - t;
    const double b0 = u * u;
    const double b1 = 2.0 * u * t;
    const double b2 = t * t;
    xs[i] = b0 * p0x + b1 * p1x + b2 * p2x;
    ys[i] = b0 * p0y + b1 * p1y + b2 * p2y;
  }
}

double max_halfspace_residual_scalar(const double* xs, const double* ys, std::size_t n, double hx,
                                     double hy, double b) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, hx * xs[i] + hy * ys[i] - b);
  }
  return worst;
}

double min_squared_distance_to_polyline_scalar(const double* xs, const double* ys, std::size_t n,
                                               double px, double py) {
  if (n == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const double dx0 = px - xs[0];
  const double dy0 = py - ys[0];
  double best = dx0 * dx0 + dy0 * dy0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double ax = xs[i];
    const double ay = ys[i];
    const double ex = xs[i + 1] - ax;
    const double ey = ys[i + 1] - ay;
    const double len2 = ex * ex + ey * ey;
    double t = 0.0;
    if (len2 > 0.0) {
      t = ((px - ax) * ex + (py - ay) * ey) / len2;
      t = std::clamp(t, 0.0, 1.0);
    }
    const double qx = ax + t * ex;
    const double qy = ay + t * ey;
    const double dx = px - qx;
    const double dy = py - qy;
    best = std::min(best, dx * dx + dy * dy);
  }
  return best;
}

}  // namespace pwbplan::kernels::detail
