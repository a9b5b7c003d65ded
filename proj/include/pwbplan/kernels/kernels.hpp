#ifndef PWBPLAN_KERNELS_KERNELS_HPP
#define PWBPLAN_KERNELS_KERNELS_HPP

#include <cstddef>

namespace pwbplan::kernels {

// Data-parallel inner loops of the artifact. Each kernel has a scalar
// reference implementation and an AVX2 variant; the active one is selected
// at runtime from CPU features and can be forced for equivalence testing.

enum class Backend { Auto, Scalar, Avx2 };

// Forces a backend. Returns false (leaving the selection unchanged) when the
// requested backend is not available on this machine.
bool set_backend(Backend backend);
Backend active_backend();
const char* backend_name();
bool avx2_available();

// Quadratic Bezier evaluation at n parameter values:
//   out(t) = (1-t)^2 p0 + 2(1-t)t p1 + t^2 p2.
void eval_quadratic(const double* ts, std::size_t n, double p0x, double p0y, double p1x,
                    double p1y, double p2x, double p2y, double* xs, double* ys);

// max_i (hx*xs[i] + hy*ys[i] - b); -inf for n == 0.
double max_halfspace_residual(const double* xs, const double* ys, std::size_t n, double hx,
                              double hy, double b);

// Squared distance from (px, py) to the polyline through (xs, ys); treats a
// single point as a zero-length polyline. +inf for n == 0.
double min_squared_distance_to_polyline(const double* xs, const double* ys, std::size_t n,
                                        double px, double py);

namespace detail {
void eval_quadratic_scalar(const double* ts, std::size_t n, double p0x, double p0y, double p1x,
                           double p1y, double p2x, double p2y, double* xs, double* ys);
double max_halfspace_residual_scalar(const double* xs, const double* ys, std::size_t n, double hx,
                                     double hy, double b);
double min_squared_distance_to_polyline_scalar(const double* xs, const double* ys, std::size_t n,
                                               double px, double py);

#if defined(__x86_64__) || defined(_M_X64)
void eval_quadratic_avx2(const double* ts, std::size_t n, double p0x, double p0y, double p1x,
                         double p1y, double p2x, double p2y, double* xs, double* ys);
double max_halfspace_residual_avx2(const double* xs, const double* ys, std::size_t n, double hx,
                                   double hy, double b);
double min_squared_distance_to_polyline_avx2(const double* xs, const double* ys, std::size_t n,
                                             double px, double py);
#endif
}  // namespace detail

}  // namespace pwbplan::kernels

#endif
