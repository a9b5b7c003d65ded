#include "pwbplan/kernels/kernels.hpp"

namespace pwbplan::kernels {

namespace {

using EvalFn = void (*)(const double*, std::size_t, double, double, double, double, double, double,
                        double*, double*);
using ResidualFn = double (*)(const double*, const double*, std::size_t, double, double, double);
using DistFn = double (*)(const double*, const double*, std::size_t, double, double);

struct Table {
  Backend backend;
  EvalFn eval;
  ResidualFn residual;
  DistFn dist;
};

constexpr Table kScalarTable{Backend::Scalar, detail::eval_quadratic_scalar,
                             detail::max_halfspace_residual_scalar,
                             detail::min_squared_distance_to_polyline_scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Table kAvx2Table{Backend::Avx2, detail::eval_quadratic_avx2,
                           detail::max_halfspace_residual_avx2,
                           detail::min_squared_distance_to_polyline_avx2};

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }
#else
bool cpu_has_avx2() { return false; }
#endif

const Table& default_table() {
#if defined(__x86_64__) || defined(_M_X64)
  static const Table& chosen = cpu_has_avx2() ? kAvx2Table : kScalarTable;
  return chosen;
#else
  return kScalarTable;
#endif
}

const Table* g_active = nullptr;

const Table& active_table() {
  if (g_active == nullptr) {
    g_active = &default_table();
  }
  return *g_active;
}

}  // namespace

bool avx2_available() { return cpu_has_avx2(); }

bool set_backend(Backend backend) {
  switch (backend) {
    case Backend::Auto:
      g_active = &default_table();
      return true;
    case Backend::Scalar:
      g_active = &kScalarTable;
      return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (cpu_has_avx2()) {
        g_active = &kAvx2Table;
        return true;
      }
#endif
      return false;
  }
  return false;
}

Backend active_backend() { return active_table().backend; }

const char* backend_name() {
  return active_table().backend == Backend::Avx2 ? "avx2" : "scalar";
}

void eval_quadratic(const double* ts, std::size_t n, double p0x, double p0y, double p1x,
                    double p1y, double p2x, double p2y, double* xs, double* ys) {
  active_table().eval(ts, n, p0x, p0y, p1x, p1y, p2x, p2y, xs, ys);
}

double max_halfspace_residual(const double* xs, const double* ys, std::size_t n, double hx,
                              double hy, double b) {
  return active_table().residual(xs, ys, n, hx, hy, b);
}

double min_squared_distance_to_polyline(const double* xs, const double* ys, std::size_t n,
                                        double px, double py) {
  return active_table().dist(xs, ys, n, px, py);
}

}  // namespace pwbplan::kernels
