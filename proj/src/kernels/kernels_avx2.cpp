#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "pwbplan/kernels/kernels.hpp"

namespace pwbplan::kernels::detail {

namespace {

inline double horizontal_max(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  const __m128d s = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(s);
}

inline double horizontal_min(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  const __m128d s = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(s);
}

}  // namespace

void eval_quadratic_avx2(const double* ts, std::size_t n, double p0x, double p0y, double p1x,
                         double p1y, double p2x, double p2y, double* xs, double* ys) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d vp0x = _mm256_set1_pd(p0x);
  const __m256d vp0y = _mm256_set1_pd(p0y);
  const __m256d vp1x = _mm256_set1_pd(p1x);
  const __m256d vp1y = _mm256_set1_pd(p1y);
  const __m256d vp2x = _mm256_set1_pd(p2x);
  const __m256d vp2y = _mm256_set1_pd(p2y);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(ts + i);
    const __m256d u = _mm256_sub_pd(one, t);
    const __m256d b0 = _mm256_mul_pd(u, u);
    const __m256d b1 = _mm256_mul_pd(two, _mm256_mul_pd(u, t));
    const __m256d b2 = _mm256_mul_pd(t, t);
    __m256d x = _mm256_mul_pd(b0, vp0x);
    x = _mm256_fmadd_pd(b1, vp1x, x);
    x = _mm256_fmadd_pd(b2, vp2x, x);
    __m256d y = _mm256_mul_pd(b0, vp0y);
    y = _mm256_fmadd_pd(b1, vp1y, y);
    y = _mm256_fmadd_pd(b2, vp2y, y);
    _mm256_storeu_pd(xs + i, x);
    _mm256_storeu_pd(ys + i, y);
  }
  if (i < n) {
    eval_quadratic_scalar(ts + i, n - i, p0x, p0y, p1x, p1y, p2x, p2y, xs + i, ys + i);
  }
}

double max_halfspace_residual_avx2(const double* xs, const double* ys, std::size_t n, double hx,
                                   double hy, double b) {
  const __m256d vhx = _mm256_set1_pd(hx);
  const __m256d vhy = _mm256_set1_pd(hy);
  const __m256d vb = _mm256_set1_pd(b);
  __m256d worst = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d r = _mm256_sub_pd(_mm256_fmadd_pd(vhx, x, _mm256_mul_pd(vhy, y)), vb);
    worst = _mm256_max_pd(worst, r);
  }
  double result = horizontal_max(worst);
  if (i < n) {
    result = std::max(result, max_halfspace_residual_scalar(xs + i, ys + i, n - i, hx, hy, b));
  }
  return result;
}

double min_squared_distance_to_polyline_avx2(const double* xs, const double* ys, std::size_t n,
                                             double px, double py) {
  if (n == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const double dx0 = px - xs[0];
  const double dy0 = py - ys[0];
  double best = dx0 * dx0 + dy0 * dy0;
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d vbest = _mm256_set1_pd(best);
  std::size_t i = 0;
  // 4 consecutive segments per iteration; segment i runs from point i to i+1.
  for (; i + 5 <= n; i += 4) {
    const __m256d ax = _mm256_loadu_pd(xs + i);
    const __m256d ay = _mm256_loadu_pd(ys + i);
    const __m256d bx = _mm256_loadu_pd(xs + i + 1);
    const __m256d by = _mm256_loadu_pd(ys + i + 1);
    const __m256d ex = _mm256_sub_pd(bx, ax);
    const __m256d ey = _mm256_sub_pd(by, ay);
    const __m256d rx = _mm256_sub_pd(vpx, ax);
    const __m256d ry = _mm256_sub_pd(vpy, ay);
    const __m256d len2 = _mm256_fmadd_pd(ex, ex, _mm256_mul_pd(ey, ey));
    const __m256d dot = _mm256_fmadd_pd(rx, ex, _mm256_mul_pd(ry, ey));
    __m256d t = _mm256_div_pd(dot, len2);
    t = _mm256_max_pd(zero, _mm256_min_pd(one, t));
    // Zero-length segments produce nan above; collapse them onto point a.
    const __m256d degenerate = _mm256_cmp_pd(len2, zero, _CMP_LE_OQ);
    t = _mm256_blendv_pd(t, zero, degenerate);
    const __m256d dx = _mm256_sub_pd(rx, _mm256_mul_pd(t, ex));
    const __m256d dy = _mm256_sub_pd(ry, _mm256_mul_pd(t, ey));
    const __m256d d2 = _mm256_fmadd_pd(dx, dx, _mm256_mul_pd(dy, dy));
    vbest = _mm256_min_pd(vbest, d2);
  }
  best = std::min(best, horizontal_min(vbest));
  if (i + 1 < n) {
    best = std::min(
        best, min_squared_distance_to_polyline_scalar(xs + i, ys + i, n - i, px, py));
  }
  return best;
}

}  // namespace pwbplan::kernels::detail

#endif  // x86_64
