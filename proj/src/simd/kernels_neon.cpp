#include "kco/simd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

// NEON variants: two float64x2 registers stand in for lanes (0,1) and (2,3)
// of the canonical four-lane accumulator.

namespace kco::simd {
namespace {

inline double reduce_tail(float64x2_t acc01, float64x2_t acc23, const double* a,
                          const double* b, std::size_t j, std::size_t d) {
  double lane[4] = {vgetq_lane_f64(acc01, 0), vgetq_lane_f64(acc01, 1),
                    vgetq_lane_f64(acc23, 0), vgetq_lane_f64(acc23, 1)};
  switch (d - j) {
    case 3: {
      const double t = a[j + 2] - b[j + 2];
      lane[2] += t * t;
      [[fallthrough]];
    }
    case 2: {
      const double t = a[j + 1] - b[j + 1];
      lane[1] += t * t;
      [[fallthrough]];
    }
    case 1: {
      const double t = a[j] - b[j];
      lane[0] += t * t;
      break;
    }
    default:
      break;
  }
  return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

double sqdist_neon(const double* a, const double* b, std::size_t d) {
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 4 <= d; j += 4) {
    const float64x2_t t01 = vsubq_f64(vld1q_f64(a + j), vld1q_f64(b + j));
    const float64x2_t t23 = vsubq_f64(vld1q_f64(a + j + 2), vld1q_f64(b + j + 2));
    acc01 = vaddq_f64(acc01, vmulq_f64(t01, t01));
    acc23 = vaddq_f64(acc23, vmulq_f64(t23, t23));
  }
  return reduce_tail(acc01, acc23, a, b, j, d);
}

void min_update_neon(const double* pts, std::size_t n, std::size_t d,
                     const double* center, double* dists) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::sqrt(sqdist_neon(pts + i * d, center, d));
    if (v < dists[i]) dists[i] = v;
  }
}

void dists_to_neon(const double* pts, std::size_t n, std::size_t d,
                   const double* center, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::sqrt(sqdist_neon(pts + i * d, center, d));
  }
}

void min_inplace_neon(double* dst, const double* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t m = vminq_f64(vld1q_f64(src + i), vld1q_f64(dst + i));
    vst1q_f64(dst + i, m);
  }
  for (; i < n; ++i) {
    dst[i] = (src[i] < dst[i]) ? src[i] : dst[i];
  }
}

}  // namespace

const Kernels* neon_kernels() {
  static const Kernels k{"neon", &sqdist_neon, &min_update_neon, &dists_to_neon,
                         &min_inplace_neon};
  return &k;
}

}  // namespace kco::simd

#else

namespace kco::simd {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace kco::simd

#endif
