#include "kco/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

// AVX2 variants. No FMA: plain sub/mul/add keeps every lane identical to the
// scalar reference. The horizontal reduction matches the canonical
// (lane0 + lane2) + (lane1 + lane3) order.

namespace kco::simd {
namespace {

inline double reduce_tail(__m256d acc, const double* a, const double* b,
                          std::size_t j, std::size_t d) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
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

double sqdist_avx2(const double* a, const double* b, std::size_t d) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= d; j += 4) {
    const __m256d t = _mm256_sub_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(t, t));
  }
  return reduce_tail(acc, a, b, j, d);
}

void min_update_avx2(const double* pts, std::size_t n, std::size_t d,
                     const double* center, double* dists) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::sqrt(sqdist_avx2(pts + i * d, center, d));
    if (v < dists[i]) dists[i] = v;
  }
}

void dists_to_avx2(const double* pts, std::size_t n, std::size_t d,
                   const double* center, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::sqrt(sqdist_avx2(pts + i * d, center, d));
  }
}

void min_inplace_avx2(double* dst, const double* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // _mm256_min_pd(a, b) yields (a < b) ? a : b per lane, matching the
    // scalar (src < dst) ? src : dst with a = src, b = dst.
    const __m256d m = _mm256_min_pd(_mm256_loadu_pd(src + i), _mm256_loadu_pd(dst + i));
    _mm256_storeu_pd(dst + i, m);
  }
  for (; i < n; ++i) {
    dst[i] = (src[i] < dst[i]) ? src[i] : dst[i];
  }
}

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

}  // namespace

const Kernels* avx2_kernels() {
  static const bool ok = cpu_has_avx2();
  if (!ok) return nullptr;
  static const Kernels k{"avx2", &sqdist_avx2, &min_update_avx2, &dists_to_avx2,
                         &min_inplace_avx2};
  return &k;
}

}  // namespace kco::simd

#else

namespace kco::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace kco::simd

#endif
