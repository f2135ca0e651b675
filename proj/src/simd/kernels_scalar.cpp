#include <cmath>

#include "kco/simd/kernels.hpp"

// Reference implementation. The four explicit accumulators mirror the vector
// lanes exactly; see kernels.hpp for the contract.

namespace kco::simd {
namespace {

double sqdist_scalar(const double* a, const double* b, std::size_t d) {
  double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
  std::size_t j = 0;
  for (; j + 4 <= d; j += 4) {
    const double t0 = a[j] - b[j];
    const double t1 = a[j + 1] - b[j + 1];
    const double t2 = a[j + 2] - b[j + 2];
    const double t3 = a[j + 3] - b[j + 3];
    acc0 += t0 * t0;
    acc1 += t1 * t1;
    acc2 += t2 * t2;
    acc3 += t3 * t3;
  }
  switch (d - j) {
    case 3: {
      const double t = a[j + 2] - b[j + 2];
      acc2 += t * t;
      [[fallthrough]];
    }
    case 2: {
      const double t = a[j + 1] - b[j + 1];
      acc1 += t * t;
      [[fallthrough]];
    }
    case 1: {
      const double t = a[j] - b[j];
      acc0 += t * t;
      break;
    }
    default:
      break;
  }
  return (acc0 + acc2) + (acc1 + acc3);
}

void min_update_scalar(const double* pts, std::size_t n, std::size_t d,
                       const double* center, double* dists) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::sqrt(sqdist_scalar(pts + i * d, center, d));
    if (v < dists[i]) dists[i] = v;
  }
}

void dists_to_scalar(const double* pts, std::size_t n, std::size_t d,
                     const double* center, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::sqrt(sqdist_scalar(pts + i * d, center, d));
  }
}

void min_inplace_scalar(double* dst, const double* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = (src[i] < dst[i]) ? src[i] : dst[i];
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", &sqdist_scalar, &min_update_scalar,
                         &dists_to_scalar, &min_inplace_scalar};
  return k;
}

}  // namespace kco::simd
