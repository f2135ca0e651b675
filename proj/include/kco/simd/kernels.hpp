#pragma once

// Distance kernels, the only hot loops in the library. A scalar reference
// implementation and vector variants (AVX2 on x86-64, NEON on aarch64) are
// built side by side; one is picked at runtime and all produce bit-identical
// results.
//
// The equivalence contract: every implementation accumulates squared
// differences into four conceptual lanes (element j of the inner dimension
// goes to lane j mod 4 within its block of four; tail elements fill lanes
// 0..r-1), uses plain IEEE sub/mul/add with no FMA, and reduces in the fixed
// order (lane0 + lane2) + (lane1 + lane3). The whole project is compiled with
// -ffp-contract=off so the scalar loop cannot be contracted into FMA behind
// our back. Square roots are correctly rounded by IEEE 754, so scalar and
// vector sqrt agree exactly.

#include <cstddef>

namespace kco::simd {

struct Kernels {
  const char* name;

  // Squared Euclidean distance between two d-vectors.
  double (*sqdist)(const double* a, const double* b, std::size_t d);

  // dists[i] = min(dists[i], |pts_i - center|) for rows i in [0, n).
  void (*min_update)(const double* pts, std::size_t n, std::size_t d,
                     const double* center, double* dists);

  // out[i] = |pts_i - center| for rows i in [0, n).
  void (*dists_to)(const double* pts, std::size_t n, std::size_t d,
                   const double* center, double* out);

  // dst[i] = min(dst[i], src[i]).
  void (*min_inplace)(double* dst, const double* src, std::size_t n);
};

enum class Backend { scalar, avx2, neon };

// The backend in use: auto-detected on first call, overridable by the
// KCO_SIMD environment variable ("scalar", "avx2", "neon", "auto"). An
// unavailable or unknown value falls back to auto with a one-time warning.
const Kernels& kernels();
Backend active_backend();

// Force a backend (tests use this to compare implementations). Returns false
// and leaves the selection unchanged if the backend is not available here.
bool force_backend(Backend b);

const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // nullptr off x86-64 or without CPU support
const Kernels* neon_kernels();  // nullptr off aarch64

}  // namespace kco::simd
