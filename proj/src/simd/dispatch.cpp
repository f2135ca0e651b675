#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "kco/simd/kernels.hpp"

namespace kco::simd {
namespace {

const Kernels* best_available() {
  if (const Kernels* k = avx2_kernels()) return k;
  if (const Kernels* k = neon_kernels()) return k;
  return &scalar_kernels();
}

const Kernels* from_env() {
  const char* env = std::getenv("KCO_SIMD");
  if (env == nullptr || std::strcmp(env, "auto") == 0) return best_available();
  if (std::strcmp(env, "scalar") == 0) return &scalar_kernels();
  if (std::strcmp(env, "avx2") == 0) {
    if (const Kernels* k = avx2_kernels()) return k;
  } else if (std::strcmp(env, "neon") == 0) {
    if (const Kernels* k = neon_kernels()) return k;
  }
  std::fprintf(stderr, "kco: KCO_SIMD=%s not available, using %s\n", env,
               best_available()->name);
  return best_available();
}

std::atomic<const Kernels*>& selection() {
  static std::atomic<const Kernels*> sel{from_env()};
  return sel;
}

}  // namespace

const Kernels& kernels() { return *selection().load(std::memory_order_relaxed); }

Backend active_backend() {
  const char* name = kernels().name;
  if (std::strcmp(name, "avx2") == 0) return Backend::avx2;
  if (std::strcmp(name, "neon") == 0) return Backend::neon;
  return Backend::scalar;
}

bool force_backend(Backend b) {
  const Kernels* k = nullptr;
  switch (b) {
    case Backend::scalar:
      k = &scalar_kernels();
      break;
    case Backend::avx2:
      k = avx2_kernels();
      break;
    case Backend::neon:
      k = neon_kernels();
      break;
  }
  if (k == nullptr) return false;
  selection().store(k, std::memory_order_relaxed);
  return true;
}

}  // namespace kco::simd
