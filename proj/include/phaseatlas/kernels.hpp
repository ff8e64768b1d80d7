#pragma once

// Data-parallel inner loops shared by every module: complex dot products,
// small dense mat-vec, and per-point phase rotation.  A scalar reference
// implementation defines the semantics; SIMD variants (AVX2 on x86-64,
// NEON on aarch64) are selected once at startup from CPU capabilities and
// are equivalence-tested against the scalar kernels.  The environment
// variable PHASEATLAS_KERNEL=scalar|avx2|neon|auto overrides the choice.

#include <complex>
#include <cstddef>

namespace phaseatlas::kernels {

using cd = std::complex<double>;

enum class Backend { scalar, avx2, neon };

Backend active_backend();
const char* backend_name(Backend b);

// sum_i conj(x_i) * y_i
cd cdot(const cd* x, const cd* y, std::size_t n);

// sum_i x_i * y_i (no conjugation)
cd cdotu(const cd* x, const cd* y, std::size_t n);

// y = A x, A row-major n x n
void matvec(const cd* a, const cd* x, cd* y, std::size_t n);

// v_i *= phase
void phase_scale(cd* v, cd phase, std::size_t n);

namespace scalar {
cd cdot(const cd* x, const cd* y, std::size_t n);
cd cdotu(const cd* x, const cd* y, std::size_t n);
void matvec(const cd* a, const cd* x, cd* y, std::size_t n);
void phase_scale(cd* v, cd phase, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define PHASEATLAS_HAVE_AVX2_KERNELS 1
namespace avx2 {
cd cdot(const cd* x, const cd* y, std::size_t n);
cd cdotu(const cd* x, const cd* y, std::size_t n);
void matvec(const cd* a, const cd* x, cd* y, std::size_t n);
void phase_scale(cd* v, cd phase, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define PHASEATLAS_HAVE_NEON_KERNELS 1
namespace neon {
cd cdot(const cd* x, const cd* y, std::size_t n);
cd cdotu(const cd* x, const cd* y, std::size_t n);
void matvec(const cd* a, const cd* x, cd* y, std::size_t n);
void phase_scale(cd* v, cd phase, std::size_t n);
}  // namespace neon
#endif

}  // namespace phaseatlas::kernels
