// AVX2/FMA variants.  This translation unit is compiled with -mavx2 -mfma;
// the dispatcher only routes here after checking CPU support at runtime.

#include "phaseatlas/kernels.hpp"

#if defined(PHASEATLAS_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace phaseatlas::kernels::avx2 {

namespace {

// Accumulates conj(x)*y over 2 complex lanes per vector.
// acc_d holds (xr*yr, xi*yi, ...) pairs, acc_c holds (xr*yi, xi*yr, ...).
inline cd cdot_core(const cd* x, const cd* y, std::size_t n, bool conjugate_x) {
    const __m256d neg_im = _mm256_castsi256_pd(
        _mm256_set_epi64x(0x8000000000000000LL, 0, 0x8000000000000000LL, 0));
    __m256d acc_d = _mm256_setzero_pd();
    __m256d acc_c = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        if (!conjugate_x) vx = _mm256_xor_pd(vx, neg_im);
        acc_d = _mm256_fmadd_pd(vx, vy, acc_d);
        const __m256d vy_sw = _mm256_permute_pd(vy, 0x5);
        acc_c = _mm256_fmadd_pd(vx, vy_sw, acc_c);
    }
    alignas(32) double d[4], c[4];
    _mm256_store_pd(d, acc_d);
    _mm256_store_pd(c, acc_c);
    double re = (d[0] + d[1]) + (d[2] + d[3]);
    double im = (c[0] - c[1]) + (c[2] - c[3]);
    for (; i < n; ++i) {
        const double xr = x[i].real();
        const double xi = conjugate_x ? x[i].imag() : -x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

}  // namespace

cd cdot(const cd* x, const cd* y, std::size_t n) { return cdot_core(x, y, n, true); }

cd cdotu(const cd* x, const cd* y, std::size_t n) { return cdot_core(x, y, n, false); }

void matvec(const cd* a, const cd* x, cd* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = cdotu(a + i * n, x, n);
    }
}

void phase_scale(cd* v, cd phase, std::size_t n) {
    const __m256d pr = _mm256_set1_pd(phase.real());
    const __m256d pi = _mm256_set1_pd(phase.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vv = _mm256_loadu_pd(reinterpret_cast<const double*>(v + i));
        const __m256d vs = _mm256_permute_pd(vv, 0x5);
        const __m256d res = _mm256_addsub_pd(_mm256_mul_pd(vv, pr), _mm256_mul_pd(vs, pi));
        _mm256_storeu_pd(reinterpret_cast<double*>(v + i), res);
    }
    for (; i < n; ++i) v[i] *= phase;
}

}  // namespace phaseatlas::kernels::avx2

#endif  // PHASEATLAS_HAVE_AVX2_KERNELS
