// NEON variants for aarch64 (one complex double per 128-bit vector).

#include "phaseatlas/kernels.hpp"

#if defined(PHASEATLAS_HAVE_NEON_KERNELS)

#include <arm_neon.h>

namespace phaseatlas::kernels::neon {

namespace {

inline cd cdot_core(const cd* x, const cd* y, std::size_t n, bool conjugate_x) {
    // lane 0 = real, lane 1 = imag
    float64x2_t acc_d = vdupq_n_f64(0.0);  // (xr*yr, xi*yi)
    float64x2_t acc_c = vdupq_n_f64(0.0);  // (xr*yi, xi*yr)
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t vx = vld1q_f64(reinterpret_cast<const double*>(x + i));
        const float64x2_t vy = vld1q_f64(reinterpret_cast<const double*>(y + i));
        if (!conjugate_x) {
            vx = vsetq_lane_f64(-vgetq_lane_f64(vx, 1), vx, 1);
        }
        acc_d = vfmaq_f64(acc_d, vx, vy);
        acc_c = vfmaq_f64(acc_c, vx, vextq_f64(vy, vy, 1));
    }
    const double re = vgetq_lane_f64(acc_d, 0) + vgetq_lane_f64(acc_d, 1);
    const double im = vgetq_lane_f64(acc_c, 0) - vgetq_lane_f64(acc_c, 1);
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
    const float64x2_t pr = vdupq_n_f64(phase.real());
    const float64x2_t sign = {1.0, -1.0};
    const float64x2_t pi_sgn = vmulq_f64(vdupq_n_f64(phase.imag()), sign);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t vv = vld1q_f64(reinterpret_cast<const double*>(v + i));
        const float64x2_t vs = vextq_f64(vv, vv, 1);
        // (vr*pr - vi*pi, vi*pr + vr*pi)
        const float64x2_t res = vfmaq_f64(vmulq_f64(vv, pr), vs, vextq_f64(pi_sgn, pi_sgn, 1));
        vst1q_f64(reinterpret_cast<double*>(v + i), res);
    }
}

}  // namespace phaseatlas::kernels::neon

#endif  // PHASEATLAS_HAVE_NEON_KERNELS
