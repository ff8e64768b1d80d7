#include "phaseatlas/kernels.hpp"

namespace phaseatlas::kernels::scalar {

cd cdot(const cd* x, const cd* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

cd cdotu(const cd* x, const cd* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr - xi * yi;
        im += xr * yi + xi * yr;
    }
    return {re, im};
}

void matvec(const cd* a, const cd* x, cd* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = cdotu(a + i * n, x, n);
    }
}

void phase_scale(cd* v, cd phase, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) v[i] *= phase;
}

}  // namespace phaseatlas::kernels::scalar
