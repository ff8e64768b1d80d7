#include "phaseatlas/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace phaseatlas::kernels {

namespace {

struct Ops {
    Backend backend;
    cd (*cdot)(const cd*, const cd*, std::size_t);
    cd (*cdotu)(const cd*, const cd*, std::size_t);
    void (*matvec)(const cd*, const cd*, cd*, std::size_t);
    void (*phase_scale)(cd*, cd, std::size_t);
};

constexpr Ops kScalarOps{Backend::scalar, scalar::cdot, scalar::cdotu, scalar::matvec,
                         scalar::phase_scale};

Ops resolve() {
    const char* env = std::getenv("PHASEATLAS_KERNEL");
    const bool forced_scalar = env && std::strcmp(env, "scalar") == 0;
    if (forced_scalar) return kScalarOps;
#if defined(PHASEATLAS_HAVE_AVX2_KERNELS)
    const bool want_avx2 = !env || std::strcmp(env, "auto") == 0 || std::strcmp(env, "avx2") == 0;
    if (want_avx2 && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return Ops{Backend::avx2, avx2::cdot, avx2::cdotu, avx2::matvec, avx2::phase_scale};
    }
#endif
#if defined(PHASEATLAS_HAVE_NEON_KERNELS)
    const bool want_neon = !env || std::strcmp(env, "auto") == 0 || std::strcmp(env, "neon") == 0;
    if (want_neon) {
        return Ops{Backend::neon, neon::cdot, neon::cdotu, neon::matvec, neon::phase_scale};
    }
#endif
    return kScalarOps;
}

const Ops& ops() {
    static const Ops resolved = resolve();
    return resolved;
}

}  // namespace

Backend active_backend() { return ops().backend; }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "unknown";
}

cd cdot(const cd* x, const cd* y, std::size_t n) { return ops().cdot(x, y, n); }
cd cdotu(const cd* x, const cd* y, std::size_t n) { return ops().cdotu(x, y, n); }
void matvec(const cd* a, const cd* x, cd* y, std::size_t n) { ops().matvec(a, x, y, n); }
void phase_scale(cd* v, cd phase, std::size_t n) { ops().phase_scale(v, phase, n); }

}  // namespace phaseatlas::kernels
