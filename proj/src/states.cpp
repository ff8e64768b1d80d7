#include "phaseatlas/states.hpp"

#include <cmath>

#include "phaseatlas/kernels.hpp"

namespace phaseatlas::states {

PureStatePoint PureStatePoint::from_vector(const std::vector<cd>& v) {
    const double nrm = std::sqrt(kernels::cdot(v.data(), v.data(), v.size()).real());
    if (!std::isfinite(nrm) || std::abs(nrm - 1.0) > 1e-10)
        throw InputError("PureStatePoint: vector is not a unit vector");
    return PureStatePoint{numkernel::outer_projector(v)};
}

void PureStatePoint::validate(double tol) const {
    const std::size_t n = p.dim();
    if (n == 0) throw InputError("PureStatePoint: empty projector");
    if (!p.finite()) throw InputError("PureStatePoint: non-finite entries");
    if (numkernel::hermiticity_defect(p) > tol)
        throw InputError("PureStatePoint: projector not Hermitian");
    const ComplexMatrix sq = p * p;
    double idem = 0.0;
    cd tr{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        tr += p(i, i);
        for (std::size_t j = 0; j < n; ++j)
            idem = std::max(idem, std::abs(sq(i, j) - p(i, j)));
    }
    if (idem > tol) throw InputError("PureStatePoint: projector not idempotent");
    if (std::abs(tr - cd{1.0, 0.0}) > tol) throw InputError("PureStatePoint: trace is not 1");
}

cd tau_eval(const PureStatePoint& p, const ComplexMatrix& a) {
    if (p.dim() != a.dim()) throw DimensionMismatch("tau_eval: dimensions differ");
    return numkernel::trace_product(p.p, a);
}

cd product_state_eval(const configspace::MultiIndex& x, const PureStatePoint& p,
                      const configspace::ScalarField& f, const ComplexMatrix& a) {
    const std::size_t flat = f.grid.flat_index(x);
    return f.values.at(flat) * tau_eval(p, a);
}

cd lift_eval(const configspace::MultiIndex& x, const PureStatePoint& p,
             const configspace::OperatorField& f) {
    const std::size_t flat = f.grid.flat_index(x);
    return tau_eval(p, f.at(flat));
}

cd unitalized_eval(const StatePoint& state, const UnitalizedElement& e) {
    if (std::holds_alternative<InfinityPoint>(state)) return e.scalar_part;
    return tau_eval(std::get<PureStatePoint>(state), e.compact_part) + e.scalar_part;
}

cd weak_escape_probe(std::size_t ambient_dim, const ComplexMatrix& block, std::size_t n) {
    if (n < 1 || n > ambient_dim)
        throw IndexOutOfRange("weak_escape_probe: index must satisfy 1 <= n <= N");
    if (block.dim() > ambient_dim)
        throw DimensionMismatch("weak_escape_probe: block larger than ambient dimension");
    // Beyond the embedded block the trace against p_n is identically zero.
    if (n > block.dim()) return cd{0.0, 0.0};
    return block(n - 1, n - 1);
}

std::vector<double> tau_continuity_sweep(const ComplexMatrix& a, const std::vector<cd>& v,
                                         const std::vector<cd>& w,
                                         const std::vector<double>& angles) {
    const std::size_t n = a.dim();
    if (v.size() != n || w.size() != n)
        throw DimensionMismatch("tau_continuity_sweep: dimensions differ");
    // Align the phase of w so that Re<v, a w'> = 0.
    std::vector<cd> aw(n);
    std::vector<cd> wp = w;
    kernels::matvec(a.data(), wp.data(), aw.data(), n);
    const cd vw = kernels::cdot(v.data(), aw.data(), n);
    if (std::abs(vw) > 0.0) {
        const cd phase = cd{0.0, 1.0} * std::conj(vw) / std::abs(vw);
        kernels::phase_scale(wp.data(), phase, n);
    }

    const PureStatePoint base = PureStatePoint::from_vector(v);
    const cd ref = tau_eval(base, a);
    std::vector<double> out;
    out.reserve(angles.size());
    for (double ang : angles) {
        std::vector<cd> u(n);
        const double c = std::cos(ang), s = std::sin(ang);
        for (std::size_t i = 0; i < n; ++i) u[i] = c * v[i] + s * wp[i];
        const PureStatePoint rotated = PureStatePoint::from_vector(u);
        out.push_back(std::abs(tau_eval(rotated, a) - ref));
    }
    return out;
}

}  // namespace phaseatlas::states
