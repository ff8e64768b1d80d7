#pragma once

// Finite-dimensional realization of the state-space maps: pure states of the
// fiber as rank-1 projectors evaluated by tau_p(a) = Tr(p a), product states
// delta_x (x) tau_p, lifts through evaluation at a grid point, the adjoined
// state at infinity of the unitalized algebra, and the weak-* escape of basis
// projectors.  Everything lives at a fixed finite truncation; the escape
// probe renders the infinite-dimensional phenomenon by raising the ambient
// dimension.

#include <complex>
#include <variant>
#include <vector>

#include "phaseatlas/configspace.hpp"
#include "phaseatlas/numkernel.hpp"

namespace phaseatlas::states {

using cd = std::complex<double>;
using numkernel::ComplexMatrix;

struct PureStatePoint {
    ComplexMatrix p;  // rank-1 orthogonal projector

    std::size_t dim() const { return p.dim(); }
    static PureStatePoint from_vector(const std::vector<cd>& v);
    // Throws InputError unless p = p*, p^2 = p, tr p = 1 within tol.
    void validate(double tol = 1e-10) const;
};

// The non-normal state of the unitalization; it has no projector
// representative, so it is a distinguished value rather than a PureStatePoint.
struct InfinityPoint {};

using StatePoint = std::variant<PureStatePoint, InfinityPoint>;

struct UnitalizedElement {
    ComplexMatrix compact_part;
    cd scalar_part;
};

// tau_p(a) = Tr(p a)
cd tau_eval(const PureStatePoint& p, const ComplexMatrix& a);

// (delta_x (x) tau_p)(f (.) a) = f(x) * Tr(p a)
cd product_state_eval(const configspace::MultiIndex& x, const PureStatePoint& p,
                      const configspace::ScalarField& f, const ComplexMatrix& a);

// Lift of the fiber state at x: evaluates F at x, then applies tau_p.
cd lift_eval(const configspace::MultiIndex& x, const PureStatePoint& p,
             const configspace::OperatorField& f);

// For a pure state: Tr(p a) + z.  For the point at infinity: z.
cd unitalized_eval(const StatePoint& state, const UnitalizedElement& e);

// omega_n(a) = Tr(p_n a) for the n-th basis projector (1-based) of an
// N-dimensional space, with a supported on the top-left block.  Exactly zero
// beyond the block.
cd weak_escape_probe(std::size_t ambient_dim, const ComplexMatrix& block, std::size_t n);

// |Tr(p(angle) a) - Tr(p(0) a)| for the rank-1 family obtained by rotating v
// toward w.  The phase of w is aligned so the first-order cross term
// vanishes; the deviation is then proportional to sin^2(angle) and the
// returned column is monotone in the angle.
std::vector<double> tau_continuity_sweep(const ComplexMatrix& a, const std::vector<cd>& v,
                                         const std::vector<cd>& w,
                                         const std::vector<double>& angles);

}  // namespace phaseatlas::states
