#include "phaseatlas/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "phaseatlas/kernels.hpp"

namespace phaseatlas::numkernel {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cd& z : a_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::finite() const {
    for (const cd& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (o.n_ != n_) throw DimensionMismatch("matrix sum: dimensions differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (o.n_ != n_) throw DimensionMismatch("matrix difference: dimensions differ");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cd s) {
    kernels::phase_scale(a_.data(), s, a_.size());
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix product: dimensions differ");
    const std::size_t n = a.dim();
    const ComplexMatrix bt = b.transpose();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c(i, j) = kernels::cdotu(a.data() + i * n, bt.data() + j * n, n);
    return c;
}

double hermiticity_defect(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double defect = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            defect = std::max(defect, std::abs(a(i, j) - std::conj(a(j, i))));
    return defect;
}

cd trace_product(const ComplexMatrix& p, const ComplexMatrix& a) {
    if (p.dim() != a.dim()) throw DimensionMismatch("trace_product: dimensions differ");
    const ComplexMatrix at = a.transpose();
    return kernels::cdotu(p.data(), at.data(), p.dim() * p.dim());
}

ComplexMatrix outer_projector(const std::vector<cd>& v) {
    const std::size_t n = v.size();
    ComplexMatrix p(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = v[i] * std::conj(v[j]);
    return p;
}

namespace {

// Deterministic phase gauge: the largest-magnitude component of each
// eigenvector is made real positive (first maximal index wins).
void normalize_column_phases(ComplexMatrix& v) {
    const std::size_t n = v.dim();
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t imax = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double m = std::abs(v(i, j));
            if (m > best) {
                best = m;
                imax = i;
            }
        }
        if (best <= 0.0) continue;
        const cd ph = std::conj(v(imax, j)) / best;
        for (std::size_t i = 0; i < n; ++i) v(i, j) *= ph;
    }
}

double offdiag_norm(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

}  // namespace

HermitianSpectrum eigh(const ComplexMatrix& a, const EighOptions& opts) {
    const std::size_t n = a.dim();
    if (n == 0) throw DimensionMismatch("eigh: empty matrix");
    if (!a.finite()) throw InputError("eigh: non-finite entries");
    const double scale = a.max_abs();
    if (hermiticity_defect(a) > opts.hermiticity_tol * std::max(scale, 1.0))
        throw NotHermitian("eigh: input is not Hermitian within tolerance");

    ComplexMatrix w = a;
    // Symmetrize exactly so roundoff in the input cannot bias the sweeps.
    for (std::size_t i = 0; i < n; ++i) {
        w(i, i) = cd{w(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const cd m = 0.5 * (w(i, j) + std::conj(w(j, i)));
            w(i, j) = m;
            w(j, i) = std::conj(m);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double stop = 1e-15 * std::max(scale, 1e-300) * static_cast<double>(n);
    int sweep = 0;
    while (offdiag_norm(w) > stop) {
        if (sweep++ >= opts.max_sweeps)
            throw NoConvergence("eigh: sweep budget exceeded");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cd beta = w(p, q);
                const double b = std::abs(beta);
                if (b <= stop / static_cast<double>(n)) continue;
                const cd u = beta / b;
                const double alpha = w(p, p).real();
                const double gamma = w(q, q).real();
                const double rho = (alpha - gamma) / (2.0 * b);
                // Small root of t^2 - 2 rho t - 1 = 0.
                const double sgn = rho >= 0.0 ? 1.0 : -1.0;
                const double t = -sgn / (std::abs(rho) + std::hypot(rho, 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cd su = s * u;
                // Columns: col_p' = c col_p - conj(su) col_q ; col_q' = su col_p + c col_q.
                for (std::size_t r = 0; r < n; ++r) {
                    const cd wp = w(r, p), wq = w(r, q);
                    w(r, p) = c * wp - std::conj(su) * wq;
                    w(r, q) = su * wp + c * wq;
                    const cd vp = v(r, p), vq = v(r, q);
                    v(r, p) = c * vp - std::conj(su) * vq;
                    v(r, q) = su * vp + c * vq;
                }
                // Rows: row_p' = c row_p - su row_q ; row_q' = conj(su) row_p + c row_q.
                for (std::size_t r = 0; r < n; ++r) {
                    const cd wp = w(p, r), wq = w(q, r);
                    w(p, r) = c * wp - su * wq;
                    w(q, r) = std::conj(su) * wp + c * wq;
                }
                w(p, q) = 0.0;
                w(q, p) = 0.0;
                w(p, p) = cd{w(p, p).real(), 0.0};
                w(q, q) = cd{w(q, q).real(), 0.0};
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

    HermitianSpectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = w(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    normalize_column_phases(out.eigenvectors);
    return out;
}

std::vector<cd> eigenvector_column(const HermitianSpectrum& s, std::size_t i) {
    const std::size_t n = s.eigenvectors.dim();
    if (i >= n) throw IndexOutOfRange("eigenvector_column: index out of range");
    std::vector<cd> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = s.eigenvectors(r, i);
    return v;
}

BandProjector lowest_band_projector(const ComplexMatrix& a, double gap_tol) {
    const HermitianSpectrum s = eigh(a);
    const std::size_t n = a.dim();
    if (n < 2) throw DimensionMismatch("lowest_band_projector: need dimension >= 2");
    const double gap = s.eigenvalues[1] - s.eigenvalues[0];
    if (gap <= gap_tol)
        throw DegenerateGroundState("lowest_band_projector: gap " + std::to_string(gap) +
                                    " below tolerance");
    return BandProjector{outer_projector(eigenvector_column(s, 0)), gap};
}

}  // namespace phaseatlas::numkernel
