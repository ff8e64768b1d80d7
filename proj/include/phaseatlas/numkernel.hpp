#pragma once

// Small dense complex-matrix substrate.  Fiber dimensions stay <= 64 in
// every shipped model, so everything is plain row-major storage and a
// cyclic complex Jacobi diagonalizer with a fixed sweep order (outputs are
// reproducible bit-for-bit across runs on the same platform).

#include <complex>
#include <cstddef>
#include <vector>

#include "phaseatlas/errors.hpp"

namespace phaseatlas::numkernel {

using cd = std::complex<double>;

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n, cd{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    cd& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cd& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    cd* data() { return a_.data(); }
    const cd* data() const { return a_.data(); }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    double max_abs() const;
    bool finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cd s);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cd s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    std::size_t n_ = 0;
    std::vector<cd> a_;
};

// Max-norm Hermiticity defect ||A - A*||_max.
double hermiticity_defect(const ComplexMatrix& a);

// tr(P * A) via the flattened elementwise contraction sum_ij P_ij A_ji.
cd trace_product(const ComplexMatrix& p, const ComplexMatrix& a);

// Rank-1 projector v v* from a unit vector.
ComplexMatrix outer_projector(const std::vector<cd>& v);

struct HermitianSpectrum {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // orthonormal columns, column i <-> eigenvalue i
};

struct EighOptions {
    double hermiticity_tol = 1e-12;  // relative to ||A||_max
    int max_sweeps = 64;
};

HermitianSpectrum eigh(const ComplexMatrix& a, const EighOptions& opts = {});

std::vector<cd> eigenvector_column(const HermitianSpectrum& s, std::size_t i);

struct BandProjector {
    ComplexMatrix projector;
    double gap;  // lambda_2 - lambda_1
};

constexpr double kDefaultGapTol = 1e-8;

BandProjector lowest_band_projector(const ComplexMatrix& a, double gap_tol = kDefaultGapTol);

}  // namespace phaseatlas::numkernel
