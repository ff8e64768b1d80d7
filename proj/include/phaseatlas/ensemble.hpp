#pragma once

// Statistical ensembles omega_{mu,F}(a) = sum_k w_k Tr(p_k a(k)) on the
// discretized parameter space, and the refinement certificate for the
// path-equivalence of the states attached to homotopic configurations.
// Integration is exact finite summation in row-major grid order.

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "phaseatlas/configspace.hpp"

namespace phaseatlas::ensemble {

using cd = std::complex<double>;
using configspace::GeneralConfiguration;
using configspace::Homotopy;
using configspace::ParameterGrid;
using Observable = configspace::OperatorField;

struct MeasureOnGrid {
    ParameterGrid grid;
    std::vector<double> weights;  // nonnegative, summing to 1 within 1e-12

    void validate(double tol = 1e-12) const;
    static MeasureOnGrid uniform(const ParameterGrid& grid);
    static MeasureOnGrid delta(const ParameterGrid& grid, const configspace::MultiIndex& at);
};

struct EnsembleOptions {
    // Permissive mode: a non-localizable F is accepted and evaluated through
    // its base map (observable sampled at the nearest grid point of f1(k)).
    bool general = false;
};

struct EnsembleValue {
    cd value;
    bool general_path_used = false;  // set when a non-localizable F was accepted
};

EnsembleValue ensemble_eval(const MeasureOnGrid& mu, const GeneralConfiguration& f,
                            const Observable& a, const EnsembleOptions& opts = {});

struct PathCertifyLevel {
    std::size_t steps;                       // t-grid size T
    double max_jump;                         // over observables and adjacent frames
    std::vector<double> per_observable;
};

struct PathCertifyReport {
    std::vector<PathCertifyLevel> trend;  // T, 2T, 4T
};

// Re-generates the homotopy at T, 2T and 4T steps between phi's endpoints and
// reports the largest adjacent-frame jump of omega_{mu,t} per refinement
// level.  Every frame must be localizable and admissible.
PathCertifyReport path_equivalence_certify(const Homotopy& phi, const MeasureOnGrid& mu,
                                           const std::vector<Observable>& observables);

// Measure file (JSON): {"sizes":[...], "weights":[...]} row-major.  Weights
// summing to anything in [1-1e-6, 1+1e-6] are normalized; otherwise an error.
MeasureOnGrid read_measure(std::istream& in);
MeasureOnGrid read_measure_file(const std::string& path);
void write_measure_file(const MeasureOnGrid& mu, const std::string& path);

// Observable file (JSON): {"sizes":[...], "n":..., "matrices":[...]} with one
// n x n matrix of [re, im] entries per grid point, row-major.
Observable read_observable(std::istream& in);
Observable read_observable_file(const std::string& path);
void write_observable_file(const Observable& a, const std::string& path);

// The identity observable on a grid.
Observable identity_observable(const ParameterGrid& grid, std::size_t n);

}  // namespace phaseatlas::ensemble
