#pragma once

// Complete phase invariants for configurations over T^d: the degree matrix
// (induced map on the fundamental group, one winding number per coordinate
// pair), and the first Chern numbers of the fiber line bundle computed with
// the lattice link-variable (field-strength) method, which returns an exact
// integer at any admissible discretization.
//
// Sign convention: fixed once by the committed fine-grid oracle run
// (tests/data/chern_oracle.json); see README "Conventions".

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "phaseatlas/configspace.hpp"

namespace phaseatlas::invariants {

using configspace::GeneralConfiguration;

struct PhaseClass {
    std::vector<std::vector<long long>> degree;  // d x d integer matrix
    std::vector<long long> chern;                // (d choose 2), pairs (i,j) i<j lexicographic
    double residual = 0.0;                       // worst integer-rounding residual observed

    friend bool operator==(const PhaseClass& a, const PhaseClass& b) {
        return a.degree == b.degree && a.chern == b.chern;
    }
};

struct WindingResult {
    long long value;
    double residual;
};

// (1/2pi) * sum of adjacent increments reduced to (-pi, pi], over a cyclic
// list of angles.  Throws NonAdmissibleStep if a reduced increment reaches
// pi - 1e-9 in magnitude.
WindingResult winding_number(const std::vector<double>& phases);

struct DegreeResult {
    std::vector<std::vector<long long>> matrix;
    double residual;
};

DegreeResult degree_matrix(const GeneralConfiguration& f);

struct ChernResult {
    long long value;
    double residual;
};

constexpr double kDefaultLinkTol = 1e-6;

// First Chern number of the fiber family restricted to the (i,j) 2-torus
// slice through the remaining coordinates fixed at `fixed` (coordinate order,
// skipping i and j).  For d=2 the defaults select the full torus.
ChernResult chern_number_fhs(const GeneralConfiguration& f, std::size_t i = 0, std::size_t j = 1,
                             const std::vector<std::size_t>& fixed = {},
                             double link_tol = kDefaultLinkTol);

struct ChernVectorResult {
    std::vector<long long> values;
    double residual;
};

// All pairs (i,j), i<j; every transverse slice must yield the same integer.
ChernVectorResult chern_vector(const GeneralConfiguration& f,
                               double link_tol = kDefaultLinkTol);

PhaseClass classify(const GeneralConfiguration& f, double link_tol = kDefaultLinkTol);

bool same_phase(const GeneralConfiguration& f, const GeneralConfiguration& g,
                double link_tol = kDefaultLinkTol);

// Per-plaquette Berry flux on a d=2 configuration (plot data; the column sum
// is 2*pi times the Chern number).
struct CurvatureSample {
    double kx, ky;  // plaquette corner angles
    double flux;
};

std::vector<CurvatureSample> curvature_field(const GeneralConfiguration& f,
                                             double link_tol = kDefaultLinkTol);

std::string phase_class_to_json(const PhaseClass& c);
PhaseClass phase_class_from_json(const std::string& text);

}  // namespace phaseatlas::invariants
