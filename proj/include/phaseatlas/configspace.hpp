#pragma once

// Discretized torus parameter spaces and configurations F: X -> X x P(fiber),
// stored as a base map (d angles per grid point) plus a unit fiber vector per
// grid point.  The fiber phase is a gauge choice; nothing exported may depend
// on it.

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "phaseatlas/numkernel.hpp"

namespace phaseatlas::configspace {

using cd = std::complex<double>;
using numkernel::ComplexMatrix;
using MultiIndex = std::vector<std::size_t>;

// Angle reduced to (-pi, pi]; exactly -pi maps to +pi.
double reduce_angle(double x);
// Angle wrapped to [0, 2*pi).
double wrap_angle(double x);

class ParameterGrid {
  public:
    ParameterGrid() = default;
    explicit ParameterGrid(std::vector<std::size_t> sizes);

    std::size_t dim() const { return sizes_.size(); }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::size_t num_points() const { return total_; }

    // Row-major flattening, last coordinate fastest.
    std::size_t flat_index(const MultiIndex& k) const;
    MultiIndex unflatten(std::size_t flat) const;
    std::size_t neighbor(std::size_t flat, std::size_t direction) const;

    double angle(std::size_t coordinate, std::size_t k) const;
    std::vector<double> angles(const MultiIndex& k) const;

    bool operator==(const ParameterGrid& o) const { return sizes_ == o.sizes_; }

  private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> strides_;
    std::size_t total_ = 0;
};

// Grid-indexed family of square matrices (a discretized element of C(X) (x) M_n).
struct OperatorField {
    ParameterGrid grid;
    std::size_t n = 0;
    std::vector<ComplexMatrix> values;  // one per flat point

    const ComplexMatrix& at(std::size_t flat) const { return values[flat]; }
    void validate() const;
};

// Grid-indexed scalar function.
struct ScalarField {
    ParameterGrid grid;
    std::vector<cd> values;
};

struct GeneralConfiguration {
    ParameterGrid grid;
    std::size_t fiber_dim = 0;
    std::vector<double> base;  // num_points * d angles in [0, 2*pi)
    std::vector<cd> fibers;    // num_points * fiber_dim, unit vectors

    double base_angle(std::size_t flat, std::size_t coordinate) const {
        return base[flat * grid.dim() + coordinate];
    }
    const cd* fiber(std::size_t flat) const { return fibers.data() + flat * fiber_dim; }
    cd* fiber(std::size_t flat) { return fibers.data() + flat * fiber_dim; }
    ComplexMatrix fiber_projector(std::size_t flat) const;

    // Throws InputError if a fiber is not unit within tol or angles leave [0, 2*pi).
    void validate(double unit_tol = 1e-10) const;
};

// Fills the base map with the exact grid angles (the identity section).
void set_identity_base(GeneralConfiguration& f);

bool is_localizable(const GeneralConfiguration& f, double tol = 1e-12);

struct FromHamiltonianResult {
    GeneralConfiguration config;
    double min_gap;
};

FromHamiltonianResult from_hamiltonian(const OperatorField& h,
                                       double gap_tol = numkernel::kDefaultGapTol);

// Same, for an arbitrary band index (gap = distance to the nearest other band).
FromHamiltonianResult band_configuration(const OperatorField& h, std::size_t band,
                                         double gap_tol = numkernel::kDefaultGapTol);

constexpr double kMinLinkThreshold = 0.1;
inline constexpr double kMaxBaseStepThreshold = 1.5707963267948966;  // pi/2

struct AdmissibilityReport {
    double min_link;
    double max_base_step;
    bool admissible;
    MultiIndex min_link_at;   // grid point of the weakest fiber link
    std::size_t min_link_dir; // its direction
    MultiIndex max_step_at;   // grid point of the largest base increment
};

AdmissibilityReport admissibility_check(const GeneralConfiguration& f);

struct Homotopy {
    std::vector<double> t_values;  // T+1 equispaced values in [0,1]
    std::vector<GeneralConfiguration> frames;

    std::size_t steps() const { return t_values.empty() ? 0 : t_values.size() - 1; }
};

constexpr double kMidpointDegeneracyTol = 1e-6;

Homotopy homotopy_interpolate(const GeneralConfiguration& f, const GeneralConfiguration& g,
                              std::size_t steps);

// Discrete validity of a deformation: every frame passes rank-1 and
// admissibility checks, and adjacent frames stay admissibly linked in t
// (fiber overlap >= the link threshold, base step <= pi/2).  Per-frame checks
// alone provably miss class jumps that fall between two t samples.
struct HomotopyValidity {
    bool valid;
    std::string reason;  // empty when valid
};

HomotopyValidity validate_homotopy(const Homotopy& h);

// Configuration file format (JSON, UTF-8); see README for the schema.
GeneralConfiguration read_configuration(std::istream& in);
GeneralConfiguration read_configuration_file(const std::string& path);
void write_configuration(const GeneralConfiguration& f, std::ostream& out);
void write_configuration_file(const GeneralConfiguration& f, const std::string& path);

}  // namespace phaseatlas::configspace
