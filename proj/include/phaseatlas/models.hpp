#pragma once

// Model zoo: generators of concrete configurations with known invariants.
// Conventions (pinned in tests/data/chern_oracle.json and README):
//   - qwz: h(k) = sin(kx) s1 + sin(ky) s2 + (m + cos kx + cos ky) s3.
//   - hofstadter: Harper matrix in Landau gauge; the first grid angle
//     traverses the magnetic Brillouin zone once (kappa_x = q * k_x).
//   - sphere_wrap(c): qwz at m=1 composed with kx -> c*kx, a degree-c
//     torus-to-sphere family with first Chern number c.

#include <vector>

#include "phaseatlas/configspace.hpp"

namespace phaseatlas::models {

using configspace::GeneralConfiguration;
using configspace::OperatorField;
using configspace::ParameterGrid;

OperatorField qwz(double m, const ParameterGrid& grid);

OperatorField hofstadter(long long p, long long q, const ParameterGrid& grid);

GeneralConfiguration sphere_wrap(long long c, const ParameterGrid& grid);

GeneralConfiguration torus_selfmap(const std::vector<std::vector<long long>>& m,
                                   const ParameterGrid& grid);

}  // namespace phaseatlas::models
