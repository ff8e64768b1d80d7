#include "phaseatlas/models.hpp"

#include <cmath>
#include <numeric>

namespace phaseatlas::models {

using cd = std::complex<double>;
using numkernel::ComplexMatrix;

namespace {

ComplexMatrix pauli_sum(double d1, double d2, double d3) {
    ComplexMatrix h(2);
    h(0, 0) = cd{d3, 0.0};
    h(0, 1) = cd{d1, -d2};
    h(1, 0) = cd{d1, d2};
    h(1, 1) = cd{-d3, 0.0};
    return h;
}

}  // namespace

OperatorField qwz(double m, const ParameterGrid& grid) {
    if (grid.dim() != 2) throw DimensionMismatch("qwz: needs a d=2 grid");
    OperatorField h;
    h.grid = grid;
    h.n = 2;
    h.values.reserve(grid.num_points());
    for (std::size_t flat = 0; flat < grid.num_points(); ++flat) {
        const configspace::MultiIndex k = grid.unflatten(flat);
        const double kx = grid.angle(0, k[0]);
        const double ky = grid.angle(1, k[1]);
        h.values.push_back(
            pauli_sum(std::sin(kx), std::sin(ky), m + std::cos(kx) + std::cos(ky)));
    }
    return h;
}

OperatorField hofstadter(long long p, long long q, const ParameterGrid& grid) {
    if (grid.dim() != 2) throw DimensionMismatch("hofstadter: needs a d=2 grid");
    if (q < 2) throw InputError("hofstadter: q must be >= 2");
    if (std::gcd(p < 0 ? -p : p, q) != 1) throw NotCoprime("hofstadter: gcd(p, q) != 1");
    const std::size_t n = static_cast<std::size_t>(q);
    OperatorField h;
    h.grid = grid;
    h.n = n;
    h.values.reserve(grid.num_points());
    const double flux = 2.0 * 3.1415926535897932384626433832795 * static_cast<double>(p) /
                        static_cast<double>(q);
    for (std::size_t flat = 0; flat < grid.num_points(); ++flat) {
        const configspace::MultiIndex k = grid.unflatten(flat);
        const double kapx = grid.angle(0, k[0]);  // q * k_x: magnetic BZ once
        const double ky = grid.angle(1, k[1]);
        ComplexMatrix m(n);
        for (std::size_t j = 0; j < n; ++j)
            m(j, j) = cd{2.0 * std::cos(ky + flux * static_cast<double>(j)), 0.0};
        for (std::size_t j = 0; j + 1 < n; ++j) {
            m(j, j + 1) += cd{1.0, 0.0};
            m(j + 1, j) += cd{1.0, 0.0};
        }
        m(n - 1, 0) += std::polar(1.0, kapx);
        m(0, n - 1) += std::polar(1.0, -kapx);
        h.values.push_back(std::move(m));
    }
    return h;
}

GeneralConfiguration sphere_wrap(long long c, const ParameterGrid& grid) {
    if (grid.dim() != 2) throw DimensionMismatch("sphere_wrap: needs a d=2 grid");
    const std::size_t mag = static_cast<std::size_t>(c < 0 ? -c : c);
    const std::size_t needed = 8 * (mag + 1);
    if (grid.sizes()[0] < needed || grid.sizes()[1] < needed)
        throw GridTooCoarse("sphere_wrap: grid must be at least " + std::to_string(needed) +
                            " per direction for |c| = " + std::to_string(mag));
    OperatorField h;
    h.grid = grid;
    h.n = 2;
    h.values.reserve(grid.num_points());
    for (std::size_t flat = 0; flat < grid.num_points(); ++flat) {
        const configspace::MultiIndex k = grid.unflatten(flat);
        const double kx = static_cast<double>(c) * grid.angle(0, k[0]);
        const double ky = grid.angle(1, k[1]);
        h.values.push_back(
            pauli_sum(std::sin(kx), std::sin(ky), 1.0 + std::cos(kx) + std::cos(ky)));
    }
    return configspace::from_hamiltonian(h).config;
}

GeneralConfiguration torus_selfmap(const std::vector<std::vector<long long>>& m,
                                   const ParameterGrid& grid) {
    const std::size_t d = grid.dim();
    if (m.size() != d) throw DimensionMismatch("torus_selfmap: matrix must be d x d");
    std::size_t max_row_sum = 0;
    for (const auto& row : m) {
        if (row.size() != d) throw DimensionMismatch("torus_selfmap: matrix must be d x d");
        std::size_t s = 0;
        for (long long e : row) s += static_cast<std::size_t>(e < 0 ? -e : e);
        max_row_sum = std::max(max_row_sum, s);
    }
    const std::size_t needed = 8 * std::max<std::size_t>(max_row_sum, 1);
    for (std::size_t n : grid.sizes())
        if (n < needed)
            throw GridTooCoarse("torus_selfmap: grid must be at least " +
                                std::to_string(needed) + " per direction");

    GeneralConfiguration f;
    f.grid = grid;
    f.fiber_dim = 2;
    f.base.resize(grid.num_points() * d);
    f.fibers.assign(grid.num_points() * 2, cd{0.0, 0.0});
    for (std::size_t flat = 0; flat < grid.num_points(); ++flat) {
        const configspace::MultiIndex k = grid.unflatten(flat);
        for (std::size_t i = 0; i < d; ++i) {
            double angle = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                angle += static_cast<double>(m[i][j]) * grid.angle(j, k[j]);
            f.base[flat * d + i] = configspace::wrap_angle(angle);
        }
        f.fiber(flat)[0] = cd{1.0, 0.0};
    }
    return f;
}

}  // namespace phaseatlas::models
