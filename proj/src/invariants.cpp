#include "phaseatlas/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include <json.hpp>

#include "phaseatlas/kernels.hpp"

namespace phaseatlas::invariants {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kStepMargin = 1e-9;

using configspace::MultiIndex;
using configspace::ParameterGrid;
using configspace::reduce_angle;

double principal_arg(std::complex<double> z) {
    double a = std::arg(z);
    if (a <= -kPi) a = kPi;
    return a;
}

}  // namespace

WindingResult winding_number(const std::vector<double>& phases) {
    if (phases.size() < 2) throw InputError("winding_number: need at least two phases");
    double sum = 0.0;
    const std::size_t n = phases.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double inc = reduce_angle(phases[(k + 1) % n] - phases[k]);
        if (std::abs(inc) >= kPi - kStepMargin)
            throw NonAdmissibleStep("winding_number: phase increment " + std::to_string(inc) +
                                    " at step " + std::to_string(k) +
                                    " too close to the branch cut");
        sum += inc;
    }
    const double w = sum / kTwoPi;
    const long long v = std::llround(w);
    return WindingResult{v, std::abs(w - static_cast<double>(v))};
}

DegreeResult degree_matrix(const GeneralConfiguration& f) {
    const ParameterGrid& grid = f.grid;
    const std::size_t d = grid.dim();
    DegreeResult out;
    out.matrix.assign(d, std::vector<long long>(d, 0));
    out.residual = 0.0;

    for (std::size_t dir = 0; dir < d; ++dir) {
        const std::size_t cycle_len = grid.sizes()[dir];
        // Enumerate every cycle parallel to direction `dir`: anchors are the
        // points with k_dir = 0.
        bool have_value = false;
        std::vector<long long> reference(d, 0);
        for (std::size_t flat = 0; flat < grid.num_points(); ++flat) {
            const MultiIndex k = grid.unflatten(flat);
            if (k[dir] != 0) continue;
            std::vector<std::vector<double>> phases(d);
            std::size_t cur = flat;
            for (std::size_t step = 0; step < cycle_len; ++step) {
                for (std::size_t i = 0; i < d; ++i)
                    phases[i].push_back(f.base_angle(cur, i));
                cur = grid.neighbor(cur, dir);
            }
            for (std::size_t i = 0; i < d; ++i) {
                const WindingResult w = winding_number(phases[i]);
                out.residual = std::max(out.residual, w.residual);
                if (!have_value) {
                    reference[i] = w.value;
                } else if (w.value != reference[i]) {
                    throw InconsistentWinding(
                        "degree_matrix: parallel cycles along direction " + std::to_string(dir) +
                        " disagree for coordinate " + std::to_string(i) + " (" +
                        std::to_string(reference[i]) + " vs " + std::to_string(w.value) +
                        " at anchor " + format_point(k) + ")");
                }
            }
            have_value = true;
        }
        for (std::size_t i = 0; i < d; ++i) out.matrix[i][dir] = reference[i];
    }
    return out;
}

namespace {

// Slice accessor: multi-index with coordinates i,j running and the rest
// frozen.  `fixed` lists the frozen values in coordinate order.
struct Slice {
    const GeneralConfiguration& f;
    std::size_t ci, cj;
    MultiIndex frozen;  // full multi-index template

    Slice(const GeneralConfiguration& f, std::size_t i, std::size_t j,
          const std::vector<std::size_t>& fixed)
        : f(f), ci(i), cj(j) {
        const std::size_t d = f.grid.dim();
        if (d < 2) throw DimensionMismatch("chern_number_fhs: need torus dimension >= 2");
        if (i >= j || j >= d) throw InputError("chern_number_fhs: bad coordinate pair");
        if (fixed.size() != d - 2)
            throw InputError("chern_number_fhs: fixed coordinates have wrong arity");
        frozen.assign(d, 0);
        std::size_t t = 0;
        for (std::size_t c = 0; c < d; ++c) {
            if (c == i || c == j) continue;
            if (fixed[t] >= f.grid.sizes()[c])
                throw PointOutsideGrid("chern_number_fhs: fixed coordinate out of range");
            frozen[c] = fixed[t++];
        }
    }

    std::size_t flat(std::size_t a, std::size_t b) const {
        MultiIndex k = frozen;
        k[ci] = a;
        k[cj] = b;
        return f.grid.flat_index(k);
    }
};

}  // namespace

ChernResult chern_number_fhs(const GeneralConfiguration& f, std::size_t i, std::size_t j,
                             const std::vector<std::size_t>& fixed, double link_tol) {
    const Slice sl(f, i, j, fixed);
    const std::size_t ni = f.grid.sizes()[i];
    const std::size_t nj = f.grid.sizes()[j];
    const std::size_t n = f.fiber_dim;

    // Link variables along the two slice directions.
    std::vector<std::complex<double>> ux(ni * nj), uy(ni * nj);
    for (std::size_t a = 0; a < ni; ++a) {
        for (std::size_t b = 0; b < nj; ++b) {
            const std::size_t at = sl.flat(a, b);
            const std::size_t ax = sl.flat((a + 1) % ni, b);
            const std::size_t ay = sl.flat(a, (b + 1) % nj);
            const std::complex<double> lx = kernels::cdot(f.fiber(at), f.fiber(ax), n);
            const std::complex<double> ly = kernels::cdot(f.fiber(at), f.fiber(ay), n);
            if (std::abs(lx) < link_tol) {
                MultiIndex k = sl.frozen;
                k[sl.ci] = a;
                k[sl.cj] = b;
                throw VanishingLink(k, i, std::abs(lx));
            }
            if (std::abs(ly) < link_tol) {
                MultiIndex k = sl.frozen;
                k[sl.ci] = a;
                k[sl.cj] = b;
                throw VanishingLink(k, j, std::abs(ly));
            }
            ux[a * nj + b] = lx / std::abs(lx);
            uy[a * nj + b] = ly / std::abs(ly);
        }
    }

    // Field strength per plaquette, principal branch; row-major summation
    // order so the reported residual is deterministic.
    double total = 0.0;
    for (std::size_t a = 0; a < ni; ++a) {
        const std::size_t ap = (a + 1) % ni;
        for (std::size_t b = 0; b < nj; ++b) {
            const std::size_t bp = (b + 1) % nj;
            const std::complex<double> plaq = ux[a * nj + b] * uy[ap * nj + b] *
                                              std::conj(ux[a * nj + bp]) *
                                              std::conj(uy[a * nj + b]);
            total += principal_arg(plaq);
        }
    }
    const double c = total / kTwoPi;
    const long long v = std::llround(c);
    return ChernResult{v, std::abs(c - static_cast<double>(v))};
}

ChernVectorResult chern_vector(const GeneralConfiguration& f, double link_tol) {
    const std::size_t d = f.grid.dim();
    ChernVectorResult out;
    out.residual = 0.0;
    if (d < 2) return out;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            // All transverse slices must agree.
            std::vector<std::size_t> others;
            for (std::size_t c = 0; c < d; ++c)
                if (c != i && c != j) others.push_back(c);
            std::size_t n_slices = 1;
            for (std::size_t c : others) n_slices *= f.grid.sizes()[c];
            bool have = false;
            long long value = 0;
            for (std::size_t s = 0; s < n_slices; ++s) {
                std::vector<std::size_t> fixed(others.size());
                std::size_t rem = s;
                for (std::size_t t = others.size(); t-- > 0;) {
                    fixed[t] = rem % f.grid.sizes()[others[t]];
                    rem /= f.grid.sizes()[others[t]];
                }
                const ChernResult c = chern_number_fhs(f, i, j, fixed, link_tol);
                out.residual = std::max(out.residual, c.residual);
                if (!have) {
                    value = c.value;
                    have = true;
                } else if (c.value != value) {
                    throw SliceDisagreement(i, j);
                }
            }
            out.values.push_back(value);
        }
    }
    return out;
}

PhaseClass classify(const GeneralConfiguration& f, double link_tol) {
    const DegreeResult deg = degree_matrix(f);
    const ChernVectorResult ch = chern_vector(f, link_tol);
    PhaseClass out;
    out.degree = deg.matrix;
    out.chern = ch.values;
    out.residual = std::max(deg.residual, ch.residual);
    return out;
}

bool same_phase(const GeneralConfiguration& f, const GeneralConfiguration& g,
                double link_tol) {
    if (f.grid.dim() != g.grid.dim())
        throw DimensionMismatch("same_phase: torus dimensions differ");
    return classify(f, link_tol) == classify(g, link_tol);
}

std::vector<CurvatureSample> curvature_field(const GeneralConfiguration& f, double link_tol) {
    if (f.grid.dim() != 2)
        throw DimensionMismatch("curvature_field: need a d=2 configuration");
    const std::size_t ni = f.grid.sizes()[0];
    const std::size_t nj = f.grid.sizes()[1];
    const std::size_t n = f.fiber_dim;
    std::vector<CurvatureSample> out;
    out.reserve(ni * nj);
    auto link = [&](std::size_t from, std::size_t to, std::size_t dir) {
        const std::complex<double> l = kernels::cdot(f.fiber(from), f.fiber(to), n);
        if (std::abs(l) < link_tol) throw VanishingLink(f.grid.unflatten(from), dir, std::abs(l));
        return l / std::abs(l);
    };
    for (std::size_t a = 0; a < ni; ++a) {
        for (std::size_t b = 0; b < nj; ++b) {
            const std::size_t p00 = f.grid.flat_index({a, b});
            const std::size_t p10 = f.grid.neighbor(p00, 0);
            const std::size_t p01 = f.grid.neighbor(p00, 1);
            const std::complex<double> plaq = link(p00, p10, 0) * link(p10, f.grid.neighbor(p10, 1), 1) *
                                              std::conj(link(p01, f.grid.neighbor(p01, 0), 0)) *
                                              std::conj(link(p00, p01, 1));
            out.push_back(CurvatureSample{f.grid.angle(0, a), f.grid.angle(1, b),
                                          principal_arg(plaq)});
        }
    }
    return out;
}

std::string phase_class_to_json(const PhaseClass& c) {
    nlohmann::json j;
    j["degree"] = c.degree;
    j["chern"] = c.chern;
    j["residual"] = c.residual;
    return j.dump();
}

PhaseClass phase_class_from_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        PhaseClass c;
        c.degree = j.at("degree").get<std::vector<std::vector<long long>>>();
        c.chern = j.at("chern").get<std::vector<long long>>();
        c.residual = j.value("residual", 0.0);
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("phase class: invalid JSON: ") + e.what());
    }
}

}  // namespace phaseatlas::invariants
