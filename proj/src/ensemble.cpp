#include "phaseatlas/ensemble.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "phaseatlas/numkernel.hpp"

namespace phaseatlas::ensemble {

using numkernel::ComplexMatrix;

void MeasureOnGrid::validate(double tol) const {
    if (weights.size() != grid.num_points())
        throw DimensionMismatch("measure: weight count does not match grid");
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) throw InputError("measure: weights must be >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > tol)
        throw InputError("measure: weights sum to " + std::to_string(sum) + ", not 1");
}

MeasureOnGrid MeasureOnGrid::uniform(const ParameterGrid& grid) {
    MeasureOnGrid mu{grid, std::vector<double>(grid.num_points(),
                                              1.0 / static_cast<double>(grid.num_points()))};
    return mu;
}

MeasureOnGrid MeasureOnGrid::delta(const ParameterGrid& grid, const configspace::MultiIndex& at) {
    MeasureOnGrid mu{grid, std::vector<double>(grid.num_points(), 0.0)};
    mu.weights[grid.flat_index(at)] = 1.0;
    return mu;
}

namespace {

// Nearest grid index of an angle along one coordinate.
std::size_t nearest_index(double angle, std::size_t n) {
    const double x = angle * static_cast<double>(n) / 6.283185307179586476925286766559;
    const long long r = std::llround(x);
    return static_cast<std::size_t>(((r % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                    static_cast<long long>(n));
}

}  // namespace

EnsembleValue ensemble_eval(const MeasureOnGrid& mu, const GeneralConfiguration& f,
                            const Observable& a, const EnsembleOptions& opts) {
    mu.validate();
    a.validate();
    if (!(mu.grid == f.grid) || !(mu.grid == a.grid))
        throw GridMismatch("ensemble_eval: measure, configuration and observable grids differ");
    if (f.fiber_dim != a.n)
        throw DimensionMismatch("ensemble_eval: fiber dimensions differ");

    const bool localizable = configspace::is_localizable(f);
    if (!localizable && !opts.general)
        throw NotLocalizable("ensemble_eval: configuration is not a section; rerun with the "
                             "permissive (general) mode to evaluate through the base map");

    const std::size_t d = f.grid.dim();
    cd total{0.0, 0.0};
    for (std::size_t flat = 0; flat < f.grid.num_points(); ++flat) {
        const double w = mu.weights[flat];
        if (w == 0.0) continue;
        std::size_t sample = flat;
        if (!localizable) {
            configspace::MultiIndex k(d);
            for (std::size_t i = 0; i < d; ++i)
                k[i] = nearest_index(f.base_angle(flat, i), f.grid.sizes()[i]);
            sample = f.grid.flat_index(k);
        }
        const ComplexMatrix p = f.fiber_projector(flat);
        total += w * numkernel::trace_product(p, a.at(sample));
    }
    return EnsembleValue{total, !localizable};
}

PathCertifyReport path_equivalence_certify(const Homotopy& phi, const MeasureOnGrid& mu,
                                           const std::vector<Observable>& observables) {
    if (phi.frames.size() < 2) throw InputError("path_equivalence_certify: empty homotopy");
    for (std::size_t j = 0; j < phi.frames.size(); ++j) {
        if (!configspace::is_localizable(phi.frames[j]))
            throw NotLocalizable("path_equivalence_certify: frame " + std::to_string(j) +
                                 " is not localizable");
        if (!configspace::admissibility_check(phi.frames[j]).admissible)
            throw PreconditionError("path_equivalence_certify: frame " + std::to_string(j) +
                                    " fails admissibility");
    }

    const GeneralConfiguration& first = phi.frames.front();
    const GeneralConfiguration& last = phi.frames.back();
    const std::size_t base_steps = phi.steps();

    PathCertifyReport report;
    for (std::size_t level = 0; level < 3; ++level) {
        const std::size_t steps = base_steps << level;
        const Homotopy h = (level == 0 && steps == base_steps)
                               ? phi
                               : configspace::homotopy_interpolate(first, last, steps);
        PathCertifyLevel lv;
        lv.steps = steps;
        lv.max_jump = 0.0;
        for (const Observable& a : observables) {
            std::vector<cd> values(h.frames.size());
            for (std::size_t j = 0; j < h.frames.size(); ++j)
                values[j] = ensemble_eval(mu, h.frames[j], a).value;
            double mj = 0.0;
            for (std::size_t j = 0; j + 1 < values.size(); ++j)
                mj = std::max(mj, std::abs(values[j + 1] - values[j]));
            lv.per_observable.push_back(mj);
            lv.max_jump = std::max(lv.max_jump, mj);
        }
        report.trend.push_back(std::move(lv));
    }
    return report;
}

namespace {

using nlohmann::json;

ParameterGrid grid_from_json(const json& j) {
    return ParameterGrid(j.at("sizes").get<std::vector<std::size_t>>());
}

}  // namespace

MeasureOnGrid read_measure(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("measure: invalid JSON: ") + e.what());
    }
    try {
        MeasureOnGrid mu;
        mu.grid = grid_from_json(j);
        mu.weights = j.at("weights").get<std::vector<double>>();
        if (mu.weights.size() != mu.grid.num_points())
            throw InputError("measure: weight count does not match grid");
        double sum = 0.0;
        for (double w : mu.weights) {
            if (!std::isfinite(w) || w < 0.0) throw InputError("measure: weights must be >= 0");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-6)
            throw InputError("measure: weights sum to " + std::to_string(sum) +
                             ", outside the normalizable window");
        for (double& w : mu.weights) w /= sum;
        return mu;
    } catch (const json::exception& e) {
        throw InputError(std::string("measure: schema error: ") + e.what());
    }
}

MeasureOnGrid read_measure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open measure file: " + path);
    return read_measure(in);
}

void write_measure_file(const MeasureOnGrid& mu, const std::string& path) {
    json j;
    j["sizes"] = mu.grid.sizes();
    j["weights"] = mu.weights;
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << j.dump(1) << "\n";
}

Observable read_observable(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("observable: invalid JSON: ") + e.what());
    }
    try {
        Observable a;
        a.grid = grid_from_json(j);
        a.n = j.at("n").get<std::size_t>();
        const json& mats = j.at("matrices");
        if (!mats.is_array() || mats.size() != a.grid.num_points())
            throw InputError("observable: matrix count does not match grid");
        a.values.reserve(mats.size());
        for (const json& mj : mats) {
            if (!mj.is_array() || mj.size() != a.n)
                throw InputError("observable: matrix has wrong row count");
            ComplexMatrix m(a.n);
            for (std::size_t r = 0; r < a.n; ++r) {
                const json& row = mj[r];
                if (!row.is_array() || row.size() != a.n)
                    throw InputError("observable: matrix row has wrong length");
                for (std::size_t c = 0; c < a.n; ++c) {
                    const json& z = row[c];
                    if (!z.is_array() || z.size() != 2)
                        throw InputError("observable: entry must be [re, im]");
                    m(r, c) = cd{z[0].get<double>(), z[1].get<double>()};
                }
            }
            a.values.push_back(std::move(m));
        }
        a.validate();
        return a;
    } catch (const json::exception& e) {
        throw InputError(std::string("observable: schema error: ") + e.what());
    }
}

Observable read_observable_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open observable file: " + path);
    return read_observable(in);
}

void write_observable_file(const Observable& a, const std::string& path) {
    json j;
    j["sizes"] = a.grid.sizes();
    j["n"] = a.n;
    json mats = json::array();
    for (const ComplexMatrix& m : a.values) {
        json mj = json::array();
        for (std::size_t r = 0; r < a.n; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < a.n; ++c)
                row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
            mj.push_back(std::move(row));
        }
        mats.push_back(std::move(mj));
    }
    j["matrices"] = std::move(mats);
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << j.dump(1) << "\n";
}

Observable identity_observable(const ParameterGrid& grid, std::size_t n) {
    Observable a;
    a.grid = grid;
    a.n = n;
    a.values.assign(grid.num_points(), ComplexMatrix::identity(n));
    return a;
}

}  // namespace phaseatlas::ensemble
