#include "phaseatlas/configspace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "phaseatlas/kernels.hpp"

namespace phaseatlas::configspace {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double reduce_angle(double x) {
    double r = std::remainder(x, kTwoPi);
    if (r <= -3.1415926535897932384626433832795
        || r > 3.1415926535897932384626433832795) {
        // remainder keeps |r| <= pi; fold the closed end onto +pi.
        r = 3.1415926535897932384626433832795;
    }
    return r;
}

double wrap_angle(double x) {
    double w = std::fmod(x, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

ParameterGrid::ParameterGrid(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty() || sizes_.size() > 3)
        throw InputError("ParameterGrid: torus dimension must be 1, 2 or 3");
    for (std::size_t n : sizes_)
        if (n < 4) throw InputError("ParameterGrid: every size must be >= 4");
    strides_.assign(sizes_.size(), 1);
    for (std::size_t i = sizes_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * sizes_[i];
    total_ = strides_[0] * sizes_[0];
}

std::size_t ParameterGrid::flat_index(const MultiIndex& k) const {
    if (k.size() != sizes_.size()) throw PointOutsideGrid("grid point has wrong dimension");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] >= sizes_[i]) throw PointOutsideGrid("grid index out of range");
        flat += k[i] * strides_[i];
    }
    return flat;
}

MultiIndex ParameterGrid::unflatten(std::size_t flat) const {
    MultiIndex k(sizes_.size());
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        k[i] = flat / strides_[i];
        flat %= strides_[i];
    }
    return k;
}

std::size_t ParameterGrid::neighbor(std::size_t flat, std::size_t direction) const {
    const std::size_t ki = (flat / strides_[direction]) % sizes_[direction];
    if (ki + 1 == sizes_[direction])
        return flat - ki * strides_[direction];
    return flat + strides_[direction];
}

double ParameterGrid::angle(std::size_t coordinate, std::size_t k) const {
    return kTwoPi * static_cast<double>(k) / static_cast<double>(sizes_[coordinate]);
}

std::vector<double> ParameterGrid::angles(const MultiIndex& k) const {
    std::vector<double> a(sizes_.size());
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (k[i] >= sizes_[i]) throw PointOutsideGrid("grid index out of range");
        a[i] = angle(i, k[i]);
    }
    return a;
}

void OperatorField::validate() const {
    if (values.size() != grid.num_points())
        throw DimensionMismatch("OperatorField: value count does not match grid");
    for (const ComplexMatrix& m : values) {
        if (m.dim() != n) throw DimensionMismatch("OperatorField: inconsistent fiber dimension");
        if (!m.finite()) throw InputError("OperatorField: non-finite entries");
    }
}

ComplexMatrix GeneralConfiguration::fiber_projector(std::size_t flat) const {
    std::vector<cd> v(fiber(flat), fiber(flat) + fiber_dim);
    return numkernel::outer_projector(v);
}

void GeneralConfiguration::validate(double unit_tol) const {
    const std::size_t p = grid.num_points();
    const std::size_t d = grid.dim();
    if (base.size() != p * d) throw DimensionMismatch("configuration: base map size mismatch");
    if (fibers.size() != p * fiber_dim)
        throw DimensionMismatch("configuration: fiber array size mismatch");
    for (double a : base) {
        if (!std::isfinite(a) || a < 0.0 || a >= kTwoPi)
            throw InputError("configuration: base angle outside [0, 2*pi)");
    }
    for (std::size_t k = 0; k < p; ++k) {
        const cd* v = fiber(k);
        const double nrm = std::sqrt(kernels::cdot(v, v, fiber_dim).real());
        if (!std::isfinite(nrm) || std::abs(nrm - 1.0) > unit_tol)
            throw InputError("configuration: fiber vector at point " +
                             format_point(grid.unflatten(k)) + " is not a unit vector");
    }
}

void set_identity_base(GeneralConfiguration& f) {
    const std::size_t d = f.grid.dim();
    f.base.resize(f.grid.num_points() * d);
    for (std::size_t flat = 0; flat < f.grid.num_points(); ++flat) {
        const MultiIndex k = f.grid.unflatten(flat);
        for (std::size_t i = 0; i < d; ++i) f.base[flat * d + i] = f.grid.angle(i, k[i]);
    }
}

bool is_localizable(const GeneralConfiguration& f, double tol) {
    const std::size_t d = f.grid.dim();
    for (std::size_t flat = 0; flat < f.grid.num_points(); ++flat) {
        const MultiIndex k = f.grid.unflatten(flat);
        for (std::size_t i = 0; i < d; ++i) {
            const double diff = reduce_angle(f.base_angle(flat, i) - f.grid.angle(i, k[i]));
            if (std::abs(diff) > tol) return false;
        }
    }
    return true;
}

namespace {

FromHamiltonianResult band_config_impl(const OperatorField& h, std::size_t band, double gap_tol) {
    h.validate();
    if (band >= h.n) throw IndexOutOfRange("band index out of range");
    GeneralConfiguration f;
    f.grid = h.grid;
    f.fiber_dim = h.n;
    f.fibers.resize(h.grid.num_points() * h.n);
    set_identity_base(f);
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t flat = 0; flat < h.grid.num_points(); ++flat) {
        const numkernel::HermitianSpectrum s = numkernel::eigh(h.at(flat));
        double gap = std::numeric_limits<double>::infinity();
        if (band > 0) gap = std::min(gap, s.eigenvalues[band] - s.eigenvalues[band - 1]);
        if (band + 1 < h.n) gap = std::min(gap, s.eigenvalues[band + 1] - s.eigenvalues[band]);
        if (gap <= gap_tol) throw GapClosure(h.grid.unflatten(flat), gap);
        min_gap = std::min(min_gap, gap);
        for (std::size_t r = 0; r < h.n; ++r)
            f.fiber(flat)[r] = s.eigenvectors(r, band);
    }
    return FromHamiltonianResult{std::move(f), min_gap};
}

}  // namespace

FromHamiltonianResult from_hamiltonian(const OperatorField& h, double gap_tol) {
    return band_config_impl(h, 0, gap_tol);
}

FromHamiltonianResult band_configuration(const OperatorField& h, std::size_t band,
                                         double gap_tol) {
    return band_config_impl(h, band, gap_tol);
}

AdmissibilityReport admissibility_check(const GeneralConfiguration& f) {
    const std::size_t d = f.grid.dim();
    AdmissibilityReport rep;
    rep.min_link = 1.0;
    rep.max_base_step = 0.0;
    rep.min_link_at.assign(d, 0);
    rep.min_link_dir = 0;
    rep.max_step_at.assign(d, 0);
    for (std::size_t flat = 0; flat < f.grid.num_points(); ++flat) {
        for (std::size_t dir = 0; dir < d; ++dir) {
            const std::size_t nb = f.grid.neighbor(flat, dir);
            const double link =
                std::abs(kernels::cdot(f.fiber(flat), f.fiber(nb), f.fiber_dim));
            if (link < rep.min_link) {
                rep.min_link = link;
                rep.min_link_at = f.grid.unflatten(flat);
                rep.min_link_dir = dir;
            }
            for (std::size_t i = 0; i < d; ++i) {
                const double step =
                    std::abs(reduce_angle(f.base_angle(nb, i) - f.base_angle(flat, i)));
                if (step > rep.max_base_step) {
                    rep.max_base_step = step;
                    rep.max_step_at = f.grid.unflatten(flat);
                }
            }
        }
    }
    rep.admissible =
        rep.min_link >= kMinLinkThreshold && rep.max_base_step <= kMaxBaseStepThreshold;
    return rep;
}

Homotopy homotopy_interpolate(const GeneralConfiguration& f, const GeneralConfiguration& g,
                              std::size_t steps) {
    if (!(f.grid == g.grid)) throw GridMismatch("homotopy: configurations on different grids");
    if (f.fiber_dim != g.fiber_dim)
        throw DimensionMismatch("homotopy: fiber dimensions differ");
    if (steps == 0) throw InputError("homotopy: need at least one step");

    const std::size_t p = f.grid.num_points();
    const std::size_t n = f.fiber_dim;
    const std::size_t d = f.grid.dim();

    Homotopy h;
    h.t_values.resize(steps + 1);
    h.frames.reserve(steps + 1);
    for (std::size_t j = 0; j <= steps; ++j)
        h.t_values[j] = static_cast<double>(j) / static_cast<double>(steps);

    for (std::size_t j = 0; j <= steps; ++j) {
        if (j == 0) {
            h.frames.push_back(f);
            continue;
        }
        if (j == steps) {
            h.frames.push_back(g);
            continue;
        }
        const double t = h.t_values[j];
        GeneralConfiguration frame;
        frame.grid = f.grid;
        frame.fiber_dim = n;
        frame.base.resize(p * d);
        frame.fibers.resize(p * n);
        for (std::size_t flat = 0; flat < p; ++flat) {
            ComplexMatrix a = f.fiber_projector(flat);
            a *= cd{1.0 - t, 0.0};
            ComplexMatrix b = g.fiber_projector(flat);
            b *= cd{t, 0.0};
            a += b;
            const numkernel::HermitianSpectrum s = numkernel::eigh(a);
            const double top_gap = s.eigenvalues[n - 1] - (n >= 2 ? s.eigenvalues[n - 2] : -1.0);
            if (top_gap < kMidpointDegeneracyTol)
                throw MidpointDegeneracy(f.grid.unflatten(flat), t, top_gap);
            for (std::size_t r = 0; r < n; ++r)
                frame.fiber(flat)[r] = s.eigenvectors(r, n - 1);
            for (std::size_t i = 0; i < d; ++i) {
                const double a0 = f.base_angle(flat, i);
                const double a1 = g.base_angle(flat, i);
                frame.base[flat * d + i] = wrap_angle(a0 + t * reduce_angle(a1 - a0));
            }
        }
        h.frames.push_back(std::move(frame));
    }
    return h;
}

HomotopyValidity validate_homotopy(const Homotopy& h) {
    for (std::size_t j = 0; j < h.frames.size(); ++j) {
        try {
            h.frames[j].validate();
        } catch (const Error& e) {
            return {false, "frame " + std::to_string(j) + ": " + e.what()};
        }
        const AdmissibilityReport rep = admissibility_check(h.frames[j]);
        if (!rep.admissible)
            return {false, "frame " + std::to_string(j) + " fails admissibility (min_link=" +
                               std::to_string(rep.min_link) + ")"};
    }
    for (std::size_t j = 0; j + 1 < h.frames.size(); ++j) {
        const GeneralConfiguration& a = h.frames[j];
        const GeneralConfiguration& b = h.frames[j + 1];
        const std::size_t d = a.grid.dim();
        for (std::size_t flat = 0; flat < a.grid.num_points(); ++flat) {
            const double link =
                std::abs(kernels::cdot(a.fiber(flat), b.fiber(flat), a.fiber_dim));
            if (link < kMinLinkThreshold)
                return {false, "frames " + std::to_string(j) + "->" + std::to_string(j + 1) +
                                   " lose fiber continuity at point " +
                                   format_point(a.grid.unflatten(flat)) +
                                   " (t-link=" + std::to_string(link) + ")"};
            for (std::size_t i = 0; i < d; ++i) {
                const double step =
                    std::abs(reduce_angle(b.base_angle(flat, i) - a.base_angle(flat, i)));
                if (step > kMaxBaseStepThreshold)
                    return {false, "frames " + std::to_string(j) + "->" + std::to_string(j + 1) +
                                       " make a base jump at point " +
                                       format_point(a.grid.unflatten(flat))};
            }
        }
    }
    return {true, ""};
}

namespace {

using nlohmann::json;

json fiber_to_json(const GeneralConfiguration& f) {
    json out = json::array();
    for (std::size_t flat = 0; flat < f.grid.num_points(); ++flat) {
        json v = json::array();
        for (std::size_t r = 0; r < f.fiber_dim; ++r) {
            const cd z = f.fiber(flat)[r];
            v.push_back(json::array({z.real(), z.imag()}));
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

GeneralConfiguration read_configuration(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("configuration: invalid JSON: ") + e.what());
    }
    try {
        const std::size_t d = j.at("d").get<std::size_t>();
        const std::vector<std::size_t> sizes = j.at("sizes").get<std::vector<std::size_t>>();
        if (sizes.size() != d) throw InputError("configuration: sizes do not match d");
        GeneralConfiguration f;
        f.grid = ParameterGrid(sizes);
        f.fiber_dim = j.at("n").get<std::size_t>();
        if (f.fiber_dim == 0) throw InputError("configuration: fiber dimension must be positive");
        const std::size_t p = f.grid.num_points();

        const json& base = j.at("base_map");
        if (base.is_string() && base.get<std::string>() == "identity") {
            set_identity_base(f);
        } else if (base.is_array()) {
            if (base.size() != p) throw InputError("configuration: base_map has wrong length");
            f.base.resize(p * d);
            for (std::size_t flat = 0; flat < p; ++flat) {
                const json& pt = base[flat];
                if (!pt.is_array() || pt.size() != d)
                    throw InputError("configuration: base_map entry has wrong arity");
                for (std::size_t i = 0; i < d; ++i)
                    f.base[flat * d + i] = pt[i].get<double>();
            }
        } else {
            throw InputError("configuration: base_map must be \"identity\" or an array");
        }

        const json& fib = j.at("fiber");
        if (!fib.is_array() || fib.size() != p)
            throw InputError("configuration: fiber has wrong length");
        f.fibers.resize(p * f.fiber_dim);
        for (std::size_t flat = 0; flat < p; ++flat) {
            const json& v = fib[flat];
            if (!v.is_array() || v.size() != f.fiber_dim)
                throw InputError("configuration: fiber entry has wrong arity");
            for (std::size_t r = 0; r < f.fiber_dim; ++r) {
                const json& z = v[r];
                if (!z.is_array() || z.size() != 2)
                    throw InputError("configuration: fiber component must be [re, im]");
                f.fiber(flat)[r] = cd{z[0].get<double>(), z[1].get<double>()};
            }
        }
        f.validate();
        return f;
    } catch (const json::exception& e) {
        throw InputError(std::string("configuration: schema error: ") + e.what());
    }
}

GeneralConfiguration read_configuration_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open configuration file: " + path);
    return read_configuration(in);
}

void write_configuration(const GeneralConfiguration& f, std::ostream& out) {
    json j;
    j["d"] = f.grid.dim();
    j["sizes"] = f.grid.sizes();
    j["n"] = f.fiber_dim;
    if (is_localizable(f)) {
        j["base_map"] = "identity";
    } else {
        json base = json::array();
        for (std::size_t flat = 0; flat < f.grid.num_points(); ++flat) {
            json pt = json::array();
            for (std::size_t i = 0; i < f.grid.dim(); ++i)
                pt.push_back(f.base_angle(flat, i));
            base.push_back(std::move(pt));
        }
        j["base_map"] = std::move(base);
    }
    j["fiber"] = fiber_to_json(f);
    out << j.dump(1) << "\n";
}

void write_configuration_file(const GeneralConfiguration& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    write_configuration(f, out);
}

}  // namespace phaseatlas::configspace
