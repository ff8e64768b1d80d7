// phaseatlas: generate model configurations, classify their topological
// phase, compute cohomology / K-theory groups of CW complexes, evaluate
// statistical ensembles, and run state-space probes.
//
// Exit codes: 0 success, 1 parse/IO/validation, 2 numerical precondition,
// 3 integer-rounding residual breach.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phaseatlas/cohomology.hpp"
#include "phaseatlas/configspace.hpp"
#include "phaseatlas/ensemble.hpp"
#include "phaseatlas/errors.hpp"
#include "phaseatlas/invariants.hpp"
#include "phaseatlas/kernels.hpp"
#include "phaseatlas/models.hpp"
#include "phaseatlas/numkernel.hpp"
#include "phaseatlas/states.hpp"

namespace pa = phaseatlas;
using json = nlohmann::json;
using pa::configspace::GeneralConfiguration;
using pa::configspace::ParameterGrid;

namespace {

constexpr double kResidualGate = 1e-6;

struct GlobalOptions {
    double tol_gap = pa::numkernel::kDefaultGapTol;
    double tol_link = pa::invariants::kDefaultLinkTol;
    bool general = false;
};

// Exit code for a residual too large to trust the rounded integer.
struct ResidualBreach : pa::Error {
    explicit ResidualBreach(double r)
        : pa::Error("integer rounding residual " + std::to_string(r) +
                    " exceeds the reporting gate " + std::to_string(kResidualGate)) {}
};

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pa::InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string inputs_digest(const std::vector<std::string>& paths) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const std::string& p : paths) h = fnv1a(read_file_bytes(p), h);
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

json base_report(const std::string& command, const std::vector<std::string>& input_files) {
    json r;
    r["command"] = command;
    r["inputs_digest"] = input_files.empty() ? "" : inputs_digest(input_files);
    r["results"] = json::object();
    r["residuals"] = json::object();
    r["warnings"] = json::array();
    return r;
}

void emit_report(const json& r) { std::cout << r.dump(1) << "\n"; }

ParameterGrid parse_grid(const std::string& spec) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, 'x')) {
        try {
            const long long v = std::stoll(tok);
            if (v < 1) throw pa::InputError("grid sizes must be positive");
            sizes.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw pa::InputError("bad grid spec '" + spec + "' (expected NxN[xN])");
        }
    }
    return ParameterGrid(sizes);
}

std::vector<std::vector<long long>> parse_int_matrix(const std::string& spec) {
    std::vector<std::vector<long long>> m;
    std::stringstream rows(spec);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<long long> r;
        std::stringstream cols(row);
        std::string c;
        while (std::getline(cols, c, ',')) {
            try {
                r.push_back(std::stoll(c));
            } catch (const std::exception&) {
                throw pa::InputError("bad matrix entry '" + c + "'");
            }
        }
        m.push_back(std::move(r));
    }
    return m;
}

std::vector<double> parse_double_list(const std::string& spec) {
    std::vector<double> v;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw pa::InputError("bad number '" + tok + "'");
        }
    }
    return v;
}

pa::cohomology::CWComplex load_cw_source(const std::string& src) {
    if (src.rfind("torus:", 0) == 0) {
        const long long d = std::stoll(src.substr(6));
        if (d < 1) throw pa::InputError("torus dimension must be >= 1");
        return pa::cohomology::torus_cw(static_cast<std::size_t>(d));
    }
    if (src.rfind("sphere:", 0) == 0) {
        const long long n = std::stoll(src.substr(7));
        if (n < 1) throw pa::InputError("sphere dimension must be >= 1");
        return pa::cohomology::sphere_cw(static_cast<std::size_t>(n));
    }
    std::ifstream in(src);
    if (!in) throw pa::InputError("cannot open complex file: " + src);
    return pa::cohomology::parse_cw(in);
}

json group_json(const pa::cohomology::AbelianGroup& g) {
    json j;
    j["free_rank"] = g.free_rank;
    json t = json::array();
    for (const auto& d : g.torsion) t.push_back(d.str());
    j["torsion"] = std::move(t);
    j["group"] = pa::cohomology::group_to_string(g);
    return j;
}

json admissibility_json(const pa::configspace::AdmissibilityReport& rep) {
    json j;
    j["min_link"] = rep.min_link;
    j["max_base_step"] = rep.max_base_step;
    j["admissible"] = rep.admissible;
    return j;
}

json phase_class_json(const pa::invariants::PhaseClass& c) {
    json j;
    j["degree"] = c.degree;
    j["chern"] = c.chern;
    j["residual"] = c.residual;
    return j;
}

// Classify with the admissibility and residual gates of the CLI contract.
pa::invariants::PhaseClass classify_gated(const GeneralConfiguration& f,
                                          const GlobalOptions& g) {
    const auto rep = pa::configspace::admissibility_check(f);
    if (!rep.admissible) {
        std::ostringstream os;
        os << "configuration fails admissibility: ";
        if (rep.min_link < pa::configspace::kMinLinkThreshold)
            os << "min fiber link " << rep.min_link << " at grid point "
               << pa::format_point(rep.min_link_at) << " direction " << rep.min_link_dir;
        else
            os << "base step " << rep.max_base_step << " at grid point "
               << pa::format_point(rep.max_step_at);
        throw pa::PreconditionError(os.str());
    }
    const auto cls = pa::invariants::classify(f, g.tol_link);
    if (cls.residual > kResidualGate) throw ResidualBreach(cls.residual);
    return cls;
}

int cmd_model(const std::string& name, const std::string& grid_spec, double m, long long p,
              long long q, long long c, const std::string& mat_spec, long long band,
              const std::string& out, const std::string& obs_out, const GlobalOptions& g) {
    const ParameterGrid grid = parse_grid(grid_spec);
    json report = base_report("model", {});
    GeneralConfiguration config;
    double min_gap = -1.0;

    pa::configspace::OperatorField h;
    if (name == "qwz" || name == "hofstadter") {
        if (name == "qwz") {
            h = pa::models::qwz(m, grid);
        } else {
            h = pa::models::hofstadter(p, q, grid);
        }
        const auto r = band < 0 ? pa::configspace::from_hamiltonian(h, g.tol_gap)
                                : pa::configspace::band_configuration(
                                      h, static_cast<std::size_t>(band), g.tol_gap);
        config = r.config;
        min_gap = r.min_gap;
    } else if (name == "sphere-wrap") {
        config = pa::models::sphere_wrap(c, grid);
        if (!obs_out.empty())
            throw pa::InputError("--observable-out requires a Hamiltonian model");
    } else if (name == "torus-selfmap") {
        config = pa::models::torus_selfmap(parse_int_matrix(mat_spec), grid);
        if (!obs_out.empty())
            throw pa::InputError("--observable-out requires a Hamiltonian model");
    } else {
        throw pa::InputError("unknown model '" + name +
                             "' (expected qwz|hofstadter|sphere-wrap|torus-selfmap)");
    }

    if (out.empty()) throw pa::InputError("model: missing output file (-o)");
    pa::configspace::write_configuration_file(config, out);
    if (!obs_out.empty()) pa::ensemble::write_observable_file(h, obs_out);

    report["results"]["model"] = name;
    report["results"]["sizes"] = grid.sizes();
    report["results"]["fiber_dim"] = config.fiber_dim;
    report["results"]["localizable"] = pa::configspace::is_localizable(config);
    if (min_gap >= 0.0) report["results"]["min_gap"] = min_gap;
    report["results"]["admissibility"] = admissibility_json(pa::configspace::admissibility_check(config));
    report["results"]["config_file"] = out;
    if (!obs_out.empty()) report["results"]["observable_file"] = obs_out;
    emit_report(report);
    return 0;
}

int cmd_classify(const std::string& file, const GlobalOptions& g) {
    const GeneralConfiguration f = pa::configspace::read_configuration_file(file);
    json report = base_report("classify", {file});
    const auto cls = classify_gated(f, g);
    report["results"]["phase_class"] = phase_class_json(cls);
    report["results"]["localizable"] = pa::configspace::is_localizable(f);
    report["results"]["admissibility"] = admissibility_json(pa::configspace::admissibility_check(f));
    report["residuals"]["integer_rounding"] = cls.residual;
    emit_report(report);
    return 0;
}

int cmd_compare(const std::string& file_f, const std::string& file_g, const GlobalOptions& g) {
    const GeneralConfiguration f = pa::configspace::read_configuration_file(file_f);
    const GeneralConfiguration h = pa::configspace::read_configuration_file(file_g);
    json report = base_report("compare", {file_f, file_g});
    const auto cf = classify_gated(f, g);
    const auto ch = classify_gated(h, g);
    report["results"]["first"] = phase_class_json(cf);
    report["results"]["second"] = phase_class_json(ch);
    report["results"]["same_phase"] = (cf == ch);
    report["residuals"]["integer_rounding"] = std::max(cf.residual, ch.residual);
    emit_report(report);
    return 0;
}

int cmd_chern(const std::string& file, const GlobalOptions& g) {
    const GeneralConfiguration f = pa::configspace::read_configuration_file(file);
    json report = base_report("chern", {file});
    const auto ch = pa::invariants::chern_vector(f, g.tol_link);
    if (ch.residual > kResidualGate) throw ResidualBreach(ch.residual);
    report["results"]["chern"] = ch.values;
    report["residuals"]["integer_rounding"] = ch.residual;
    emit_report(report);
    return 0;
}

int cmd_degree(const std::string& file) {
    const GeneralConfiguration f = pa::configspace::read_configuration_file(file);
    json report = base_report("degree", {file});
    const auto deg = pa::invariants::degree_matrix(f);
    if (deg.residual > kResidualGate) throw ResidualBreach(deg.residual);
    report["results"]["degree"] = deg.matrix;
    report["residuals"]["integer_rounding"] = deg.residual;
    emit_report(report);
    return 0;
}

int cmd_cohomology(const std::string& src, long long k) {
    const auto x = load_cw_source(src);
    const bool from_file = src.rfind("torus:", 0) != 0 && src.rfind("sphere:", 0) != 0;
    json report = base_report("cohomology", from_file ? std::vector<std::string>{src}
                                                      : std::vector<std::string>{});
    const auto g = pa::cohomology::cohomology_group(x, k);
    report["results"]["source"] = src;
    report["results"]["k"] = k;
    report["results"]["cohomology"] = group_json(g);
    emit_report(report);
    return 0;
}

int cmd_k0(const std::string& src) {
    const auto x = load_cw_source(src);
    const bool from_file = src.rfind("torus:", 0) != 0 && src.rfind("sphere:", 0) != 0;
    json report = base_report("k0", from_file ? std::vector<std::string>{src}
                                              : std::vector<std::string>{});
    const auto g = pa::cohomology::reduced_k0(x);
    report["results"]["source"] = src;
    report["results"]["reduced_k0"] = group_json(g);
    emit_report(report);
    return 0;
}

int cmd_ensemble(const std::string& cfg, const std::string& measure, const std::string& obs,
                 const GlobalOptions& g) {
    const GeneralConfiguration f = pa::configspace::read_configuration_file(cfg);
    const auto mu = pa::ensemble::read_measure_file(measure);
    pa::ensemble::Observable a;
    if (obs == "identity") {
        a = pa::ensemble::identity_observable(f.grid, f.fiber_dim);
    } else {
        a = pa::ensemble::read_observable_file(obs);
    }
    json report = base_report("ensemble", obs == "identity"
                                              ? std::vector<std::string>{cfg, measure}
                                              : std::vector<std::string>{cfg, measure, obs});
    pa::ensemble::EnsembleOptions opts;
    opts.general = g.general;
    const auto val = pa::ensemble::ensemble_eval(mu, f, a, opts);
    report["results"]["value_re"] = val.value.real();
    report["results"]["value_im"] = val.value.imag();
    if (val.general_path_used)
        report["warnings"].push_back(
            "configuration is not localizable; evaluated through the base map");
    emit_report(report);
    return 0;
}

int cmd_curvature(const std::string& cfg, const std::string& out, const GlobalOptions& g) {
    const GeneralConfiguration f = pa::configspace::read_configuration_file(cfg);
    json report = base_report("curvature", {cfg});
    const auto field = pa::invariants::curvature_field(f, g.tol_link);
    double total = 0.0;
    for (const auto& s : field) total += s.flux;
    const auto ch = pa::invariants::chern_number_fhs(f, 0, 1, {}, g.tol_link);
    if (ch.residual > kResidualGate) throw ResidualBreach(ch.residual);

    std::ostringstream csv;
    csv.precision(17);
    csv << "kx,ky,flux\n";
    for (const auto& s : field) csv << s.kx << "," << s.ky << "," << s.flux << "\n";
    if (out.empty()) throw pa::InputError("curvature: missing output file (-o)");
    std::ofstream os(out);
    if (!os) throw pa::InputError("cannot open output file: " + out);
    os << csv.str();

    report["results"]["chern"] = ch.value;
    report["results"]["flux_sum"] = total;
    report["results"]["csv_file"] = out;
    report["residuals"]["integer_rounding"] = ch.residual;
    emit_report(report);
    return 0;
}

void write_csv(const std::string& out, const std::string& body) {
    if (out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream os(out);
    if (!os) throw pa::InputError("cannot open output file: " + out);
    os << body;
}

int cmd_probe_escape(std::size_t ambient, const std::string& diag_spec, const std::string& out) {
    const std::vector<double> diag = parse_double_list(diag_spec);
    if (diag.empty() || diag.size() > ambient)
        throw pa::InputError("probe escape: diag block must fit inside the ambient dimension");
    pa::numkernel::ComplexMatrix block(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) block(i, i) = diag[i];
    std::ostringstream csv;
    csv.precision(17);
    csv << "n,value\n";
    for (std::size_t n = 1; n <= ambient; ++n) {
        const auto v = pa::states::weak_escape_probe(ambient, block, n);
        csv << n << "," << v.real() << "\n";
    }
    write_csv(out, csv.str());
    return 0;
}

int cmd_probe_unital(std::size_t ambient, const std::string& diag_spec, double z_re, double z_im,
                     const std::string& out) {
    const std::vector<double> diag = parse_double_list(diag_spec);
    if (diag.size() > ambient)
        throw pa::InputError("probe unital: diag block must fit inside the ambient dimension");
    pa::numkernel::ComplexMatrix compact(ambient);
    for (std::size_t i = 0; i < diag.size(); ++i) compact(i, i) = diag[i];
    const pa::states::UnitalizedElement e{compact, {z_re, z_im}};
    std::ostringstream csv;
    csv.precision(17);
    csv << "state,re,im\n";
    for (std::size_t n = 1; n <= ambient; ++n) {
        std::vector<std::complex<double>> basis(ambient, {0.0, 0.0});
        basis[n - 1] = 1.0;
        const auto p = pa::states::PureStatePoint::from_vector(basis);
        const auto v = pa::states::unitalized_eval(p, e);
        csv << "p" << n << "," << v.real() << "," << v.imag() << "\n";
    }
    const auto vinf = pa::states::unitalized_eval(pa::states::InfinityPoint{}, e);
    csv << "infinity," << vinf.real() << "," << vinf.imag() << "\n";
    write_csv(out, csv.str());
    return 0;
}

int cmd_probe_tau(std::size_t dim, std::size_t steps, double angle_max, const std::string& out) {
    if (dim < 2) throw pa::InputError("probe tau-continuity: need dimension >= 2");
    if (steps < 2) throw pa::InputError("probe tau-continuity: need at least 2 steps");
    pa::numkernel::ComplexMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i) a(i, i) = static_cast<double>(dim - i);
    std::vector<std::complex<double>> v(dim, {0.0, 0.0}), w(dim, {0.0, 0.0});
    v[0] = 1.0;
    w[1] = 1.0;
    std::vector<double> angles;
    for (std::size_t j = 0; j <= steps; ++j)
        angles.push_back(angle_max * static_cast<double>(steps - j) /
                         static_cast<double>(steps));
    const auto deltas = pa::states::tau_continuity_sweep(a, v, w, angles);
    std::ostringstream csv;
    csv.precision(17);
    csv << "angle,abs_delta\n";
    for (std::size_t j = 0; j < angles.size(); ++j)
        csv << angles[j] << "," << deltas[j] << "\n";
    write_csv(out, csv.str());
    return 0;
}

void print_config(const GlobalOptions& g) {
    json j;
    j["tol_gap"] = g.tol_gap;
    j["tol_link"] = g.tol_link;
    j["admissibility_min_link"] = pa::configspace::kMinLinkThreshold;
    j["admissibility_max_base_step"] = pa::configspace::kMaxBaseStepThreshold;
    j["midpoint_degeneracy_tol"] = pa::configspace::kMidpointDegeneracyTol;
    j["residual_gate"] = kResidualGate;
    j["localizability_tol"] = 1e-12;
    j["kernel_backend"] = pa::kernels::backend_name(pa::kernels::active_backend());
    j["seed_env"] = "PHASEATLAS_SEED";
    std::cout << j.dump(1) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological phase classifier for trivial C*-bundle systems"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    GlobalOptions g;
    bool show_config = false;
    std::string grid_spec = "24x24";
    app.add_option("--tol-gap", g.tol_gap, "gap tolerance for band projections");
    app.add_option("--tol-link", g.tol_link, "vanishing-link tolerance for the lattice Chern sum");
    app.add_flag("--general", g.general, "permissive mode: accept non-localizable configurations");
    app.add_flag("--print-config", show_config, "print the effective tolerances and exit");
    app.add_option("--grid", grid_spec, "grid sizes NxN[xN] for model generation");

    // model
    auto* model = app.add_subcommand("model", "generate a model configuration file");
    std::string model_name, model_out, model_obs_out, model_mat = "1,0;0,1";
    double model_m = 1.0;
    long long model_p = 1, model_q = 3, model_c = 1, model_band = -1;
    model->add_option("name", model_name, "qwz|hofstadter|sphere-wrap|torus-selfmap")->required();
    model->add_option("--m", model_m, "qwz mass parameter");
    model->add_option("--p", model_p, "hofstadter flux numerator");
    model->add_option("--q", model_q, "hofstadter flux denominator");
    model->add_option("--c", model_c, "sphere-wrap winding");
    model->add_option("--M", model_mat, "torus-selfmap integer matrix, rows 'a,b;c,d'");
    model->add_option("--band", model_band, "band index (default: lowest)");
    model->add_option("-o,--out", model_out, "output configuration file")->required();
    model->add_option("--observable-out", model_obs_out,
                      "also write the Hamiltonian family as an observable file");

    // classify / compare / chern / degree
    auto* classify = app.add_subcommand("classify", "compute the phase class of a configuration");
    std::string classify_file;
    classify->add_option("config", classify_file, "configuration JSON file")->required();

    auto* compare = app.add_subcommand("compare", "decide whether two configurations share a phase");
    std::string compare_f, compare_g;
    compare->add_option("first", compare_f)->required();
    compare->add_option("second", compare_g)->required();

    auto* chern = app.add_subcommand("chern", "first Chern numbers of the fiber family");
    std::string chern_file;
    chern->add_option("config", chern_file)->required();

    auto* degree = app.add_subcommand("degree", "degree matrix of the base map");
    std::string degree_file;
    degree->add_option("config", degree_file)->required();

    // cohomology / k0
    auto* cohom = app.add_subcommand("cohomology", "cohomology group of a CW complex");
    std::string cohom_src;
    long long cohom_k = 2;
    cohom->add_option("source", cohom_src, "file path, torus:<d> or sphere:<n>")->required();
    cohom->add_option("-k,--k", cohom_k, "degree (default 2)");

    auto* k0 = app.add_subcommand("k0", "reduced K^0 group (dim <= 3)");
    std::string k0_src;
    k0->add_option("source", k0_src, "file path, torus:<d> or sphere:<n>")->required();

    // ensemble
    auto* ens = app.add_subcommand("ensemble", "evaluate a statistical ensemble");
    std::string ens_cfg, ens_measure, ens_obs;
    ens->add_option("config", ens_cfg)->required();
    ens->add_option("measure", ens_measure)->required();
    ens->add_option("observable", ens_obs, "observable file or 'identity'")->required();

    // probe
    auto* probe = app.add_subcommand("probe", "state-space probes (CSV output)");
    probe->require_subcommand(1);
    auto* escape = probe->add_subcommand("escape", "weak-* escape of basis projectors");
    std::size_t escape_ambient = 16;
    std::string escape_diag = "1", escape_out;
    escape->add_option("--ambient", escape_ambient, "ambient dimension N");
    escape->add_option("--diag", escape_diag, "diagonal of the embedded block, e.g. '5,2'");
    escape->add_option("-o,--out", escape_out, "output CSV (default stdout)");

    auto* unital = probe->add_subcommand("unital", "evaluation on the unitalized algebra");
    std::size_t unital_ambient = 8;
    std::string unital_diag = "", unital_out;
    double unital_zre = 3.0, unital_zim = 0.0;
    unital->add_option("--ambient", unital_ambient, "ambient dimension N");
    unital->add_option("--diag", unital_diag, "diagonal of the compact part (default zero)");
    unital->add_option("--z-re", unital_zre, "scalar part, real");
    unital->add_option("--z-im", unital_zim, "scalar part, imaginary");
    unital->add_option("-o,--out", unital_out, "output CSV (default stdout)");

    auto* tauc = probe->add_subcommand("tau-continuity", "weak-* continuity rotation sweep");
    std::size_t tau_dim = 4, tau_steps = 16;
    double tau_angle = 1.2;
    std::string tau_out;
    tauc->add_option("--dim", tau_dim, "fiber dimension");
    tauc->add_option("--steps", tau_steps, "number of angles");
    tauc->add_option("--angle-max", tau_angle, "largest rotation angle");
    tauc->add_option("-o,--out", tau_out, "output CSV (default stdout)");

    // curvature
    auto* curv = app.add_subcommand("curvature", "per-plaquette Berry flux CSV");
    std::string curv_cfg, curv_out;
    curv->add_option("config", curv_cfg)->required();
    curv->add_option("-o,--out", curv_out, "output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (show_config) {
            print_config(g);
            return 0;
        }
        if (model->parsed())
            return cmd_model(model_name, grid_spec, model_m, model_p, model_q, model_c,
                             model_mat, model_band, model_out, model_obs_out, g);
        if (classify->parsed()) return cmd_classify(classify_file, g);
        if (compare->parsed()) return cmd_compare(compare_f, compare_g, g);
        if (chern->parsed()) return cmd_chern(chern_file, g);
        if (degree->parsed()) return cmd_degree(degree_file);
        if (cohom->parsed()) return cmd_cohomology(cohom_src, cohom_k);
        if (k0->parsed()) return cmd_k0(k0_src);
        if (ens->parsed()) return cmd_ensemble(ens_cfg, ens_measure, ens_obs, g);
        if (curv->parsed()) return cmd_curvature(curv_cfg, curv_out, g);
        if (probe->parsed()) {
            if (escape->parsed()) return cmd_probe_escape(escape_ambient, escape_diag, escape_out);
            if (unital->parsed())
                return cmd_probe_unital(unital_ambient, unital_diag, unital_zre, unital_zim,
                                        unital_out);
            if (tauc->parsed()) return cmd_probe_tau(tau_dim, tau_steps, tau_angle, tau_out);
        }
        std::cout << app.help() << "\n";
        return 0;
    } catch (const ResidualBreach& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pa::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pa::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
