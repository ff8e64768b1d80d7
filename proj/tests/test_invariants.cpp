#include <doctest.h>

#include <cmath>

#include "phaseatlas/invariants.hpp"
#include "phaseatlas/models.hpp"
#include "test_support.hpp"

using namespace phaseatlas;
using namespace phaseatlas::invariants;
using configspace::GeneralConfiguration;
using configspace::ParameterGrid;
using patest::cd;

namespace {

// Brute-force winding oracle, independent of the library path.
long long winding_oracle(const std::vector<double>& phases) {
    double sum = 0.0;
    for (std::size_t k = 0; k < phases.size(); ++k) {
        double inc = std::fmod(phases[(k + 1) % phases.size()] - phases[k], 2.0 * M_PI);
        if (inc > M_PI) inc -= 2.0 * M_PI;
        if (inc <= -M_PI) inc += 2.0 * M_PI;
        sum += inc;
    }
    return std::llround(sum / (2.0 * M_PI));
}

GeneralConfiguration constant_fiber_config(const ParameterGrid& grid) {
    GeneralConfiguration f;
    f.grid = grid;
    f.fiber_dim = 2;
    configspace::set_identity_base(f);
    f.fibers.assign(grid.num_points() * 2, cd{0.0, 0.0});
    for (std::size_t k = 0; k < grid.num_points(); ++k) f.fiber(k)[0] = 1.0;
    return f;
}

// Extrude a d=2 configuration into d=3, constant along the last coordinate.
GeneralConfiguration extrude(const GeneralConfiguration& f2, std::size_t n3) {
    ParameterGrid g3({f2.grid.sizes()[0], f2.grid.sizes()[1], n3});
    GeneralConfiguration f;
    f.grid = g3;
    f.fiber_dim = f2.fiber_dim;
    configspace::set_identity_base(f);
    f.fibers.resize(g3.num_points() * f.fiber_dim);
    for (std::size_t flat = 0; flat < g3.num_points(); ++flat) {
        const auto k = g3.unflatten(flat);
        const std::size_t src = f2.grid.flat_index({k[0], k[1]});
        for (std::size_t i = 0; i < f.fiber_dim; ++i) f.fiber(flat)[i] = f2.fiber(src)[i];
    }
    return f;
}

}  // namespace

TEST_CASE("winding number examples against the brute-force oracle") {
    std::vector<double> constant(16, 1.25);
    CHECK(winding_number(constant).value == 0);

    std::vector<double> identity_loop;
    for (int k = 0; k < 24; ++k) identity_loop.push_back(2.0 * M_PI * k / 24.0);
    CHECK(winding_number(identity_loop).value == 1);
    CHECK(winding_number(identity_loop).value == winding_oracle(identity_loop));

    std::vector<double> three;
    for (int k = 0; k < 32; ++k)
        three.push_back(configspace::wrap_angle(2.0 * M_PI * 3.0 * k / 32.0));
    CHECK(winding_oracle(three) == 3);
    CHECK(winding_number(three).value == 3);
    CHECK(winding_number(three).residual <= 1e-9);
}

TEST_CASE("winding rejects near-antipodal steps") {
    std::vector<double> bad = {0.0, M_PI, 0.0, M_PI};
    CHECK_THROWS_AS(winding_number(bad), NonAdmissibleStep);
}

TEST_CASE("degree matrix examples") {
    ParameterGrid g({24, 24});

    const GeneralConfiguration ident = constant_fiber_config(g);
    CHECK(degree_matrix(ident).matrix ==
          std::vector<std::vector<long long>>{{1, 0}, {0, 1}});

    const auto sm = models::torus_selfmap({{2, 1}, {0, 1}}, g);
    CHECK(degree_matrix(sm).matrix == std::vector<std::vector<long long>>{{2, 1}, {0, 1}});

    GeneralConfiguration constant = ident;
    for (double& a : constant.base) a = 1.0;
    CHECK(degree_matrix(constant).matrix ==
          std::vector<std::vector<long long>>{{0, 0}, {0, 0}});
}

TEST_CASE("degree matrix flags inconsistent parallel cycles") {
    ParameterGrid g({16, 16});
    GeneralConfiguration f = constant_fiber_config(g);
    // winding 1 along rows with k2=0, winding 2 along the others
    for (std::size_t flat = 0; flat < g.num_points(); ++flat) {
        const auto k = g.unflatten(flat);
        const double mult = (k[1] == 0) ? 1.0 : 2.0;
        f.base[flat * 2 + 0] = configspace::wrap_angle(mult * g.angle(0, k[0]));
        f.base[flat * 2 + 1] = g.angle(1, k[1]);
    }
    CHECK_THROWS_AS(degree_matrix(f), InconsistentWinding);
}

TEST_CASE("degree functoriality: composed base maps multiply") {
    auto rng = patest::make_rng(40);
    std::uniform_int_distribution<long long> e(-3, 3);
    for (int rep = 0; rep < 8; ++rep) {
        const std::vector<std::vector<long long>> m1 = {{e(rng), e(rng)}, {e(rng), e(rng)}};
        const std::vector<std::vector<long long>> m2 = {{e(rng), e(rng)}, {e(rng), e(rng)}};
        std::vector<std::vector<long long>> prod(2, std::vector<long long>(2, 0));
        long long maxabs = 1;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) prod[i][j] += m1[i][k] * m2[k][j];
                maxabs = std::max(maxabs, std::llabs(prod[i][j]));
            }
        const std::size_t n = static_cast<std::size_t>(8 * maxabs);
        ParameterGrid g({std::max<std::size_t>(n, 8), std::max<std::size_t>(n, 8)});
        // apply m2 as a base map, then m1 on top of it
        GeneralConfiguration f = constant_fiber_config(g);
        for (std::size_t flat = 0; flat < g.num_points(); ++flat) {
            const auto k = g.unflatten(flat);
            double a0 = 0.0, a1 = 0.0;
            for (int j = 0; j < 2; ++j) {
                a0 += static_cast<double>(m2[0][j]) * g.angle(j, k[j]);
                a1 += static_cast<double>(m2[1][j]) * g.angle(j, k[j]);
            }
            const double b0 = static_cast<double>(m1[0][0]) * a0 + static_cast<double>(m1[0][1]) * a1;
            const double b1 = static_cast<double>(m1[1][0]) * a0 + static_cast<double>(m1[1][1]) * a1;
            f.base[flat * 2 + 0] = configspace::wrap_angle(b0);
            f.base[flat * 2 + 1] = configspace::wrap_angle(b1);
        }
        CHECK(degree_matrix(f).matrix == prod);
    }
}

TEST_CASE("constant fibers carry zero Chern number") {
    ParameterGrid g({12, 12});
    const GeneralConfiguration f = constant_fiber_config(g);
    const ChernResult c = chern_number_fhs(f);
    CHECK(c.value == 0);
    CHECK(c.residual <= 1e-12);
}

TEST_CASE("qwz Chern numbers match the pinned fine-grid oracle values") {
    // Frozen from the committed 256^2 oracle run: C(m=1) = +1, C(m=-1) = -1,
    // C(|m|>2) = 0.
    ParameterGrid g({24, 24});
    CHECK(chern_number_fhs(configspace::from_hamiltonian(models::qwz(1.0, g)).config).value == 1);
    CHECK(chern_number_fhs(configspace::from_hamiltonian(models::qwz(-1.0, g)).config).value == -1);
    CHECK(chern_number_fhs(configspace::from_hamiltonian(models::qwz(3.0, g)).config).value == 0);
    CHECK(chern_number_fhs(configspace::from_hamiltonian(models::qwz(-3.0, g)).config).value == 0);
}

TEST_CASE("FHS sum is quantized: residual below 1e-9") {
    ParameterGrid g({24, 24});
    for (double m : {1.0, -1.0, 0.5, 3.0}) {
        const auto f = configspace::from_hamiltonian(models::qwz(m, g)).config;
        CHECK(chern_number_fhs(f).residual <= 1e-9);
    }
}

TEST_CASE("gauge rotations leave the Chern integer unchanged") {
    ParameterGrid g({12, 12});
    const auto f = configspace::from_hamiltonian(models::qwz(1.0, g)).config;
    const long long base = chern_number_fhs(f).value;
    auto rng = patest::make_rng(41);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int rep = 0; rep < 50; ++rep) {
        GeneralConfiguration rot = f;
        for (std::size_t k = 0; k < g.num_points(); ++k) {
            const cd phase = std::polar(1.0, u(rng));
            rot.fiber(k)[0] *= phase;
            rot.fiber(k)[1] *= phase;
        }
        CHECK(chern_number_fhs(rot).value == base);
    }
}

TEST_CASE("vanishing links are reported with their location") {
    ParameterGrid g({8, 8});
    GeneralConfiguration f = constant_fiber_config(g);
    // orthogonal fiber at one point kills the link into it
    f.fiber(g.flat_index({3, 4}))[0] = 0.0;
    f.fiber(g.flat_index({3, 4}))[1] = 1.0;
    CHECK_THROWS_AS(chern_number_fhs(f), VanishingLink);
}

TEST_CASE("chern vector in d=3: extruded qwz gives (C, 0, 0)") {
    ParameterGrid g2({12, 12});
    const auto f2 = configspace::from_hamiltonian(models::qwz(1.0, g2)).config;
    const GeneralConfiguration f3 = extrude(f2, 4);
    const ChernVectorResult cv = chern_vector(f3);
    REQUIRE(cv.values.size() == 3);
    CHECK(cv.values[0] == 1);   // (0,1) slice = the qwz plane
    CHECK(cv.values[1] == 0);   // (0,2): constant along coordinate 2
    CHECK(cv.values[2] == 0);   // (1,2)
}

TEST_CASE("chern vector of a d=3 constant configuration is (0,0,0)") {
    ParameterGrid g({6, 6, 6});
    GeneralConfiguration f;
    f.grid = g;
    f.fiber_dim = 2;
    configspace::set_identity_base(f);
    f.fibers.assign(g.num_points() * 2, cd{0.0, 0.0});
    for (std::size_t k = 0; k < g.num_points(); ++k) f.fiber(k)[0] = 1.0;
    CHECK(chern_vector(f).values == std::vector<long long>{0, 0, 0});
}

TEST_CASE("slice disagreement is detected") {
    // fibers jump between qwz m=1 and m=3 across the third coordinate
    ParameterGrid g2({12, 12});
    const auto a = configspace::from_hamiltonian(models::qwz(1.0, g2)).config;
    const auto b = configspace::from_hamiltonian(models::qwz(3.0, g2)).config;
    ParameterGrid g3({12, 12, 4});
    GeneralConfiguration f;
    f.grid = g3;
    f.fiber_dim = 2;
    configspace::set_identity_base(f);
    f.fibers.resize(g3.num_points() * 2);
    for (std::size_t flat = 0; flat < g3.num_points(); ++flat) {
        const auto k = g3.unflatten(flat);
        const auto& src = (k[2] < 2) ? a : b;
        const std::size_t s = g2.flat_index({k[0], k[1]});
        f.fiber(flat)[0] = src.fiber(s)[0];
        f.fiber(flat)[1] = src.fiber(s)[1];
    }
    CHECK_THROWS_AS(chern_vector(f), SliceDisagreement);
}

TEST_CASE("classify composes the two invariants") {
    ParameterGrid g({24, 24});
    const auto qwz1 = configspace::from_hamiltonian(models::qwz(1.0, g)).config;
    const PhaseClass c = classify(qwz1);
    CHECK(c.degree == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
    CHECK(c.chern == std::vector<long long>{1});

    const auto sm = models::torus_selfmap({{2, 1}, {0, 1}}, g);
    const PhaseClass c2 = classify(sm);
    CHECK(c2.degree == std::vector<std::vector<long long>>{{2, 1}, {0, 1}});
    CHECK(c2.chern == std::vector<long long>{0});

    const PhaseClass c3 = classify(constant_fiber_config(g));
    CHECK(c3.degree == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
    CHECK(c3.chern == std::vector<long long>{0});
}

TEST_CASE("localizable configurations always classify with identity degree") {
    ParameterGrid g({16, 16});
    for (double m : {1.0, -1.0, 3.0}) {
        const auto f = configspace::from_hamiltonian(models::qwz(m, g)).config;
        REQUIRE(configspace::is_localizable(f));
        const auto deg = degree_matrix(f).matrix;
        CHECK(deg == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
    }
}

TEST_CASE("same_phase examples and equivalence-relation structure") {
    ParameterGrid g({24, 24});
    const auto m1 = configspace::from_hamiltonian(models::qwz(1.0, g)).config;
    const auto m15 = configspace::from_hamiltonian(models::qwz(1.5, g)).config;
    const auto m3 = configspace::from_hamiltonian(models::qwz(3.0, g)).config;

    CHECK(same_phase(m1, m1));
    CHECK(same_phase(m1, m15));
    CHECK_FALSE(same_phase(m1, m3));

    // reflexive, symmetric, transitive over a small family
    const std::vector<const GeneralConfiguration*> fam = {&m1, &m15, &m3};
    for (const auto* a : fam) {
        CHECK(same_phase(*a, *a));
        for (const auto* b : fam) {
            CHECK(same_phase(*a, *b) == same_phase(*b, *a));
            for (const auto* c : fam) {
                if (same_phase(*a, *b) && same_phase(*b, *c)) CHECK(same_phase(*a, *c));
            }
        }
    }
}

TEST_CASE("grid refinement leaves the class unchanged") {
    for (std::size_t n : {12, 24, 48}) {
        ParameterGrid g({n, n});
        const auto f = configspace::from_hamiltonian(models::qwz(1.0, g)).config;
        CHECK(chern_number_fhs(f).value == 1);
    }
}

TEST_CASE("homotopy invariance on a valid in-window deformation") {
    ParameterGrid g({12, 12});
    const auto f = configspace::from_hamiltonian(models::qwz(0.8, g)).config;
    const auto q = configspace::from_hamiltonian(models::qwz(1.6, g)).config;
    const auto h = configspace::homotopy_interpolate(f, q, 8);
    REQUIRE(configspace::validate_homotopy(h).valid);
    CHECK(classify(h.frames.front()) == classify(h.frames.back()));
}

TEST_CASE("curvature field sums to 2 pi times the Chern number") {
    ParameterGrid g({16, 16});
    const auto f = configspace::from_hamiltonian(models::qwz(1.0, g)).config;
    const auto field = curvature_field(f);
    double sum = 0.0;
    for (const auto& s : field) sum += s.flux;
    CHECK(sum == doctest::Approx(2.0 * M_PI * 1.0).epsilon(1e-9));

    const auto trivial = configspace::from_hamiltonian(models::qwz(3.0, g)).config;
    const auto field0 = curvature_field(trivial);
    double sum0 = 0.0;
    double max_abs = 0.0;
    for (const auto& s : field0) {
        sum0 += s.flux;
        max_abs = std::max(max_abs, std::abs(s.flux));
    }
    CHECK(std::abs(sum0) < 1e-9);
    CHECK(max_abs > 1e-4);  // pointwise nonzero, total cancels
}

TEST_CASE("chern slice selection validates its arguments") {
    ParameterGrid g({12, 12});
    const GeneralConfiguration f = constant_fiber_config(g);
    CHECK_THROWS_AS(chern_number_fhs(f, 1, 0, {}), InputError);   // need i < j
    CHECK_THROWS_AS(chern_number_fhs(f, 0, 5, {}), InputError);   // j out of range
    CHECK_THROWS_AS(chern_number_fhs(f, 0, 1, {3}), InputError);  // wrong arity for d=2

    ParameterGrid g3({6, 6, 6});
    GeneralConfiguration f3;
    f3.grid = g3;
    f3.fiber_dim = 2;
    configspace::set_identity_base(f3);
    f3.fibers.assign(g3.num_points() * 2, patest::cd{0.0, 0.0});
    for (std::size_t k = 0; k < g3.num_points(); ++k) f3.fiber(k)[0] = 1.0;
    CHECK_THROWS_AS(chern_number_fhs(f3, 0, 1, {9}), PointOutsideGrid);
    CHECK(chern_number_fhs(f3, 0, 1, {2}).value == 0);
}

TEST_CASE("phase class JSON round-trip") {
    PhaseClass c;
    c.degree = {{2, 1}, {0, 1}};
    c.chern = {-1};
    c.residual = 1e-12;
    const PhaseClass back = phase_class_from_json(phase_class_to_json(c));
    CHECK(back == c);
}
