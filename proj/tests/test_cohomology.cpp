#include <doctest.h>

#include <random>
#include <sstream>

#include "phaseatlas/cohomology.hpp"
#include "phaseatlas/configspace.hpp"
#include "phaseatlas/invariants.hpp"
#include "test_support.hpp"

using namespace phaseatlas;
using namespace phaseatlas::cohomology;

namespace {

// Exact integer determinant (fraction-free Gaussian elimination); the
// independent oracle for unimodularity of the SNF transforms.
BigInt det_bareiss(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw InputError("det: square only");
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> u(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = u(rng);
    return m;
}

void check_snf_postconditions(const IntMatrix& a, const SnfResult& s) {
    CHECK(s.u * a * s.v == s.d);
    const BigInt du = det_bareiss(s.u);
    const BigInt dv = det_bareiss(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    const std::size_t lim = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i < lim; ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
    bool seen_zero = false;
    for (std::size_t i = 0; i < lim; ++i) {
        if (s.d(i, i) == 0) {
            seen_zero = true;
            continue;
        }
        CHECK(!seen_zero);  // nonzero block first
        CHECK(s.d(i, i) > 0);
        if (i + 1 < lim && s.d(i + 1, i + 1) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
}

// Random complex with delta delta = 0: rows of the next coboundary are taken
// from the integer kernel of the previous one's transpose.
CWComplex random_valid_complex(std::mt19937_64& rng, std::size_t dim) {
    std::uniform_int_distribution<std::size_t> cell_count(1, 5);
    std::uniform_int_distribution<int> small(-2, 2);
    CWComplex x;
    x.dim = dim;
    x.cells.resize(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) x.cells[k] = cell_count(rng);
    x.coboundary.clear();
    for (std::size_t k = 0; k < dim; ++k) {
        if (k == 0) {
            x.coboundary.push_back(
                random_int_matrix(rng, x.cells[1], x.cells[0], -3, 3));
            continue;
        }
        // kernel of delta^{k-1}^T gives the admissible rows
        const IntMatrix& prev = x.coboundary[k - 1];
        IntMatrix pt(prev.cols(), prev.rows());
        for (std::size_t i = 0; i < prev.rows(); ++i)
            for (std::size_t j = 0; j < prev.cols(); ++j) pt(j, i) = prev(i, j);
        const SnfResult s = smith_normal_form(pt);
        const std::size_t rank = s.rank();
        const std::size_t null_dim = pt.cols() - rank;
        IntMatrix next(x.cells[k + 1], x.cells[k]);
        for (std::size_t r = 0; r < next.rows(); ++r) {
            for (std::size_t b = 0; b < null_dim; ++b) {
                const BigInt coeff = small(rng);
                if (coeff == 0) continue;
                for (std::size_t c = 0; c < next.cols(); ++c)
                    next(r, c) += coeff * s.v(c, rank + b);
            }
        }
        x.coboundary.push_back(std::move(next));
    }
    x.validate();
    return x;
}

}  // namespace

TEST_CASE("SNF of the zero matrix") {
    const IntMatrix z(3, 4);
    const SnfResult s = smith_normal_form(z);
    CHECK(s.d.is_zero());
    CHECK(s.u == IntMatrix::identity(3));
    CHECK(s.v == IntMatrix::identity(4));
}

TEST_CASE("SNF of diag(2,3) is diag(1,6)") {
    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    const SnfResult s = smith_normal_form(a);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 6);
    check_snf_postconditions(a, s);
}

TEST_CASE("SNF postconditions on the worked 2x2 example") {
    IntMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 4;
    a(1, 0) = 6;
    a(1, 1) = 8;
    const SnfResult s = smith_normal_form(a);
    check_snf_postconditions(a, s);
    // |det| = |16 - 24| = 8 = d1 * d2 and d1 | d2
    CHECK(s.d(0, 0) * s.d(1, 1) == 8);
}

TEST_CASE("SNF postconditions hold on random rectangular matrices") {
    auto rng = patest::make_rng(50);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int rep = 0; rep < 120; ++rep) {
        const IntMatrix a = random_int_matrix(rng, dim(rng), dim(rng), -20, 20);
        check_snf_postconditions(a, smith_normal_form(a));
    }
}

TEST_CASE("torus complexes have the right cells and cohomology") {
    const CWComplex t2 = torus_cw(2);
    CHECK(t2.cells == std::vector<std::size_t>{1, 2, 1});
    const CWComplex t3 = torus_cw(3);
    CHECK(t3.cells == std::vector<std::size_t>{1, 3, 3, 1});
    const CWComplex t1 = torus_cw(1);
    CHECK(t1.cells == std::vector<std::size_t>{1, 1});

    CHECK(cohomology_group(t2, 2) == AbelianGroup{1, {}});
    CHECK(cohomology_group(t3, 2) == AbelianGroup{3, {}});
    CHECK(cohomology_group(t1, 2).trivial());  // no 2-cells

    // free rank binomial(d,k), no torsion, for all 0 <= k <= d <= 4
    for (std::size_t d = 1; d <= 4; ++d) {
        const CWComplex t = torus_cw(d);
        std::size_t binom = 1;
        for (std::size_t k = 0; k <= d; ++k) {
            const AbelianGroup g = cohomology_group(t, static_cast<long long>(k));
            CHECK(g.free_rank == binom);
            CHECK(g.torsion.empty());
            binom = binom * (d - k) / (k + 1);
        }
    }
}

TEST_CASE("reduced K0 identification in the stable range") {
    CHECK(reduced_k0(torus_cw(2)) == AbelianGroup{1, {}});
    CHECK(reduced_k0(torus_cw(3)) == AbelianGroup{3, {}});
    CHECK_THROWS_AS(reduced_k0(torus_cw(4)), DimensionTooHigh);
}

TEST_CASE("degree handling") {
    CHECK_THROWS_AS(cohomology_group(torus_cw(2), -1), DegreeOutOfRange);
    CHECK(cohomology_group(torus_cw(2), 7).trivial());
}

TEST_CASE("sphere complexes") {
    const CWComplex s2 = sphere_cw(2);
    CHECK(s2.cells == std::vector<std::size_t>{1, 0, 1});
    CHECK(cohomology_group(s2, 0) == AbelianGroup{1, {}});
    CHECK(cohomology_group(s2, 1).trivial());
    CHECK(cohomology_group(s2, 2) == AbelianGroup{1, {}});
    CHECK(reduced_k0(s2) == AbelianGroup{1, {}});

    // the circle has no second cohomology, so its reduced K-group vanishes
    CHECK(reduced_k0(sphere_cw(1)).trivial());
    CHECK(cohomology_group(sphere_cw(3), 3) == AbelianGroup{1, {}});
}

TEST_CASE("parser rejects rows with trailing entries") {
    const std::string bad =
        "cw dim=1\n"
        "cells k=0 n=1\n"
        "cells k=1 n=1\n"
        "coboundary k=0\n"
        "0 7\n";
    CHECK_THROWS_AS(parse_cw_string(bad), ParseError);
}

TEST_CASE("CW text format round-trips") {
    const CWComplex t2 = torus_cw(2);
    const CWComplex back = parse_cw_string(format_cw(t2));
    CHECK(back.dim == t2.dim);
    CHECK(back.cells == t2.cells);
    for (std::size_t k = 0; k < t2.dim; ++k) CHECK(back.coboundary[k] == t2.coboundary[k]);

    auto rng = patest::make_rng(51);
    for (int rep = 0; rep < 10; ++rep) {
        const CWComplex x = random_valid_complex(rng, 3);
        const CWComplex y = parse_cw_string(format_cw(x));
        CHECK(y.cells == x.cells);
        for (std::size_t k = 0; k < x.dim; ++k) CHECK(y.coboundary[k] == x.coboundary[k]);
    }
}

TEST_CASE("parser accepts comments and reports errors with line numbers") {
    const std::string good =
        "# a sphere\n"
        "cw dim=2\n"
        "cells k=0 n=1\n"
        "cells k=1 n=0\n"
        "cells k=2 n=1\n";
    const CWComplex s2 = parse_cw_string(good);
    CHECK(cohomology_group(s2, 2) == AbelianGroup{1, {}});

    try {
        parse_cw_string("cw dim=1\ncells k=0 n=1\nbogus line\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    CHECK_THROWS_AS(parse_cw_string("cells k=0 n=1\n"), ParseError);
    CHECK_THROWS_AS(parse_cw_string("cw dim=1\ncells k=0 n=1\n"), ParseError);  // missing k=1
}

TEST_CASE("cochain violation is caught on load") {
    // delta^1 delta^0 = [1][1] != 0
    const std::string bad =
        "cw dim=2\n"
        "cells k=0 n=1\n"
        "cells k=1 n=1\n"
        "cells k=2 n=1\n"
        "coboundary k=0\n"
        "1\n"
        "coboundary k=1\n"
        "1\n";
    CHECK_THROWS_AS(parse_cw_string(bad), CochainViolation);
}

TEST_CASE("Euler characteristic equals the alternating sum of free ranks") {
    auto rng = patest::make_rng(52);
    std::uniform_int_distribution<std::size_t> dims(1, 3);
    for (int rep = 0; rep < 25; ++rep) {
        const CWComplex x = random_valid_complex(rng, dims(rng));
        long long chi_cells = 0, chi_ranks = 0;
        for (std::size_t k = 0; k <= x.dim; ++k) {
            const long long sign = (k % 2 == 0) ? 1 : -1;
            chi_cells += sign * static_cast<long long>(x.cells[k]);
            chi_ranks +=
                sign * static_cast<long long>(cohomology_group(x, static_cast<long long>(k)).free_rank);
        }
        CHECK(chi_cells == chi_ranks);
    }
}

TEST_CASE("H^2 free rank of the torus equals the Chern vector length") {
    for (std::size_t d = 1; d <= 3; ++d) {
        std::vector<std::size_t> sizes(d, 6);
        configspace::ParameterGrid g(sizes);
        configspace::GeneralConfiguration f;
        f.grid = g;
        f.fiber_dim = 2;
        configspace::set_identity_base(f);
        f.fibers.assign(g.num_points() * 2, patest::cd{0.0, 0.0});
        for (std::size_t k = 0; k < g.num_points(); ++k) f.fiber(k)[0] = 1.0;
        const auto cv = invariants::chern_vector(f);
        CHECK(cohomology_group(torus_cw(d), 2).free_rank == cv.values.size());
    }
}

TEST_CASE("group pretty printing") {
    CHECK(group_to_string(AbelianGroup{0, {}}) == "0");
    CHECK(group_to_string(AbelianGroup{1, {}}) == "Z");
    CHECK(group_to_string(AbelianGroup{3, {}}) == "Z^3");
    CHECK(group_to_string(AbelianGroup{1, {BigInt(2), BigInt(6)}}) == "Z + Z/2 + Z/6");
}
