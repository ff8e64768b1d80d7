#include "phaseatlas/cohomology.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace phaseatlas::cohomology {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const BigInt& x : a_)
        if (x != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("IntMatrix product: shapes incompatible");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    const std::size_t lim = std::min(d.rows(), d.cols());
    while (r < lim && d(r, r) != 0) ++r;
    return r;
}

std::vector<BigInt> SnfResult::elementary_divisors() const {
    std::vector<BigInt> out;
    const std::size_t lim = std::min(d.rows(), d.cols());
    for (std::size_t r = 0; r < lim && d(r, r) != 0; ++r) out.push_back(d(r, r));
    return out;
}

namespace {

using boost::multiprecision::abs;

struct SnfWork {
    IntMatrix d, u, v;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row dst += c * row src
    void row_axpy(std::size_t dst, std::size_t src, const BigInt& c) {
        for (std::size_t col = 0; col < d.cols(); ++col) d(dst, col) += c * d(src, col);
        for (std::size_t col = 0; col < u.cols(); ++col) u(dst, col) += c * u(src, col);
    }
    // col dst += c * col src
    void col_axpy(std::size_t dst, std::size_t src, const BigInt& c) {
        for (std::size_t row = 0; row < d.rows(); ++row) d(row, dst) += c * d(row, src);
        for (std::size_t row = 0; row < v.rows(); ++row) v(row, dst) += c * v(row, src);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = -d(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }

    // Smallest nonzero |entry| in the trailing submatrix, ties by (row, col).
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        BigInt best = 0;
        for (std::size_t i = t; i < d.rows(); ++i) {
            for (std::size_t j = t; j < d.cols(); ++j) {
                if (d(i, j) == 0) continue;
                const BigInt mag = abs(d(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        }
        return found;
    }
};

}  // namespace

SnfResult smith_normal_form(IntMatrix a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SnfWork w{std::move(a), IntMatrix::identity(m), IntMatrix::identity(n)};

    const std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!w.find_pivot(t, pi, pj)) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            // Clear column t below the pivot and row t to its right.  A
            // nonzero remainder becomes the next (strictly smaller) pivot.
            bool reduced = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.d(i, t) == 0) continue;
                const BigInt q = w.d(i, t) / w.d(t, t);
                if (q != 0) w.row_axpy(i, t, -q);
                if (w.d(i, t) != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.d(t, j) == 0) continue;
                const BigInt q = w.d(t, j) / w.d(t, t);
                if (q != 0) w.col_axpy(j, t, -q);
                if (w.d(t, j) != 0) reduced = false;
            }
            if (!reduced) {
                std::size_t qi = 0, qj = 0;
                w.find_pivot(t, qi, qj);
                w.row_swap(t, qi);
                w.col_swap(t, qj);
                continue;
            }
            // Pivot must divide the whole trailing submatrix, otherwise the
            // divisibility chain would fail.
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (w.d(i, j) % w.d(t, t) != 0) {
                        w.row_axpy(t, i, 1);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) break;
        }
    }

    for (std::size_t t = 0; t < lim; ++t)
        if (w.d(t, t) < 0) w.row_negate(t);

    return SnfResult{std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::string group_to_string(const AbelianGroup& g) {
    if (g.trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank == 1) {
        os << "Z";
        first = false;
    } else if (g.free_rank > 1) {
        os << "Z^" << g.free_rank;
        first = false;
    }
    for (const BigInt& t : g.torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

void CWComplex::validate() const {
    if (cells.size() != dim + 1)
        throw InputError("CWComplex: cell counts must cover degrees 0..dim");
    if (coboundary.size() != dim)
        throw InputError("CWComplex: expected one coboundary matrix per degree 0..dim-1");
    for (std::size_t k = 0; k < dim; ++k) {
        if (coboundary[k].rows() != cells[k + 1] || coboundary[k].cols() != cells[k])
            throw InputError("CWComplex: coboundary " + std::to_string(k) +
                             " has shape " + std::to_string(coboundary[k].rows()) + "x" +
                             std::to_string(coboundary[k].cols()) + ", expected " +
                             std::to_string(cells[k + 1]) + "x" + std::to_string(cells[k]));
    }
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (!(coboundary[k + 1] * coboundary[k]).is_zero())
            throw CochainViolation("CWComplex: delta^" + std::to_string(k + 1) + " delta^" +
                                   std::to_string(k) + " != 0");
    }
}

AbelianGroup cohomology_group(const CWComplex& x, long long k) {
    if (k < 0) throw DegreeOutOfRange("cohomology degree must be nonnegative");
    x.validate();
    const std::size_t kk = static_cast<std::size_t>(k);
    if (kk > x.dim) return AbelianGroup{};  // no cells in this degree

    std::size_t rank_out = 0;
    if (kk < x.dim) rank_out = smith_normal_form(x.coboundary[kk]).rank();

    std::size_t rank_in = 0;
    std::vector<BigInt> torsion;
    if (kk > 0) {
        const SnfResult snf = smith_normal_form(x.coboundary[kk - 1]);
        rank_in = snf.rank();
        for (const BigInt& d : snf.elementary_divisors())
            if (d >= 2) torsion.push_back(d);
    }
    AbelianGroup g;
    g.free_rank = x.cells[kk] - rank_out - rank_in;
    g.torsion = std::move(torsion);
    return g;
}

AbelianGroup reduced_k0(const CWComplex& x) {
    if (x.dim > 3) throw DimensionTooHigh(x.dim);
    return cohomology_group(x, 2);
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

CWComplex torus_cw(std::size_t d) {
    if (d < 1 || d > 6) throw InputError("torus_cw: dimension must be in 1..6");
    CWComplex x;
    x.dim = d;
    x.cells.resize(d + 1);
    for (std::size_t k = 0; k <= d; ++k) x.cells[k] = binomial(d, k);
    for (std::size_t k = 0; k < d; ++k)
        x.coboundary.emplace_back(x.cells[k + 1], x.cells[k]);
    return x;
}

CWComplex sphere_cw(std::size_t n) {
    if (n < 1) throw InputError("sphere_cw: dimension must be >= 1");
    CWComplex x;
    x.dim = n;
    x.cells.assign(n + 1, 0);
    x.cells[0] = 1;
    x.cells[n] = 1;
    for (std::size_t k = 0; k < n; ++k)
        x.coboundary.emplace_back(x.cells[k + 1], x.cells[k]);
    return x;
}

CWComplex parse_cw(std::istream& in) {
    CWComplex x;
    bool have_header = false;
    std::vector<bool> have_cells;
    std::string raw;
    std::size_t lineno = 0;

    auto strip = [](std::string s) {
        const std::size_t hash = s.find('#');
        if (hash != std::string::npos) s.erase(hash);
        const std::size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const std::size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    auto parse_kv = [&](const std::string& tok, const std::string& key) -> long long {
        if (tok.rfind(key + "=", 0) != 0)
            throw ParseError(lineno, "expected " + key + "=<integer>, got '" + tok + "'");
        try {
            return std::stoll(tok.substr(key.size() + 1));
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad integer in '" + tok + "'");
        }
    };

    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "cw") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            std::string tok;
            if (!(ls >> tok)) throw ParseError(lineno, "missing dim=<d>");
            const long long d = parse_kv(tok, "dim");
            if (d < 0 || d > 16) throw ParseError(lineno, "dimension out of range");
            x.dim = static_cast<std::size_t>(d);
            x.cells.assign(x.dim + 1, 0);
            have_cells.assign(x.dim + 1, false);
            have_header = true;
        } else if (word == "cells") {
            if (!have_header) throw ParseError(lineno, "cells before header");
            std::string tk, tn;
            if (!(ls >> tk >> tn)) throw ParseError(lineno, "expected cells k=<k> n=<count>");
            const long long k = parse_kv(tk, "k");
            const long long cnt = parse_kv(tn, "n");
            if (k < 0 || static_cast<std::size_t>(k) > x.dim)
                throw ParseError(lineno, "cell degree out of range");
            if (cnt < 0) throw ParseError(lineno, "negative cell count");
            if (have_cells[k]) throw ParseError(lineno, "duplicate cells line for k=" + std::to_string(k));
            x.cells[k] = static_cast<std::size_t>(cnt);
            have_cells[k] = true;
        } else if (word == "coboundary") {
            if (!have_header) throw ParseError(lineno, "coboundary before header");
            for (bool h : have_cells)
                if (!h) throw ParseError(lineno, "coboundary before all cells lines");
            if (x.coboundary.empty()) x.coboundary.assign(x.dim, IntMatrix());
            std::string tk;
            if (!(ls >> tk)) throw ParseError(lineno, "expected coboundary k=<k>");
            const long long k = parse_kv(tk, "k");
            if (k < 0 || static_cast<std::size_t>(k) >= x.dim)
                throw ParseError(lineno, "coboundary degree out of range");
            IntMatrix m(x.cells[k + 1], x.cells[k]);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                std::string rowline;
                do {
                    if (!std::getline(in, rowline))
                        throw ParseError(lineno, "unexpected end of input inside coboundary block");
                    ++lineno;
                    rowline = strip(rowline);
                } while (rowline.empty());
                std::istringstream rs(rowline);
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    std::string num;
                    if (!(rs >> num))
                        throw ParseError(lineno, "row has fewer than " + std::to_string(m.cols()) +
                                                     " entries");
                    try {
                        m(r, c) = BigInt(num);
                    } catch (const std::exception&) {
                        throw ParseError(lineno, "bad integer '" + num + "'");
                    }
                }
                std::string extra;
                if (rs >> extra) throw ParseError(lineno, "row has trailing entries");
            }
            x.coboundary[static_cast<std::size_t>(k)] = std::move(m);
        } else {
            throw ParseError(lineno, "unknown directive '" + word + "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing 'cw dim=<d>' header");
    for (std::size_t k = 0; k <= x.dim; ++k)
        if (!have_cells[k]) throw ParseError(lineno, "missing cells line for k=" + std::to_string(k));
    // Missing blocks are zero maps of the correct shape.
    if (x.coboundary.empty()) x.coboundary.assign(x.dim, IntMatrix());
    for (std::size_t k = 0; k < x.dim; ++k) {
        if (x.coboundary[k].rows() == 0 && x.coboundary[k].cols() == 0)
            x.coboundary[k] = IntMatrix(x.cells[k + 1], x.cells[k]);
    }
    x.validate();
    return x;
}

CWComplex parse_cw_string(const std::string& text) {
    std::istringstream in(text);
    return parse_cw(in);
}

std::string format_cw(const CWComplex& x) {
    std::ostringstream os;
    os << "cw dim=" << x.dim << "\n";
    for (std::size_t k = 0; k <= x.dim; ++k)
        os << "cells k=" << k << " n=" << x.cells[k] << "\n";
    for (std::size_t k = 0; k < x.dim; ++k) {
        os << "coboundary k=" << k << "\n";
        const IntMatrix& m = x.coboundary[k];
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (c) os << " ";
                os << m(r, c);
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace phaseatlas::cohomology
