#pragma once

// Integer-exact cellular cohomology from coboundary matrices via Smith
// normal form, plus the reduced complex K-group identification valid for
// CW complexes of dimension <= 3.  Arbitrary-precision integers throughout:
// pivoting grows entries past 64 bits even on small inputs.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "phaseatlas/errors.hpp"

namespace phaseatlas::cohomology {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

struct SnfResult {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, d_1 | d_2 | ... | d_r > 0, rest zero
    IntMatrix v;  // unimodular, cols x cols

    std::size_t rank() const;
    std::vector<BigInt> elementary_divisors() const;  // the nonzero d_i
};

// U * A * V = D.  Pivot: smallest nonzero absolute value, ties broken by
// lowest (row, col); deterministic output.
SnfResult smith_normal_form(IntMatrix a);

struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;  // each >= 2, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

std::string group_to_string(const AbelianGroup& g);

struct CWComplex {
    std::size_t dim = 0;
    std::vector<std::size_t> cells;      // dim+1 counts
    std::vector<IntMatrix> coboundary;   // delta^k: cells[k+1] x cells[k], k = 0..dim-1

    // Shape chaining plus the cochain condition delta delta = 0.
    void validate() const;
};

AbelianGroup cohomology_group(const CWComplex& x, long long k);

// K0~(X) = H^2(X, Z) in the stable range dim <= 3; refuses higher dimensions.
AbelianGroup reduced_k0(const CWComplex& x);

// Minimal CW structure of T^d: binomial(d, k) cells per degree, zero maps.
CWComplex torus_cw(std::size_t d);

// Minimal CW structure of S^n: one 0-cell, one n-cell.
CWComplex sphere_cw(std::size_t n);

CWComplex parse_cw(std::istream& in);
CWComplex parse_cw_string(const std::string& text);
std::string format_cw(const CWComplex& x);

}  // namespace phaseatlas::cohomology
