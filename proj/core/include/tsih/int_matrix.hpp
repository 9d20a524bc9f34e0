#ifndef TSIH_INT_MATRIX_HPP
#define TSIH_INT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tsih/prime_set.hpp"

namespace tsih {

using IntVec = std::vector<Int>;

// Dense integer matrix with arbitrary-precision entries, row-major.
// Zero-row and zero-column shapes are first-class citizens.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_rows(const std::vector<IntVec>& rows);
    static IntMatrix column(const IntVec& v);
    static IntMatrix diagonal(const IntVec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntVec col(std::size_t j) const;
    IntVec row(std::size_t i) const;
    void set_col(std::size_t j, const IntVec& v);

    // Columns of `right` appended after the columns of *this.
    IntMatrix hcat(const IntMatrix& right) const;
    // Keeps the listed columns, in order.
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntVec operator*(const IntVec& v) const;
    IntMatrix operator-() const;

    std::string to_string() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// U * A * V = D with U, V unimodular and D diagonal whose nonzero entries
// are positive and form a divisibility chain d1 | d2 | ... | dr.
struct SmithDecomposition {
    IntMatrix u, uinv, d, v, vinv;
    IntVec diag;  // the nonzero d1..dr

    std::size_t rank() const { return diag.size(); }
    // Re-multiplies everything; used by the self-check hook and the tests.
    bool verify(const IntMatrix& a) const;
};

// When enabled, snf() re-verifies U*A*V = D and the inverse pairs on every
// call. Tests switch this on; it defaults to off.
void set_self_check(bool enabled);
bool self_check();

// Bezout-based reduction with the pivot chosen by minimal absolute value.
SmithDecomposition snf(const IntMatrix& a);

// Columns form a basis of the lattice {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

// One integer solution of A x = b, or nullopt when none exists.
std::optional<IntVec> solve(const IntMatrix& a, const IntVec& b);

// Cached decomposition for repeated solves against a fixed matrix.
class LinearSolver {
  public:
    explicit LinearSolver(IntMatrix a);
    const IntMatrix& matrix() const { return a_; }
    std::optional<IntVec> solve(const IntVec& b) const;
    // Solves column-by-column; nullopt if any column has no solution.
    std::optional<IntMatrix> solve_matrix(const IntMatrix& b) const;

  private:
    IntMatrix a_;
    SmithDecomposition s_;
};

// Columns are a basis of W = {x : n x lies in the column span of d for some
// n in the span of s}. With the empty set this is the column span itself;
// with all primes it is the saturation.
IntMatrix weak_boundary_basis(const IntMatrix& d, const PrimeSet& s);

// Basis of the column span (image lattice) of a.
IntMatrix lattice_basis(const IntMatrix& a);

// Equality of the column-span lattices of a and b.
bool lattice_eq(const IntMatrix& a, const IntMatrix& b);

}  // namespace tsih

#endif
