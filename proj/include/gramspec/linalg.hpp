#pragma once

/// @file linalg.hpp
/// @brief Dense exact linear algebra over Q(i): unique reduced row echelon
/// forms, canonical kernels, and a fraction-free-in-spirit PSD test via
/// pivoted LDL* elimination.

#include <vector>

#include "gramspec/scalar.hpp"

namespace gramspec {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        require(rows >= 0 && cols >= 0, errc::out_of_range, "negative matrix dimension");
    }
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int i, int j) { return a_[index(i, j)]; }
    const GaussianRational& at(int i, int j) const { return a_[index(i, j)]; }

    Matrix conj_transpose() const;
    bool is_self_adjoint() const;     // A == A*
    bool is_real() const;
    bool is_zero_row(int i) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    size_t index(int i, int j) const {
        require(i >= 0 && i < rows_ && j >= 0 && j < cols_, errc::out_of_range, "matrix index");
        return static_cast<size_t>(i) * cols_ + j;
    }
    int rows_, cols_;
    std::vector<GaussianRational> a_;
};

struct RrefResult {
    Matrix rref;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Gauss-Jordan reduction; pivots are the first nonzero entry of each column
/// scanning top-down, so the result is the unique RREF of the row space.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Canonical basis of the null space {v : Mv = 0}: one vector per free
/// column, unit at that column, solved pivot entries elsewhere, ordered by
/// free column index.
std::vector<std::vector<GaussianRational>> kernel_basis(const Matrix& m);

/// Exact positive semidefiniteness via pivoted LDL* elimination.  A negative
/// diagonal pivot refutes; a zero pivot must come with an all-zero active row
/// (otherwise a 2x2 minor with negative determinant refutes).  Throws
/// not_self_adjoint (hermitian=false additionally demands real entries).
bool is_psd(const Matrix& m, bool hermitian);

/// One positive-weight rank-one summand per elimination pivot:
/// A = sum_l weight_l * col_l * col_l^*.  The columns carry unit pivot
/// entries, are linearly independent, and span the column space of A.
/// Throws not_psd when the input is not PSD.
struct PsdPivot {
    Rational weight;                       // > 0
    std::vector<GaussianRational> column;  // length = dimension
};
std::vector<PsdPivot> psd_decomposition(const Matrix& m, bool hermitian);

} // namespace gramspec
