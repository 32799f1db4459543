#include "gramspec/linalg.hpp"

namespace gramspec {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::conj_transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j).conj();
    return t;
}

bool Matrix::is_self_adjoint() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

bool Matrix::is_real() const {
    for (const auto& c : a_)
        if (!c.is_real()) return false;
    return true;
}

bool Matrix::is_zero_row(int i) const {
    for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    RrefResult out;
    out.rref = m;
    Matrix& a = out.rref;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < a.rows(); ++i) {
            if (!a.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(row, j));
        GaussianRational inv = GaussianRational(1) / a.at(row, col);
        for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            GaussianRational factor = a.at(i, col);
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

std::vector<std::vector<GaussianRational>> kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<GaussianRational> v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(free)] = GaussianRational(1);
        for (int i = 0; i < r.rank; ++i)
            v[static_cast<size_t>(r.pivot_cols[static_cast<size_t>(i)])] = -r.rref.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

void check_self_adjoint(const Matrix& m, bool hermitian) {
    require(m.rows() == m.cols(), errc::not_self_adjoint, "matrix is not square");
    if (!hermitian)
        require(m.is_real(), errc::not_self_adjoint, "symmetric tensors need real entries");
    require(m.is_self_adjoint(), errc::not_self_adjoint, "matrix is not self-adjoint");
}

// Shared LDL* elimination.  Returns false on a PSD refutation; fills pivots
// when requested.  Self-adjointness of the active block is preserved by the
// update a_ij -= a_ik conj(a_jk) / d.
bool ldl_eliminate(Matrix a, bool hermitian, std::vector<PsdPivot>* pivots) {
    (void)hermitian;
    int n = a.rows();
    for (int k = 0; k < n; ++k) {
        const GaussianRational& dkk = a.at(k, k);
        // diagonal entries of self-adjoint matrices are real
        if (sgn(dkk.re()) < 0) return false;
        if (dkk.is_zero()) {
            for (int j = k + 1; j < n; ++j)
                if (!a.at(k, j).is_zero()) return false; // [[0, a],[conj(a), c]] minor
            continue;
        }
        Rational d = dkk.re();
        if (pivots) {
            PsdPivot p;
            p.weight = d;
            p.column.assign(static_cast<size_t>(n), GaussianRational());
            for (int i = k; i < n; ++i) p.column[static_cast<size_t>(i)] = a.at(i, k) / GaussianRational(d);
            pivots->push_back(std::move(p));
        }
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) -= a.at(i, k) * a.at(j, k).conj() / dkk;
        }
        for (int i = k + 1; i < n; ++i) {
            a.at(i, k) = GaussianRational();
            a.at(k, i) = GaussianRational();
        }
    }
    return true;
}

} // namespace

bool is_psd(const Matrix& m, bool hermitian) {
    check_self_adjoint(m, hermitian);
    return ldl_eliminate(m, hermitian, nullptr);
}

std::vector<PsdPivot> psd_decomposition(const Matrix& m, bool hermitian) {
    check_self_adjoint(m, hermitian);
    std::vector<PsdPivot> pivots;
    if (!ldl_eliminate(m, hermitian, &pivots)) fail(errc::not_psd, "matrix is not PSD");
    return pivots;
}

} // namespace gramspec
