#include "gramspec/subspace.hpp"

#include <algorithm>

namespace gramspec {

namespace {

// Incremental Gauss-Jordan: rows stay fully reduced against each other, so
// sorting by pivot column at the end yields the RREF directly.  Stops
// absorbing once the span is the full ambient space.
class EchelonBuilder {
public:
    explicit EchelonBuilder(int cols) : cols_(cols) {}

    bool full() const { return static_cast<int>(rows_.size()) == cols_; }

    void absorb(std::vector<GaussianRational> v) {
        if (full()) return;
        reduce(v);
        int pivot = first_nonzero(v);
        if (pivot < 0) return;
        GaussianRational inv = GaussianRational(1) / v[static_cast<size_t>(pivot)];
        for (auto& c : v) c *= inv;
        for (auto& [p, row] : rows_) {
            const GaussianRational& factor = row[static_cast<size_t>(pivot)];
            if (factor.is_zero()) continue;
            GaussianRational f = factor;
            for (int j = 0; j < cols_; ++j) row[static_cast<size_t>(j)] -= f * v[static_cast<size_t>(j)];
        }
        rows_.emplace_back(pivot, std::move(v));
    }

    // residual of v modulo the current span; zero iff contained
    void reduce(std::vector<GaussianRational>& v) const {
        for (const auto& [p, row] : rows_) {
            const GaussianRational& c = v[static_cast<size_t>(p)];
            if (c.is_zero()) continue;
            GaussianRational f = c;
            for (int j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
        }
    }

    Matrix to_rref() {
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Matrix m(static_cast<int>(rows_.size()), cols_);
        for (size_t i = 0; i < rows_.size(); ++i)
            for (int j = 0; j < cols_; ++j) m.at(static_cast<int>(i), j) = rows_[i].second[static_cast<size_t>(j)];
        return m;
    }

private:
    static int first_nonzero(const std::vector<GaussianRational>& v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return static_cast<int>(j);
        return -1;
    }

    int cols_;
    std::vector<std::pair<int, std::vector<GaussianRational>>> rows_;
};

std::vector<GaussianRational> form_row(const BinaryForm& f) { return f.coeffs(); }

} // namespace

Subspace::Subspace(int degree) : degree_(degree), basis_(0, degree + 1) {
    require(degree >= 0, errc::out_of_range, "negative degree");
}

Subspace Subspace::span(int degree, const std::vector<BinaryForm>& gens) {
    EchelonBuilder builder(degree + 1);
    for (const auto& f : gens) {
        require(f.degree() == degree, errc::degree_mismatch, "span generator has wrong degree");
        builder.absorb(form_row(f));
        if (builder.full()) break;
    }
    Subspace u(degree);
    u.basis_ = builder.to_rref();
    return u;
}

Subspace Subspace::full(int degree) {
    Subspace u(degree);
    u.basis_ = Matrix::identity(degree + 1);
    return u;
}

std::vector<BinaryForm> Subspace::basis_forms() const {
    std::vector<BinaryForm> out;
    out.reserve(static_cast<size_t>(dim()));
    for (int i = 0; i < dim(); ++i) {
        std::vector<GaussianRational> row(static_cast<size_t>(degree_) + 1);
        for (int j = 0; j <= degree_; ++j) row[static_cast<size_t>(j)] = basis_.at(i, j);
        out.emplace_back(degree_, std::move(row));
    }
    return out;
}

bool Subspace::contains(const BinaryForm& f) const {
    require(f.degree() == degree_, errc::degree_mismatch, "containment query has wrong degree");
    std::vector<GaussianRational> v = f.coeffs();
    for (int i = 0; i < dim(); ++i) {
        // basis is RREF: pivot of row i is the first nonzero column
        int pivot = -1;
        for (int j = 0; j <= degree_; ++j)
            if (!basis_.at(i, j).is_zero()) {
                pivot = j;
                break;
            }
        const GaussianRational& c = v[static_cast<size_t>(pivot)];
        if (c.is_zero()) continue;
        GaussianRational factor = c;
        for (int j = 0; j <= degree_; ++j) v[static_cast<size_t>(j)] -= factor * basis_.at(i, j);
    }
    return std::all_of(v.begin(), v.end(), [](const GaussianRational& c) { return c.is_zero(); });
}

Subspace sum(const Subspace& u, const Subspace& w) {
    require(u.degree() == w.degree(), errc::degree_mismatch, "sum of subspaces of different degree");
    std::vector<BinaryForm> gens = u.basis_forms();
    auto wf = w.basis_forms();
    gens.insert(gens.end(), wf.begin(), wf.end());
    return Subspace::span(u.degree(), gens);
}

Subspace product(const Subspace& u, const Subspace& w) {
    require(u.dim() > 0 && w.dim() > 0, errc::zero_subspace, "product with a zero subspace");
    auto uf = u.basis_forms();
    auto wf = w.basis_forms();
    int degree = u.degree() + w.degree();
    EchelonBuilder builder(degree + 1);
    bool same = (u == w);
    for (size_t i = 0; i < uf.size() && !builder.full(); ++i) {
        // products commute, so for U*U the pairs j < i repeat
        for (size_t j = same ? i : 0; j < wf.size() && !builder.full(); ++j)
            builder.absorb((uf[i] * wf[j]).coeffs());
    }
    Subspace out(degree);
    out.basis_ = builder.to_rref();
    return out;
}

Subspace conj_space(const Subspace& u) {
    std::vector<BinaryForm> gens;
    for (const auto& f : u.basis_forms()) gens.push_back(f.conj());
    return Subspace::span(u.degree(), gens);
}

Subspace matrix_image(const Matrix& m, int degree) {
    require(m.rows() == degree + 1, errc::degree_mismatch, "column length does not match degree");
    std::vector<BinaryForm> cols;
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<GaussianRational> c(static_cast<size_t>(degree) + 1);
        for (int i = 0; i <= degree; ++i) c[static_cast<size_t>(i)] = m.at(i, j);
        cols.emplace_back(degree, std::move(c));
    }
    return Subspace::span(degree, cols);
}

} // namespace gramspec
