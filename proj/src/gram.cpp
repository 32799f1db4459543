#include "gramspec/gram.hpp"

#include <algorithm>

namespace gramspec {

const char* flavor_name(Flavor f) { return f == Flavor::symmetric ? "symmetric" : "hermitian"; }

GramTensor::GramTensor(Flavor flavor, int degree, Matrix m)
    : flavor_(flavor), degree_(degree), mat_(std::move(m)) {
    require(degree >= 0, errc::out_of_range, "negative degree");
    require(mat_.rows() == degree + 1 && mat_.cols() == degree + 1, errc::degree_mismatch,
            "Gram matrix size does not match degree");
    if (flavor_ == Flavor::symmetric)
        require(mat_.is_real(), errc::not_self_adjoint, "symmetric tensor with non-real entries");
    require(mat_.is_self_adjoint(), errc::not_self_adjoint, "Gram matrix is not self-adjoint");
}

BinaryForm GramTensor::mu() const {
    // coefficient of x^(2d-c) y^c collects A_jk over j+k = c
    std::vector<GaussianRational> coeffs(static_cast<size_t>(2 * degree_) + 1);
    for (int j = 0; j <= degree_; ++j)
        for (int k = 0; k <= degree_; ++k) coeffs[static_cast<size_t>(j + k)] += mat_.at(j, k);
    return BinaryForm(2 * degree_, std::move(coeffs));
}

int GramTensor::rank() const { return gramspec::rank(mat_); }

Subspace GramTensor::image() const { return matrix_image(mat_, degree_); }

bool GramTensor::psd() const { return is_psd(mat_, flavor_ == Flavor::hermitian); }

std::vector<PsdPivot> GramTensor::psd_decomposition() const {
    return gramspec::psd_decomposition(mat_, flavor_ == Flavor::hermitian);
}

GramTensor operator+(const GramTensor& a, const GramTensor& b) {
    require(a.flavor_ == b.flavor_, errc::mixed_flavors, "adding tensors of different flavor");
    require(a.degree_ == b.degree_, errc::degree_mismatch, "adding tensors of different degree");
    Matrix m(a.mat_.rows(), a.mat_.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = a.mat_.at(i, j) + b.mat_.at(i, j);
    return GramTensor(a.flavor_, a.degree_, std::move(m));
}

GramTensor operator*(const Rational& w, const GramTensor& t) {
    Matrix m(t.mat_.rows(), t.mat_.cols());
    GaussianRational c{w};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = c * t.mat_.at(i, j);
    return GramTensor(t.flavor_, t.degree_, std::move(m));
}

GramTensor gram_from_sos(Flavor flavor, const std::vector<BinaryForm>& ps) {
    require(!ps.empty(), errc::all_zero, "sum of squares over an empty family");
    int degree = ps.front().degree();
    Matrix a(degree + 1, degree + 1);
    for (const auto& p : ps) {
        require(p.degree() == degree, errc::degree_mismatch, "mixed degrees in square family");
        if (flavor == Flavor::symmetric) require_real(p, "symmetric square");
        for (int j = 0; j <= degree; ++j) {
            if (p.coeff(j).is_zero()) continue;
            for (int k = 0; k <= degree; ++k) a.at(j, k) += p.coeff(j) * p.coeff(k).conj();
        }
    }
    return GramTensor(flavor, degree, std::move(a));
}

namespace {

long face_coordinate_count(int r, Flavor flavor) {
    return flavor == Flavor::symmetric ? static_cast<long>(r) * (r + 1) / 2
                                       : static_cast<long>(r) * r;
}

// Coefficient matrix of the real-linear map from self-adjoint matrices on the
// family ps to real forms of doubled degree.  Column order: off-diagonal
// coordinates first (re then im per pair for hermitian), squares last.
// Returns the matrix and the number of off-diagonal columns.
std::pair<Matrix, int> relation_matrix(const std::vector<BinaryForm>& ps, Flavor flavor) {
    int r = static_cast<int>(ps.size());
    int d2 = 2 * ps.front().degree();
    std::vector<BinaryForm> columns;
    for (int j = 0; j < r; ++j) {
        for (int k = j + 1; k < r; ++k) {
            if (flavor == Flavor::hermitian) {
                BinaryForm pjk = ps[static_cast<size_t>(j)] * ps[static_cast<size_t>(k)].conj();
                BinaryForm pkj = ps[static_cast<size_t>(k)] * ps[static_cast<size_t>(j)].conj();
                columns.push_back(pjk + pkj);                                   // real part pair
                columns.push_back(GaussianRational(0, 1) * (pjk - pkj));        // imag part pair
            } else {
                columns.push_back(GaussianRational(2) *
                                  (ps[static_cast<size_t>(j)] * ps[static_cast<size_t>(k)]));
            }
        }
    }
    int off_diag = static_cast<int>(columns.size());
    for (int j = 0; j < r; ++j) {
        if (flavor == Flavor::hermitian)
            columns.push_back(ps[static_cast<size_t>(j)] * ps[static_cast<size_t>(j)].conj());
        else
            columns.push_back(ps[static_cast<size_t>(j)] * ps[static_cast<size_t>(j)]);
    }
    Matrix m(d2 + 1, static_cast<int>(columns.size()));
    for (size_t c = 0; c < columns.size(); ++c) {
        // self-adjoint combinations always produce real forms
        require(columns[c].is_real(), errc::internal_contradiction,
                "relation column unexpectedly non-real");
        for (int row = 0; row <= d2; ++row) m.at(row, static_cast<int>(c)) = columns[c].coeff(row);
    }
    return {std::move(m), off_diag};
}

void check_flavor_subspace(const Subspace& u, Flavor flavor) {
    require(u.dim() > 0, errc::zero_subspace, "face of the zero subspace");
    if (flavor == Flavor::symmetric)
        require(u.is_real(), errc::non_real_input, "symmetric face of a non-real subspace");
}

} // namespace

int face_dimension_formula(const Subspace& u, Flavor flavor) {
    check_flavor_subspace(u, flavor);
    long r = u.dim();
    long s = flavor == Flavor::symmetric ? product(u, u).dim() : product(u, conj_space(u)).dim();
    return static_cast<int>(face_coordinate_count(static_cast<int>(r), flavor) - s);
}

int face_dimension_kernel(const Subspace& u, Flavor flavor) {
    check_flavor_subspace(u, flavor);
    auto [m, off_diag] = relation_matrix(u.basis_forms(), flavor);
    (void)off_diag;
    return m.cols() - rank(m);
}

RelationReport diagonal_relations_only(const std::vector<BinaryForm>& ps, Flavor flavor) {
    require(!ps.empty(), errc::all_zero, "relation test over an empty family");
    if (flavor == Flavor::symmetric)
        for (const auto& p : ps) require_real(p, "symmetric relation test");
    Subspace spanned = Subspace::span(ps.front().degree(), ps);
    require(spanned.dim() == static_cast<int>(ps.size()), errc::dependent_input,
            "relation test needs a linearly independent family");
    auto [m, off_diag] = relation_matrix(ps, flavor);
    auto kernel = kernel_basis(m);
    RelationReport report;
    report.kernel_dim = static_cast<int>(kernel.size());
    report.diagonal_only = true;
    for (const auto& v : kernel) {
        for (int c = 0; c < off_diag && report.diagonal_only; ++c)
            if (!v[static_cast<size_t>(c)].is_zero()) report.diagonal_only = false;
        if (!report.diagonal_only) break;
    }
    return report;
}

FaceReport supporting_face(const std::vector<GramTensor>& thetas) {
    require(!thetas.empty(), errc::all_zero, "supporting face of an empty family");
    Flavor flavor = thetas.front().flavor();
    int degree = thetas.front().degree();
    for (const auto& t : thetas) {
        require(t.flavor() == flavor, errc::mixed_flavors, "generators of mixed flavor");
        require(t.degree() == degree, errc::degree_mismatch, "generators of mixed degree");
    }
    BinaryForm f = thetas.front().mu();
    for (const auto& t : thetas)
        require(t.mu() == f, errc::mu_mismatch, "generators represent different forms");
    for (const auto& t : thetas) require(t.psd(), errc::not_psd, "generator is not PSD");

    FaceReport report;
    report.flavor = flavor;
    report.degree = degree;
    report.generators = thetas;

    Subspace u(degree);
    long rank_sum = 0;
    std::vector<BinaryForm> pivot_family;
    for (const auto& t : thetas) {
        u = sum(u, t.image());
        auto pivots = t.psd_decomposition();
        rank_sum += static_cast<long>(pivots.size());
        for (auto& p : pivots) pivot_family.emplace_back(degree, std::move(p.column));
    }
    report.face_subspace = u;
    report.rank = u.dim();

    report.dimension = face_dimension_formula(u, flavor);
    report.dimension_by_kernel = face_dimension_kernel(u, flavor);
    require(report.dimension == report.dimension_by_kernel, errc::cross_check_failed,
            "face dimension mismatch between product formula and relation kernel");

    // Sufficient polyhedrality condition.  The PSD pivot columns span each
    // generator's image with positive weights, and relation-kernel support is
    // invariant under positive rescaling, so a diagonal-only kernel certifies
    // a polyhedral face exactly as a unit-weight square decomposition would.
    if (report.rank == rank_sum) {
        RelationReport rel = diagonal_relations_only(pivot_family, flavor);
        report.polyhedral = rel.diagonal_only;
        report.notes.push_back(std::string("relation kernel dimension ") +
                               std::to_string(rel.kernel_dim) +
                               (rel.diagonal_only ? ", diagonal-only" : ", off-diagonal relations"));
    } else {
        report.polyhedral = false;
        report.notes.push_back("generator pivot columns are dependent; polyhedral test skipped");
    }
    report.simplex = report.polyhedral &&
                     report.dimension == static_cast<int>(thetas.size()) - 1 &&
                     static_cast<long>(report.rank) == rank_sum;
    return report;
}

} // namespace gramspec
