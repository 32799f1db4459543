#include "gramspec/forms.hpp"

#include <algorithm>
#include <sstream>

namespace gramspec {

bool ProjectivePoint::canonical_less(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.infinite_ != b.infinite_) return !a.infinite_; // finite before (1:0)
    if (a.infinite_) return false;
    return lex_less(a.value_, b.value_);
}

BinaryForm::BinaryForm(int degree) : degree_(degree) {
    require(degree >= 0, errc::out_of_range, "negative degree");
    coeffs_.assign(static_cast<size_t>(degree) + 1, GaussianRational());
}

BinaryForm::BinaryForm(int degree, std::vector<GaussianRational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    require(degree >= 0, errc::out_of_range, "negative degree");
    require(coeffs_.size() == static_cast<size_t>(degree) + 1, errc::degree_mismatch,
            "coefficient count does not match degree");
}

BinaryForm BinaryForm::monomial(int degree, int j, GaussianRational c) {
    require(j >= 0 && j <= degree, errc::out_of_range, "monomial index out of range");
    BinaryForm f(degree);
    f.coeffs_[static_cast<size_t>(j)] = std::move(c);
    return f;
}

const GaussianRational& BinaryForm::coeff(int j) const {
    require(j >= 0 && j <= degree_, errc::out_of_range, "coefficient index out of range");
    return coeffs_[static_cast<size_t>(j)];
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const GaussianRational& c) { return c.is_zero(); });
}

bool BinaryForm::is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const GaussianRational& c) { return c.is_real(); });
}

BinaryForm BinaryForm::conj() const {
    BinaryForm out(degree_);
    for (size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = coeffs_[j].conj();
    return out;
}

BinaryForm BinaryForm::real_part() const {
    BinaryForm out(degree_);
    for (size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = GaussianRational(coeffs_[j].re());
    return out;
}

BinaryForm BinaryForm::imag_part() const {
    BinaryForm out(degree_);
    for (size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = GaussianRational(coeffs_[j].im());
    return out;
}

int BinaryForm::y_valuation() const {
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) return static_cast<int>(j);
    fail(errc::zero_polynomial, "y-valuation of the zero form");
}

GaussianRational BinaryForm::evaluate(const ProjectivePoint& at) const {
    if (at.is_infinity()) return coeffs_[0];
    return evaluate(at.value());
}

GaussianRational BinaryForm::evaluate(const GaussianRational& b) const {
    // f(b, 1) = sum c_j b^(d-j), Horner from c_0.
    GaussianRational acc;
    for (const auto& c : coeffs_) acc = acc * b + c;
    return acc;
}

uni::CPoly BinaryForm::dehomogenize() const {
    // coeff(j) multiplies x^(d-j), so reverse into lowest-degree-first order.
    uni::CPoly p(coeffs_.rbegin(), coeffs_.rend());
    uni::normalize(p);
    return p;
}

BinaryForm BinaryForm::homogenize(const uni::CPoly& p, int degree) {
    require(uni::degree(p) <= degree, errc::degree_mismatch,
            "polynomial does not fit the requested degree");
    BinaryForm f(degree);
    for (size_t i = 0; i < p.size(); ++i) f.coeffs_[static_cast<size_t>(degree) - i] = p[i];
    return f;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    require(a.degree_ == b.degree_, errc::degree_mismatch, "adding forms of different degree");
    BinaryForm out(a.degree_);
    for (size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
    return out;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    require(a.degree_ == b.degree_, errc::degree_mismatch, "subtracting forms of different degree");
    BinaryForm out(a.degree_);
    for (size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
    return out;
}

BinaryForm operator*(const GaussianRational& c, const BinaryForm& f) {
    BinaryForm out(f.degree_);
    for (size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] = c * f.coeffs_[j];
    return out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm out(a.degree_ + b.degree_);
    for (size_t j = 0; j < a.coeffs_.size(); ++j) {
        if (a.coeffs_[j].is_zero()) continue;
        for (size_t k = 0; k < b.coeffs_.size(); ++k)
            out.coeffs_[j + k] += a.coeffs_[j] * b.coeffs_[k];
    }
    return out;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm out(degree_);
    for (size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = -coeffs_[j];
    return out;
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j <= degree_; ++j) {
        const auto& c = coeffs_[static_cast<size_t>(j)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        int xp = degree_ - j;
        if (xp > 0) os << "x" << (xp > 1 ? "^" + std::to_string(xp) : "");
        if (j > 0) os << "y" << (j > 1 ? "^" + std::to_string(j) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

RootList::RootList(GaussianRational lead, std::vector<ProjectivePoint> points)
    : lead_(std::move(lead)), points_(std::move(points)) {
    std::sort(points_.begin(), points_.end(), ProjectivePoint::canonical_less);
}

BinaryForm expand_roots(const RootList& roots) {
    BinaryForm acc = BinaryForm::constant(roots.lead());
    for (const auto& pt : roots.points()) {
        BinaryForm factor(1);
        if (pt.is_infinity()) {
            factor = BinaryForm::monomial(1, 1); // y
        } else {
            factor = BinaryForm::monomial(1, 0) - BinaryForm::monomial(1, 1, pt.value()); // x - b y
        }
        acc = acc * factor;
    }
    return acc;
}

BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g) {
    bool fz = f.is_zero(), gz = g.is_zero();
    require(!(fz && gz), errc::both_zero, "gcd of two zero forms");
    auto monic = [](const BinaryForm& h) {
        int v = h.y_valuation();
        return (GaussianRational(1) / h.coeff(v)) * h;
    };
    if (fz) return monic(g);
    if (gz) return monic(f);
    // The point (1:0) enters with the minimum of the two y-valuations; the
    // finite part is the univariate gcd of the dehomogenizations.
    int v = std::min(f.y_valuation(), g.y_valuation());
    uni::CPoly u = uni::gcd_monic(f.dehomogenize(), g.dehomogenize());
    BinaryForm finite = BinaryForm::homogenize(u, uni::degree(u));
    if (v == 0) return finite;
    BinaryForm yv = BinaryForm::monomial(v, v); // y^v
    return finite * yv;
}

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& g) {
    require(!g.is_zero(), errc::division_by_zero, "form division by zero");
    if (f.is_zero()) {
        if (f.degree() < g.degree()) return std::nullopt;
        return BinaryForm(f.degree() - g.degree());
    }
    if (f.degree() < g.degree()) return std::nullopt;
    int vf = f.y_valuation(), vg = g.y_valuation();
    if (vf < vg) return std::nullopt;
    auto [quot, rem] = uni::divmod(f.dehomogenize(), g.dehomogenize());
    if (!rem.empty()) return std::nullopt;
    // Degrees of the dehomogenizations account for everything except the
    // y-multiplicities, which subtract: deg quot_form = deg f - deg g.
    int qdeg = f.degree() - g.degree();
    if (uni::degree(quot) > qdeg) return std::nullopt; // y-valuation deficit
    return BinaryForm::homogenize(quot, qdeg);
}

int sturm_real_root_count(const BinaryForm& f, const uni::Interval& iv) {
    require_real(f, "Sturm count");
    require(!f.is_zero(), errc::zero_polynomial, "Sturm count on the zero form");
    uni::CPoly p = f.dehomogenize();
    uni::QPoly q;
    q.reserve(p.size());
    for (const auto& c : p) q.push_back(c.re());
    uni::normalize(q);
    if (q.empty()) return 0; // pure power of y: no affine roots
    return uni::sturm_count(q, iv);
}

void require_real(const BinaryForm& f, const char* what) {
    if (!f.is_real()) fail(errc::non_real_input, std::string(what) + ": form has non-real coefficients");
}

} // namespace gramspec
